import pytest

from bbpkit.exceptions import NeedsRegroupingError, UnknownFormulaError
from bbpkit.formulas import catalog, catalog_entry, catalog_names, regenerate, render_formula
from bbpkit.models import BBPFormula, ConstantTag
from bbpkit.verify import eval_bbp, reference, verify_formula

UNIT_BASE = {"log2-1", "log2-2", "log2-3", "log2-4", "log2-5", "machin", "leibniz"}


def test_names():
    names = catalog_names()
    assert len(names) == len(set(names))
    for name in ("plouffe", "bellard", "bbp-null-16", "null-64", "log2-bbp16", "machin", "leibniz"):
        assert name in names
    assert all(f"log2-{i}" in names for i in range(1, 12))


@pytest.mark.parametrize("name", catalog_names())
def test_every_entry_regenerates(name):
    regenerate(name)


@pytest.mark.parametrize("name", sorted(set(catalog_names()) - UNIT_BASE))
def test_every_convergent_entry_verifies(name):
    assert verify_formula(catalog(name), 96, name=name).verified


@pytest.mark.parametrize("name", sorted(UNIT_BASE))
def test_unit_base_entries_need_regrouping(name):
    with pytest.raises(NeedsRegroupingError):
        verify_formula(catalog(name), 64)


def test_unknown_name():
    with pytest.raises(UnknownFormulaError) as info:
        catalog("log2-99")
    assert isinstance(info.value, KeyError)
    assert "plouffe" in info.value.available
    assert "log2-99" in str(info.value)


def test_entries_carry_descriptions():
    entry = catalog_entry("null-64")
    assert entry.formula.target == ConstantTag.zero()
    assert entry.description.startswith("0 =")


def test_rendering():
    assert render_formula(catalog("bernoulli-log2")) == "log 2 = Σ_{k≥1} 2^(-k) [1/(k)]"
    assert render_formula(catalog("plouffe")) == (
        "π = Σ_{k≥0} 16^(-k) [4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6)]"
    )
    assert render_formula(catalog("machin")) == "π = 4 · Σ_{k≥0} (-1)^k [1/(2k+1)]"
    assert render_formula(catalog("log2-1")).startswith("log 2 = 1/2 + 1/2 · Σ_{k≥1} (-1)^k [-1/(k) + 1/(k+1)]")


@pytest.mark.parametrize("name", catalog_names())
def test_json_round_trip(name):
    formula = catalog(name)
    text = formula.model_dump_json()
    restored = BBPFormula.model_validate_json(text)
    assert restored == formula
    assert restored.model_dump_json() == text


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(set(catalog_names()) - UNIT_BASE))
def test_intervals_agree_across_precisions(name):
    formula = catalog(name)
    intervals = [eval_bbp(formula, bits) for bits in (64, 128, 256)]
    exact = reference(formula.target, 256)
    for interval in intervals:
        assert interval.overlaps(exact)
    for coarse, fine in zip(intervals, intervals[1:]):
        assert coarse.overlaps(fine)
