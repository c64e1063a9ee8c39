"""Which integers k have log k in the span of log 2 and log(2^N +- 1)."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import Matrix
from sympy.ntheory import factorint

from bbpkit.exceptions import DerivationError, DomainError
from bbpkit.formulas.derivations import derive_bernoulli_log2
from bbpkit.formulas.series import binary_family, regroup
from bbpkit.formulas.tags import linear_tag, same_constant
from bbpkit.formulas.transforms import combine, integer_scale, rebuild
from bbpkit.models import (
    BBPFormula,
    ConstantTag,
    GeneratorPower,
    Obstruction,
    SubgroupDecomposition,
)

logger = logging.getLogger(__name__)

MAX_N = 64


@lru_cache(maxsize=None)
def _factor(value: int) -> Dict[int, int]:
    return {int(p): int(e) for p, e in factorint(value).items()}


def generators(n_max: int) -> List[Tuple[int, str, int, int]]:
    """(value, label, N, sign) for 2 and every distinct 2^N +- 1 > 1 with N <= n_max."""
    out = [(2, "2", 1, 0)]
    seen = {2}
    for big_n in range(1, n_max + 1):
        for sign, label in ((-1, f"2^{big_n}-1"), (1, f"2^{big_n}+1")):
            value = 2 ** big_n + sign
            if value > 1 and value not in seen:
                seen.add(value)
                out.append((value, label, big_n, sign))
    return out


def _obstructions(
    k_factors: Dict[int, int],
    gens: List[Tuple[int, str, int, int]],
    rows: Dict[int, Tuple[int, ...]],
) -> List[Obstruction]:
    """Primes of k absent from every generator or tied to another prime with a different exponent in k."""
    found = []
    for p in sorted(k_factors):
        row = rows[p]
        labels = [gens[j][1] for j, e in enumerate(row) if e]
        if not labels:
            found.append(Obstruction(prime=p, generators=[], companions=[]))
            continue
        companions = [
            q for q, other in sorted(rows.items())
            if q != p and other == row and k_factors.get(q, 0) != k_factors[p]
        ]
        if companions:
            found.append(Obstruction(prime=p, generators=labels, companions=companions))
    if not found:
        for p in sorted(k_factors):
            labels = [gens[j][1] for j, e in enumerate(rows[p]) if e]
            found.append(Obstruction(prime=p, generators=labels, companions=[]))
    return found


def subgroup_decompose(k: int, n_max: int) -> SubgroupDecomposition:
    """Solve for rational exponents e_g with k = prod g^e_g over the generators.

    Free exponents are set to zero, so the first generators that span a prime
    are preferred. Failure is reported as a value carrying the obstructing
    primes.
    """
    if k < 2:
        raise DomainError("k must be at least 2")
    if not 1 <= n_max <= MAX_N:
        raise DomainError(f"n_max must lie in 1..{MAX_N}")

    gens = generators(n_max)
    k_factors = _factor(k)
    gen_factors = [_factor(value) for value, _, _, _ in gens]
    primes = sorted(set(k_factors).union(*gen_factors))
    rows = {p: tuple(f.get(p, 0) for f in gen_factors) for p in primes}

    system = Matrix([list(rows[p]) for p in primes])
    target = Matrix([k_factors.get(p, 0) for p in primes])
    try:
        solution, params = system.gauss_jordan_solve(target)
    except ValueError:
        logger.info("k = %d is outside the subgroup for N <= %d", k, n_max)
        return SubgroupDecomposition(
            k=k,
            n_max=n_max,
            success=False,
            obstructions=_obstructions(k_factors, gens, rows),
        )

    solution = solution.subs({tau: 0 for tau in params})
    factors = []
    for (value, label, _, _), e in zip(gens, solution):
        if e != 0:
            factors.append(
                GeneratorPower(generator=value, label=label, exponent=Fraction(int(e.p), int(e.q)))
            )
    tag = linear_tag((g.exponent, ConstantTag.log_of(g.generator)) for g in factors)
    if not same_constant(tag, ConstantTag.log_of(k)):
        raise DerivationError(f"exponents for k = {k} do not reproduce log {k}")
    return SubgroupDecomposition(
        k=k,
        n_max=n_max,
        success=True,
        integral=all(g.exponent.denominator == 1 for g in factors),
        factors=factors,
        tag=tag,
    )


def _generator_terms(power: GeneratorPower, n_max: int) -> List[Tuple[Fraction, BBPFormula]]:
    """log(2^N +- 1) = log(1 +- 2^-N) + N log 2."""
    log2 = derive_bernoulli_log2()
    if power.generator == 2:
        return [(power.exponent, log2)]
    for value, _, big_n, sign in generators(n_max):
        if value == power.generator:
            series = regroup(binary_family(big_n, sign), 1)
            return [(power.exponent, series), (power.exponent * big_n, log2)]
    raise DomainError(f"{power.generator} is not a generator for N <= {n_max}")


def subgroup_formula(
    decomposition: SubgroupDecomposition, max_period: Optional[int] = None
) -> BBPFormula:
    """A binary BBP-type formula for log k built from a successful decomposition."""
    if not decomposition.success:
        raise DomainError(f"k = {decomposition.k} has no decomposition to build from")
    terms: List[Tuple[Fraction, BBPFormula]] = []
    for power in decomposition.factors:
        terms.extend(_generator_terms(power, decomposition.n_max))
    formula = integer_scale(combine(terms, max_period=max_period))
    target = ConstantTag.log_of(decomposition.k)
    if not same_constant(formula.target, target):
        raise DerivationError(
            f"combined formula is tagged {formula.target}, expected log {decomposition.k}"
        )
    return rebuild(formula, target=target)
