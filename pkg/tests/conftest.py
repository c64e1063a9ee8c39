import pytest

from bbpkit.config import get_settings
from bbpkit.formulas import catalog


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; drop the cache around every test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def plouffe():
    return catalog("plouffe")
