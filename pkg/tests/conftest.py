import pytest

from cdlattice.catalog import load_bundled_catalog
from cdlattice.constructions import builtin_group


@pytest.fixture(scope="session")
def catalog():
    return load_bundled_catalog()


@pytest.fixture(scope="session")
def s4():
    return builtin_group("symmetric", 4)


@pytest.fixture(scope="session")
def small_groups(catalog):
    """Catalog groups of order at most 24."""
    return [e.group() for e in catalog if e.order <= 24]


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
