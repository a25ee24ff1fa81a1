import pytest
from hypothesis import settings

from whopf import GF, Q, groupoid_algebra, small_groupoids

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def groupoids():
    return {G.name: G for G in small_groupoids()}


@pytest.fixture(scope="session")
def gf3_algebras(groupoids):
    return {name: groupoid_algebra(G, GF(3)) for name, G in groupoids.items()}


_CRITERIA = []


class _Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        line = f"criterion {self.number}: {'PASS' if exc_type is None else 'FAIL'}  {self.title}"
        if exc_type is not None:
            line += f"  ({exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        _CRITERIA.append(line)
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
