import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rankforge import DirectedGraph, load_gbpm  # noqa: E402
from rankforge.ranking import analyze  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return load_gbpm()


@pytest.fixture(scope="session")
def gbpm(corpus):
    return corpus.graph


@pytest.fixture(scope="session")
def gbpm_analysis(gbpm):
    return analyze(gbpm, alpha=0.85, tol=1e-12)


@pytest.fixture
def rng():
    return np.random.default_rng(20100914)


@pytest.fixture
def two_cycle():
    return DirectedGraph.from_edges(2, [(1, 2), (2, 1)])


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert it."""

    def record(name: str, ok: bool, detail: str) -> None:
        _ACCEPTANCE.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
