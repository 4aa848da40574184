import pathlib
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from cxlab import fixtures  # noqa: E402
from cxlab.complex_core import build_complex  # noqa: E402

FIXTURE_DIR = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture
def triangle():
    return fixtures.triangle_boundary()


@pytest.fixture
def octahedron():
    return fixtures.octahedron()


@pytest.fixture
def path_cx():
    return fixtures.path_complex()


@pytest.fixture
def simplex3():
    return fixtures.single_simplex(3)


@pytest.fixture
def counterexample():
    return fixtures.extension_counterexample()


@pytest.fixture
def chain():
    return fixtures.chain_catalog()


def named_complexes():
    return {name: make() for name, make in fixtures.COMPLEXES.items()}


@st.composite
def small_complexes(draw, max_vertices=7, max_generators=6, flag=None):
    """Arbitrary (not necessarily flag) complexes on a handful of vertices."""
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(n)]
    gens = draw(st.lists(st.sets(st.sampled_from(names), min_size=1, max_size=n),
                         min_size=1, max_size=max_generators))
    flag_mode = draw(st.booleans()) if flag is None else flag
    return build_complex([sorted(g) for g in gens], flag_mode=flag_mode)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    outcome = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            name = rep.nodeid.rsplit("::", 1)[-1]
            if "test_acceptance.py" in rep.nodeid and name in CRITERIA:
                if rep.when == "call" or key != "passed":
                    outcome[name] = "PASS" if key == "passed" else "FAIL"
    if not outcome:
        return
    terminalreporter.section("acceptance criteria")
    for name, title in CRITERIA.items():
        terminalreporter.write_line(f"criterion {title}: {outcome.get(name, 'NOT RUN')}")
