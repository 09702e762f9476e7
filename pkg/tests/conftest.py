import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from rotunda import catalog as cat  # noqa: E402
from rotunda.graphs import Graph  # noqa: E402
from rotunda.matroid import GraphicMatroid, LinearMatroid, UniformMatroid  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def pabx():
    return cat.pabx()


@pytest.fixture
def u36():
    return cat.u36()


@pytest.fixture
def diamond_m():
    return cat.matroid_of(cat.diamond(), "M(K4-e)")


@pytest.fixture
def k4_m():
    return cat.matroid_of(cat.complete_graph(4), "M(K4)")


@pytest.fixture
def path2_m():
    return cat.matroid_of(cat.path_graph(2), "M(P3)")


def S(M, labels: str | list) -> int:
    """Bitset from 'a b c', 'abc' or a list of labels."""
    if isinstance(labels, str):
        labels = labels.split() if " " in labels else list(labels)
    return M.subset(labels)


@st.composite
def graphs(draw, max_n: int = 6, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph([str(i) for i in range(n)], [(str(u), str(v)) for u, v in chosen])


@st.composite
def small_matroids(draw, max_elements: int = 7):
    kind = draw(st.sampled_from(["graphic", "uniform", "gf2", "gf3"]))
    if kind == "graphic":
        n = draw(st.integers(1, 5))
        verts = [str(i) for i in range(n)]
        pool = [(u, v) for u in verts for v in verts if u <= v]
        edges = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_elements))
        return GraphicMatroid(edges, vertices=verts)
    if kind == "uniform":
        n = draw(st.integers(0, max_elements))
        return UniformMatroid(draw(st.integers(0, n)), n)
    p = 2 if kind == "gf2" else 3
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, max_elements))
    matrix = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
                           min_size=rows, max_size=rows))
    return LinearMatroid(matrix, field=p)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(mod.line(n))
