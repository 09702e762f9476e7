import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import S, small_matroids
from rotunda import catalog as cat
from rotunda.errors import EnumerationBoundError, InvalidDecompositionError
from rotunda.matroid import UniformMatroid
from rotunda.roundness import is_round
from rotunda.treewidth import (
    TreeDecomposition,
    brute_force_treewidth,
    node_width,
    rotunda_tree_decomposition,
    rotunda_treewidth,
    round_flat_lower_bound,
    strictify,
    width,
)


def test_node_width_examples(u36, diamond_m):
    one = TreeDecomposition((), (u36.ground,))
    assert node_width(u36, one, 0) == 3
    assert width(u36, one).width == 3
    td = rotunda_tree_decomposition(diamond_m)
    assert [node_width(diamond_m, td, t) for t in range(2)] == [2, 2]
    leafy = TreeDecomposition(((0, 1),), (S(diamond_m, ["12", "13", "23"]), S(diamond_m, ["14", "24"])))
    # a leaf sees one branch, so its width is the rank of its own bag
    assert node_width(diamond_m, leafy, 1) == diamond_m.r(leafy.bags[1]) == 2


def test_leaf_width_is_bag_rank_when_rest_is_modular(path2_m):
    td = TreeDecomposition(((0, 1),), (0b01, 0b10))
    assert [node_width(path2_m, td, t) for t in (0, 1)] == [1, 1]
    assert width(path2_m, td).width == 1


def test_width_examples(diamond_m):
    assert width(diamond_m, rotunda_tree_decomposition(diamond_m)).width == 2


def test_treewidth_examples(u36, k4_m, diamond_m):
    assert brute_force_treewidth(u36) == 3
    assert brute_force_treewidth(k4_m) == 3
    assert brute_force_treewidth(diamond_m) == 2
    assert rotunda_treewidth(diamond_m) == 2
    for n in (3, 4, 5):
        assert rotunda_treewidth(cat.matroid_of(cat.complete_graph(n))) == n - 1
    assert rotunda_treewidth(cat.fano()) == 3


def test_round_flat_lower_bound_examples(u36, path2_m, pabx):
    assert round_flat_lower_bound(u36) == 3
    assert round_flat_lower_bound(path2_m) == 1
    assert round_flat_lower_bound(pabx) == 3


def test_validation(diamond_m):
    with pytest.raises(InvalidDecompositionError):
        width(diamond_m, TreeDecomposition((), (1,)))
    with pytest.raises(InvalidDecompositionError):
        width(diamond_m, TreeDecomposition(((0, 1), (1, 0)), (diamond_m.ground, 0)))
    with pytest.raises(EnumerationBoundError):
        brute_force_treewidth(UniformMatroid(2, 7))


def test_labelled_route_agrees():
    for M in cat.catalog(4, max_elements=4):
        assert brute_force_treewidth(M) == brute_force_treewidth(M, labelled=True), M.name


@settings(max_examples=40, deadline=None)
@given(small_matroids(max_elements=5), st.randoms(use_true_random=False))
def test_strictify_never_raises_node_width(M, rnd):
    if M.size == 0:
        return
    k = rnd.randint(1, 4)
    edges = tuple((rnd.randrange(v), v) for v in range(1, k))
    bags = [0] * k
    for e in range(M.n):
        for t in rnd.sample(range(k), rnd.randint(1, k)):
            bags[t] |= 1 << e
    td = TreeDecomposition(edges, tuple(bags))
    sd = strictify(td)
    assert sd.is_strict()
    assert all(node_width(M, sd, t) <= node_width(M, td, t) for t in range(k))


@settings(max_examples=30, deadline=None)
@given(small_matroids(max_elements=5))
def test_brute_force_bounds(M):
    tw = brute_force_treewidth(M)
    assert round_flat_lower_bound(M) <= tw <= M.full_rank
    if is_round(M):
        assert tw == M.full_rank
