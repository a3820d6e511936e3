import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusdim.cactus import branch_active_vertices, decompose_cactus
from cactusdim.errors import InfeasibleParams
from cactusdim.generators import extremal_family, extremal_hubs, random_cactus, random_tree
from cactusdim.graph import cyclomatic_number


def test_random_cactus_is_deterministic():
    assert random_cactus(20, 3, seed=11) == random_cactus(20, 3, seed=11)
    assert random_cactus(20, 3, seed=11) != random_cactus(20, 3, seed=12)


def test_zero_cycles_gives_tree():
    g = random_cactus(15, 0, seed=3)
    assert g.n == 15 and g.m == 14 and g.is_connected()


@pytest.mark.parametrize(
    "args",
    [(5, 2), (0, 0), (8, -1), (9, 1, 2)],
)
def test_infeasible_params(args):
    with pytest.raises(InfeasibleParams):
        random_cactus(*args)
    with pytest.raises(InfeasibleParams):
        random_cactus(6, 1, thread_bias=1.5)


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(1, 40),
    c=st.integers(0, 10),
    girth=st.integers(3, 9),
    bias=st.floats(0, 1),
    seed=st.integers(0, 2**32),
)
def test_random_cactus_exact_size_and_cycles(n, c, girth, bias, seed):
    c = min(c, n // 3)
    g = random_cactus(n, c, max_girth=girth, thread_bias=bias, seed=seed)
    assert g.n == n and g.is_connected()
    d = decompose_cactus(g)
    assert d.c == c == cyclomatic_number(g)
    assert all(cyc.girth <= girth for cyc in d.cycles)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 60), seed=st.integers(0, 2**32))
def test_random_tree(n, seed):
    g = random_tree(n, seed=seed)
    assert g.n == n and g.is_connected() and cyclomatic_number(g) == 0
    assert g == random_tree(n, seed=seed)


def test_random_tree_rejects_empty():
    with pytest.raises(InfeasibleParams):
        random_tree(0)


@pytest.mark.parametrize("b,c", [(b, c) for b in range(3) for c in (2, 3)])
def test_extremal_family_shape(b, c):
    g = extremal_family(b, c)
    assert g.n == b + 2 + 7 * c
    assert g.m == b + 1 + 8 * c
    d = decompose_cactus(g)
    assert d.c == c and all(cyc.girth == 6 for cyc in d.cycles)
    hubs = set(extremal_hubs(b, c))
    for i in range(c):
        ba = branch_active_vertices(d, i)
        assert len(ba) == 1 and ba <= hubs


def test_extremal_family_needs_two_cycles():
    with pytest.raises(InfeasibleParams):
        extremal_family(0, 1)
