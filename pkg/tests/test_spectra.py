import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import block_diag

from commute_spectra import zoo
from commute_spectra.cgraph import commuting_graph, CommutingGraph
from commute_spectra.groups import GroupError
from commute_spectra.spectra import (
    Spectrum,
    SpectrumError,
    ac_spectrum,
    clique_union_spectrum,
    energy,
    graph_spectrum,
    numeric_spectrum,
    spectrum_from_eigenvalues,
)

from conftest import brute_adjacency, numeric_multiset


def S(*terms):
    return Spectrum.from_terms(terms)


def _graph(adj):
    adj = np.asarray(adj, dtype=bool)
    return CommutingGraph(None, np.arange(len(adj)), np.packbits(adj, axis=1))


def test_clique_union_examples():
    assert clique_union_spectrum([2, 2, 2]) == S((-1, 3), (1, 3))
    assert clique_union_spectrum([4, 3, 3, 3, 3, 3]) == S((-1, 13), (2, 5), (3, 1))
    assert clique_union_spectrum([1, 1, 1, 2]) == S((-1, 1), (0, 3), (1, 1))
    with pytest.raises(SpectrumError):
        clique_union_spectrum([])


def test_rendering():
    assert S((3, 3), (-1, 9)).render() == "(-1)^9 (3)^3"


@pytest.mark.parametrize("spec,expected", [
    (zoo.Dicyclic(2), S((-1, 3), (1, 3))),
    (zoo.Order16("Z2xD8"), S((-1, 9), (3, 3))),
    # 21 elements, trivial center: K_6 plus seven K_2
    (zoo.PQ(3, 7), S((-1, 12), (1, 7), (5, 1))),
])
def test_ac_spectrum(spec, expected):
    G = zoo.construct(spec)
    assert ac_spectrum(G) == expected
    assert numeric_multiset(brute_adjacency(G)) == expected.as_dict()


def test_ac_spectrum_rejects_non_ac():
    with pytest.raises(GroupError):
        ac_spectrum(zoo.construct(zoo.Sym(4)))


def test_numeric_examples():
    q8 = commuting_graph(zoo.construct(zoo.Dicyclic(2)))
    s = numeric_spectrum(q8)
    assert s.exact and s == S((-1, 3), (1, 3))
    k5 = _graph(np.ones((5, 5)) - np.eye(5))
    assert numeric_spectrum(k5) == S((-1, 4), (4, 1))
    assert numeric_spectrum(_graph(np.zeros((4, 4)))) == S((0, 4))


def test_numeric_cap():
    with pytest.raises(SpectrumError):
        numeric_spectrum(commuting_graph(zoo.construct(zoo.Sz2())), max_vertices=10)


def test_non_integral_cluster_kept_numeric():
    path = _graph([[0, 1, 0], [1, 0, 1], [0, 1, 0]])  # eigenvalues -sqrt2, 0, sqrt2
    s = numeric_spectrum(path)
    assert not s.exact
    assert [m for _, m in s.entries] == [1, 1, 1]
    assert s.entries[0][0] == pytest.approx(-2**0.5)


@pytest.mark.parametrize("spectrum,value", [
    (S((-1, 38), (1, 10), (2, 5), (3, 6)), 76),
    (S((-1, 3), (1, 3)), 6),
    (S((-1, 13), (1, 7), (5, 1)), 25),
])
def test_energy(spectrum, value):
    assert energy(spectrum) == value


def test_energy_zero_iff_no_edges():
    assert energy(numeric_spectrum(_graph(np.zeros((3, 3))))) == 0
    assert energy(clique_union_spectrum([1, 1, 2])) > 0


def test_spectrum_invariants_on_groups(small_groups):
    for G in small_groups.values():
        g = commuting_graph(G)
        s = graph_spectrum(g)
        assert s.size == g.vertex_count
        if s.exact:
            assert s.moment(1) == 0 and s.moment(2) == 2 * g.edge_count
        else:
            assert abs(s.moment(1)) <= 1e-6 * g.vertex_count
            assert abs(s.moment(2) - 2 * g.edge_count) <= 1e-6 * g.vertex_count
        if g.vertex_count <= 600:
            n = numeric_spectrum(g)
            if s.exact:
                assert n == s and n.snap_error < 1e-6


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=7))
def test_clique_union_formula_against_eigensolver(sizes):
    A = block_diag(*[np.ones((n, n)) - np.eye(n) for n in sizes])
    exact = clique_union_spectrum(sizes)
    assert numeric_multiset(A) == exact.as_dict()
    assert exact.moment(1) == 0
    assert exact.moment(2) == sum(n * (n - 1) for n in sizes)
    assert energy(exact) == 2 * (sum(sizes) - len(sizes))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=30), st.randoms())
def test_snapping_is_order_independent(values, rnd):
    noisy = [v + rnd.uniform(-1e-9, 1e-9) for v in values]
    shuffled = list(noisy)
    rnd.shuffle(shuffled)
    a, b = spectrum_from_eigenvalues(np.array(noisy)), spectrum_from_eigenvalues(np.array(shuffled))
    assert a == b and a.exact
    assert a.as_dict() == {v: values.count(v) for v in set(values)}
