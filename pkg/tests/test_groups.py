import numpy as np
import pytest

from commute_spectra import groups, zoo
from commute_spectra.groups import GroupError, centralizer_partition, closure, is_ac_group

from conftest import brute_center, brute_centralizer, brute_classes, brute_mul


def test_closure_dihedral_and_trivial():
    G = zoo.construct(zoo.Dihedral(3))
    assert G.order == 6
    T = closure([], lambda x, y: x, 0)
    assert T.order == 1 and T.center == (0,)


def test_closure_orders_gl23():
    assert zoo.construct(zoo.GL2(3)).order == (9 - 1) * (9 - 3)


def test_cap_exceeded():
    with pytest.raises(GroupError):
        closure([1], lambda x, y: (x + y) % 50, 0, max_order=10)


def test_non_associative_rule_rejected():
    # x*y = x - y mod 5 is closed and invertible on each side but not associative
    with pytest.raises(GroupError):
        closure([1], lambda x, y: (x - y) % 5, 0)


def test_rule_not_closed_rejected():
    # left multiplication by 2 is constant, so it has no inverse
    with pytest.raises(GroupError):
        closure([2], lambda x, y: (x * y) % 7 if x != 2 else 3, 1)


def test_table_and_lazy_paths_agree():
    spec = zoo.PSL2(4)
    G = zoo.construct(spec)
    H = zoo.sl2_char2(4, name="lazy")
    H_lazy = groups.FiniteGroup(H.name, H.elements, H.labels, H._multiply, H.generators,
                                H._right, H._left, H._parent, H._via, None)
    for x in range(0, H.order, 7):
        assert np.array_equal(H_lazy.row(x), H.table[x])
        assert np.array_equal(H_lazy.column(x), H.table[:, x])
    assert np.array_equal(H_lazy.inverse, H.inverse)
    assert H_lazy.center == H.center
    assert H_lazy.conjugacy_classes == H.conjugacy_classes
    assert G.order == 60


def test_table_limit_fallback():
    G = closure([(1, 0), (0, 1)], lambda x, y: ((x[0] + y[0]) % 40, (x[1] + y[1]) % 3), (0, 0), table_limit=50)
    assert G.table is None and G.order == 120
    assert G.mul(5, 7) == G.index(tuple((a + b) % m for a, b, m in zip(G.elements[5], G.elements[7], (40, 3))))
    assert G.is_abelian


def test_group_axioms_on_small_groups(small_groups):
    for G in small_groups.values():
        n = G.order
        assert all(G.mul(g, G.inverse[g]) == 0 for g in G)
        for _ in range(200):
            a, b = np.random.default_rng(1).integers(0, n, 2)
            assert G.mul(int(a), int(b)) == brute_mul(G, int(a), int(b))


def test_center_examples():
    assert len(zoo.construct(zoo.Dihedral(4)).center) == 2
    assert len(zoo.construct(zoo.Dihedral(3)).center) == 1
    Z5 = zoo.construct(zoo.Cyclic(5))
    assert Z5.center == tuple(range(5))


def test_center_and_centralizers_match_brute_force(small_groups):
    for G in small_groups.values():
        if G.order > 60:
            continue
        assert set(G.center) == brute_center(G)
        for x in range(G.order):
            assert set(G.centralizer(x)) == brute_centralizer(G, x)


def test_q8_centralizer_of_a():
    G = zoo.construct(zoo.Dicyclic(2))
    a = G.index((1, 0))
    C = set(G.centralizer(a))
    assert C == {G.index((i, 0)) for i in range(4)}
    assert set(G.centralizer(0)) == set(range(8))
    for z in G.center:
        assert len(G.centralizer(z)) == 8


@pytest.mark.parametrize("spec,k", [(zoo.Dihedral(3), 3), (zoo.Dicyclic(2), 5), (zoo.Cyclic(6), 6), (zoo.Sym(4), 5)])
def test_class_counts(spec, k):
    assert zoo.construct(spec).class_count == k


def test_classes_match_brute_force(small_groups):
    for G in small_groups.values():
        if G.order > 60:
            continue
        mine = sorted(map(sorted, G.conjugacy_classes))
        assert mine == sorted(map(sorted, brute_classes(G)))
        sizes = [len(c) for c in G.conjugacy_classes]
        assert sizes == sorted(sizes)
        for cls in G.conjugacy_classes:
            for g in cls:
                assert len(cls) * len(G.centralizer(g)) == G.order


@pytest.mark.parametrize("spec,n,size", [(zoo.Dihedral(4), 3, 4), (zoo.Dicyclic(2), 3, 4)])
def test_partition_small(spec, n, size):
    P = centralizer_partition(zoo.construct(spec))
    assert P.n == n and set(P.sizes) == {size} and P.count_total == n + 1


def test_partition_sz2():
    P = centralizer_partition(zoo.construct(zoo.Sz2()))
    assert sorted(P.sizes) == [4, 4, 4, 4, 4, 5]


def test_partition_rejects_abelian():
    with pytest.raises(GroupError):
        centralizer_partition(zoo.construct(zoo.Cyclic(4)))
    with pytest.raises(GroupError):
        is_ac_group(zoo.construct(zoo.Abelian(2, 2)))


def test_partition_invariants(small_groups):
    for G in small_groups.values():
        P = centralizer_partition(G)
        Z = set(P.center)
        covered = set().union(*map(set, P.centralizers))
        assert covered >= set(range(G.order)) - Z
        for C in P.centralizers:
            assert Z <= set(C)
            assert G.order % len(C) == 0
        assert G.order % len(Z) == 0
        keys = [(len(c), c) for c in P.centralizers]
        assert keys == sorted(keys)
        if is_ac_group(G):
            for i, C in enumerate(P.centralizers):
                for D in P.centralizers[i + 1:]:
                    assert set(C) & set(D) == Z


@pytest.mark.parametrize("spec,expected", [
    (zoo.Dihedral(4), True), (zoo.Sym(4), False), (zoo.Dicyclic(2), True), (zoo.Sym(5), False),
])
def test_is_ac(spec, expected):
    assert is_ac_group(zoo.construct(spec)) is expected


def test_s4_double_transposition_centralizer_is_nonabelian():
    G = zoo.construct(zoo.Sym(4))
    x = G.index((1, 0, 3, 2))
    C = G.centralizer(x)
    assert len(C) == 8
    assert not groups.is_abelian_subset(G, C)


def test_noncentral_centralizer_sum(small_groups):
    for G in small_groups.values():
        lhs, rhs = groups.noncentral_centralizer_sum(G)
        assert lhs == rhs


def test_direct_product():
    D8, Z2 = zoo.construct(zoo.Dihedral(4)), zoo.construct(zoo.Cyclic(2))
    P = groups.direct_product(D8, Z2)
    assert P.order == 16 and len(P.center) == 4
    Q = groups.direct_product(zoo.construct(zoo.Dicyclic(2)), Z2)
    assert Q.order == 16 and len(Q.center) == 4
    T = groups.direct_product(D8, zoo.construct(zoo.Cyclic(1)))
    assert T.order == 8
    # isomorphic tables via (g, 0) <-> g
    iso = [T.index((g, 0)) for g in range(8)]
    for a in range(8):
        for b in range(8):
            assert T.mul(iso[a], iso[b]) == iso[D8.mul(a, b)]
    with pytest.raises(GroupError):
        groups.direct_product(D8, Z2, max_order=10)


def test_quotient_by_center():
    G = zoo.construct(zoo.Order16("M16"))
    Q = groups.quotient_by_center(G)
    assert Q.order == 4 and Q.is_abelian
    assert groups.order_profile(Q) == {1: 1, 2: 3}
