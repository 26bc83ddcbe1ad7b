"""Lattice construction, property predicates, width, and decomposition."""

import numpy as np
import pytest

import proflat.lattice as lat_mod
from proflat import (
    cyclic,
    direct_decompose,
    dihedral,
    elementary_abelian,
    enumerate_subgroups,
    find_isomorphisms,
    format_lattice_text,
    from_leq,
    has_diamond,
    has_pentagon,
    interval,
    is_distributive,
    is_modular,
    is_modular_element,
    modular_elements,
    parse_lattice_text,
    product_lattice,
    quaternion8,
    symmetric,
    width,
)
from proflat.errors import ConstructionError, DomainError, FormatError, ResourceLimitError

from _oracles import (
    oracle_count_isomorphisms,
    oracle_is_distributive,
    oracle_is_modular,
    oracle_modular_elements,
    oracle_width,
)


def _leq_from_pairs(n, pairs):
    leq = np.eye(n, dtype=bool)
    for a, b in pairs:
        leq[a, b] = True
    return leq


def pentagon():
    # N5: chain 0 < 1 < 2 < 4 and side 0 < 3 < 4
    return _leq_from_pairs(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)])


def diamond():
    # M3: bottom 0, atoms 1, 2, 3, top 4
    return _leq_from_pairs(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def chain(n):
    return _leq_from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_from_leq_tables_match_oracle():
    from _oracles import oracle_tables

    for leq in [pentagon(), diamond(), chain(4)]:
        lat = from_leq(leq)
        meet, join = oracle_tables(leq)
        assert (lat.meet == meet).all()
        assert (lat.join == join).all()


def test_from_leq_rejects_non_lattices():
    # two maximal elements: no join
    with pytest.raises(ConstructionError):
        from_leq(_leq_from_pairs(3, [(0, 1), (0, 2)]))
    # not antisymmetric
    bad = np.eye(2, dtype=bool)
    bad[0, 1] = bad[1, 0] = True
    with pytest.raises(ConstructionError):
        from_leq(bad)
    # not transitive
    with pytest.raises(ConstructionError):
        from_leq(_leq_from_pairs(3, [(0, 1), (1, 2)]))


def test_structure_accessors():
    lat = from_leq(pentagon())
    assert lat.n == 5
    assert lat.bottom == 0 and lat.top == 4
    assert sorted(lat.atoms()) == [1, 3]
    assert sorted(lat.coatoms()) == [2, 3]
    assert lat.lower_covers_of(2) == [1]
    assert lat.upper_covers_of(0) == [1, 3]
    assert lat.heights().tolist() == [0, 1, 2, 1, 3]
    assert not lat.is_chain()
    assert from_leq(chain(4)).is_chain()


def test_pentagon_predicates():
    lat = from_leq(pentagon())
    ok, wit = is_modular(lat)
    assert not ok
    x, y, z = wit
    assert lat.leq[x, z]
    assert lat.join[x, lat.meet[y, z]] != lat.meet[lat.join[x, y], z]
    ok, wit = is_distributive(lat)
    assert not ok
    x, y, z = wit
    assert lat.join[x, lat.meet[y, z]] != lat.meet[lat.join[x, y], lat.join[x, z]]
    assert has_pentagon(lat) is not None
    assert has_diamond(lat) is None


def test_diamond_predicates():
    lat = from_leq(diamond())
    assert is_modular(lat) == (True, None)
    ok, wit = is_distributive(lat)
    assert not ok
    a, b, c = has_diamond(lat)
    assert len({a, b, c}) == 3
    assert len({int(lat.join[a, b]), int(lat.join[a, c]), int(lat.join[b, c])}) == 1
    assert len({int(lat.meet[a, b]), int(lat.meet[a, c]), int(lat.meet[b, c])}) == 1
    assert has_pentagon(lat) is None


def test_chain_is_distributive():
    lat = from_leq(chain(5))
    assert is_distributive(lat) == (True, None)
    assert is_modular(lat) == (True, None)


@pytest.mark.parametrize("make", [pentagon, diamond, lambda: chain(4)])
def test_predicates_match_oracle(make):
    leq = make()
    lat = from_leq(leq)
    assert is_distributive(lat)[0] == oracle_is_distributive(leq)
    assert is_modular(lat)[0] == oracle_is_modular(leq)


def test_cover_criterion_path_agrees():
    # force the semimodularity route taken above the direct-scan cutoff
    small = lat_mod.DIRECT_SCAN_MAX
    lat_mod.DIRECT_SCAN_MAX = 3
    try:
        for make in (pentagon, diamond, lambda: chain(4)):
            leq = make()
            lat = from_leq(leq)
            assert is_modular(lat)[0] == oracle_is_modular(leq)
            assert is_distributive(lat)[0] == oracle_is_distributive(leq)
            ok, wit = is_modular(lat)
            if not ok:
                x, y, z = wit
                assert lat.leq[x, z]
                assert lat.join[x, lat.meet[y, z]] != lat.meet[lat.join[x, y], z]
    finally:
        lat_mod.DIRECT_SCAN_MAX = small


def test_modular_elements_pentagon():
    # frozen from oracle_modular_elements: only the bottom, the upper chain
    # node, and the top are modular in N5
    lat = from_leq(pentagon())
    assert modular_elements(lat).tolist() == [0, 2, 4]
    ok, wit = is_modular_element(lat, 3)
    assert not ok
    cond, x, z = wit
    assert cond in (1, 2)
    m = 3
    if cond == 1:
        assert lat.leq[x, z]
        assert lat.join[x, lat.meet[m, z]] != lat.meet[lat.join[x, m], z]
    else:
        assert lat.leq[m, z]
        assert lat.join[m, lat.meet[x, z]] != lat.meet[lat.join[m, x], z]


def test_modular_elements_match_oracle():
    for G in [symmetric(3), dihedral(8), quaternion8(), cyclic(12)]:
        leq = enumerate_subgroups(G).lattice.leq
        lat = from_leq(leq)
        assert modular_elements(lat).tolist() == oracle_modular_elements(leq)


def test_modular_element_range_check():
    with pytest.raises(DomainError):
        is_modular_element(from_leq(chain(3)), 5)


@pytest.mark.parametrize(
    "make, expected",
    [(lambda: chain(6), 1), (pentagon, 2), (diamond, 3)],
)
def test_width_small(make, expected):
    lat = from_leq(make())
    w, antichain = width(lat)
    assert w == expected == oracle_width(make())
    assert len(antichain) == w
    for i in antichain:
        for j in antichain:
            if i != j:
                assert not lat.leq[i, j]


def test_width_matches_oracle_on_group_lattices():
    # widths frozen from oracle_width: S3 -> 4, D8 -> 5, Q8 -> 3, C12 -> 2
    expected = {"S3": 4, "D8": 5, "Q8": 3, "C12": 2}
    for G in [symmetric(3), dihedral(8), quaternion8(), cyclic(12)]:
        lat = enumerate_subgroups(G).lattice
        w, antichain = width(lat)
        assert w == expected[G.name]
        assert w == oracle_width(lat.leq)
        assert len(set(antichain)) == w


def test_product_and_decompose():
    c2 = from_leq(chain(2))
    c3 = from_leq(chain(3))
    prod = product_lattice(c2, c3)
    assert prod.n == 6
    assert is_distributive(prod)[0]
    dec = direct_decompose(prod)
    assert dec.is_decomposable
    sizes = sorted(dec.factor(i)[0].n for i in range(len(dec.factor_tops)))
    assert sizes == [2, 3]


def test_decompose_indecomposable():
    for make in (pentagon, diamond):
        dec = direct_decompose(from_leq(make()))
        assert not dec.is_decomposable
        assert dec.factor_tops == [from_leq(make()).top]


def test_decompose_reassembles():
    # the product of the factors is isomorphic to the original lattice
    lat = enumerate_subgroups(cyclic(12)).lattice
    dec = direct_decompose(lat)
    assert dec.is_decomposable
    factors = [dec.factor(i)[0] for i in range(len(dec.factor_tops))]
    prod = factors[0]
    for f in factors[1:]:
        prod = product_lattice(prod, f)
    assert len(find_isomorphisms(lat, prod, limit=1)) == 1


def test_interval():
    lat = from_leq(pentagon())
    sub, nodes = interval(lat, 0, 2)
    assert sub.n == 3
    assert nodes.tolist() == [0, 1, 2]
    assert sub.is_chain()
    with pytest.raises(DomainError):
        interval(lat, 1, 3)


def test_find_isomorphisms_counts():
    # frozen from oracle_count_isomorphisms: both are height-2 lattices
    # with four atoms, so the isomorphisms permute the atoms freely
    l1 = enumerate_subgroups(symmetric(3)).lattice
    l2 = enumerate_subgroups(elementary_abelian(3, 2)).lattice
    isos = find_isomorphisms(l1, l2)
    assert len(isos) == 24
    assert len(isos) == oracle_count_isomorphisms(l1.leq, l2.leq)
    for iso in isos:
        p = np.array(iso)
        assert (l1.leq == l2.leq[np.ix_(p, p)]).all()
    assert isos == sorted(isos)


def test_find_isomorphisms_m3_self():
    # frozen from oracle_count_isomorphisms: 3! atom permutations
    m3 = from_leq(diamond())
    assert len(find_isomorphisms(m3, m3)) == 6


def test_find_isomorphisms_none_and_limit():
    c4 = from_leq(chain(4))
    c5 = from_leq(chain(5))
    assert find_isomorphisms(c4, c5) == []
    assert find_isomorphisms(from_leq(pentagon()), from_leq(diamond())) == []
    l1 = enumerate_subgroups(symmetric(3)).lattice
    assert len(find_isomorphisms(l1, l1, limit=5)) == 5


def test_find_isomorphisms_node_cap():
    big = enumerate_subgroups(elementary_abelian(2, 4)).lattice  # 67 nodes
    with pytest.raises(ResourceLimitError):
        find_isomorphisms(big, big)


def test_lattice_text_round_trip():
    for make in (pentagon, diamond, lambda: chain(4)):
        lat = from_leq(make())
        text = format_lattice_text(lat)
        back = parse_lattice_text(text)
        assert (back.leq == lat.leq).all()


def test_parse_lattice_text_errors():
    cases = [
        ("cover 0 1", 1),  # cover before size
        ("size 2\nsize 2", 2),
        ("size 0", 1),
        ("size 2\ncover 0 5", 2),
        ("size 2\ncover 0 0", 2),
        ("size 3\ncover 0 1\ncover 0 1", 3),
        ("size 2\nedge 0 1", 2),
        ("", 1),
    ]
    for text, lineno in cases:
        with pytest.raises(FormatError) as err:
            parse_lattice_text(text)
        assert err.value.line == lineno


def test_parse_lattice_text_rejects_transitive_covers():
    # a stated cover that the order makes redundant is not a cover
    text = "size 3\ncover 0 1\ncover 1 2\ncover 0 2"
    with pytest.raises(FormatError):
        parse_lattice_text(text)


def test_parse_lattice_text_rejects_non_lattice():
    text = "size 4\ncover 0 1\ncover 0 2"
    with pytest.raises(FormatError):
        parse_lattice_text(text)
