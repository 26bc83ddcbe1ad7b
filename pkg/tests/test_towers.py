"""Towers of finite quotients: coherence, openness, trajectories, formats."""

import numpy as np
import pytest

from proflat import (
    CoherentSubgroup,
    Homomorphism,
    Perm,
    Tower,
    all_coherent_subgroups,
    builtin_tower,
    bundled_towers,
    closure,
    coherent_from_top,
    cyclic,
    cyclic_tower,
    constant_tower,
    dihedral,
    enumerate_subgroups,
    format_tower_text,
    is_open,
    is_procyclic,
    level_lattice_trajectory,
    parse_tower_text,
    permutable_in_limit,
    pi_star,
    product_tower,
    symmetric,
    type_iv_tower,
    zp_tower,
)
from proflat.errors import ConstructionError, DomainError, FormatError, ResourceLimitError

from _oracles import oracle_width


def test_tower_validation():
    g = cyclic(4)
    h = cyclic(2)
    with pytest.raises(ConstructionError):
        Tower([], [])
    with pytest.raises(ConstructionError):
        Tower([h, g], [])  # missing map
    down = Homomorphism.from_gen_images(g, h, [h.generators[0]])
    with pytest.raises(ConstructionError):
        Tower([g, h], [down])  # map connects the wrong way
    # a non-surjective map is rejected
    trivial = Homomorphism.from_gen_images(g, h, [Perm.identity(h.degree)])
    with pytest.raises(ConstructionError):
        Tower([h, g], [trivial])


def test_zp_tower_shape():
    t = zp_tower(2, 4)
    assert [g.order for g in t.levels] == [2, 4, 8, 16]
    assert t.depth == 4
    for f in t.maps:
        assert f.is_surjective()
    with pytest.raises(DomainError):
        zp_tower(6, 3)


def test_cyclic_tower_shape():
    t = cyclic_tower(6, 4)
    assert [g.order for g in t.levels] == [6, 36, 216, 1296]
    with pytest.raises(DomainError):
        cyclic_tower(1, 3)
    with pytest.raises(DomainError):
        cyclic_tower(6, 0)


def test_truncate():
    t = zp_tower(3, 4)
    s = t.truncate(2)
    assert [g.order for g in s.levels] == [3, 9]
    assert s.is_width_structure == t.is_width_structure
    with pytest.raises(DomainError):
        t.truncate(5)
    with pytest.raises(DomainError):
        t.truncate(0)


def test_constant_and_product_towers():
    t = product_tower(cyclic_tower(5, 3), constant_tower(cyclic(2), 3))
    assert [g.order for g in t.levels] == [10, 50, 250]
    with pytest.raises(DomainError):
        product_tower(cyclic_tower(5, 3), constant_tower(cyclic(2), 2))


def test_type_iv_tower_validation():
    t = type_iv_tower(2, 2, 3)
    assert [g.order for g in t.levels] == [64, 256, 1024]
    with pytest.raises(DomainError):
        type_iv_tower(2, 1, 3)  # p = 2 needs offset >= 2
    t3 = type_iv_tower(3, 1, 2)
    assert [g.order for g in t3.levels] == [81, 729]


def test_coherent_from_top_and_validation():
    t = zp_tower(2, 3)
    top = t.levels[-1]
    H = coherent_from_top(t, closure(top, [top.power_map(2)[top.gen_indices[0]]]))
    assert H.orders() == [1, 2, 4]
    assert H.indices() == [2, 2, 2]
    # a mismatched member sequence is rejected
    with pytest.raises(ConstructionError):
        CoherentSubgroup(t, [t.levels[0].full_subgroup(), t.levels[1].trivial_subgroup(), top.trivial_subgroup()])
    with pytest.raises(ConstructionError):
        CoherentSubgroup(t, [t.levels[0].full_subgroup()])


def test_all_coherent_subgroups():
    t = zp_tower(2, 2)
    seqs = all_coherent_subgroups(t)
    assert len(seqs) == 3  # one per subgroup of the deepest level
    orders = sorted(s.orders() for s in seqs)
    assert orders == [[1, 1], [1, 2], [2, 4]]


def test_is_open():
    t = zp_tower(2, 3)
    full = coherent_from_top(t, t.levels[-1].full_subgroup())
    rep = is_open(full)
    assert rep.is_open and rep.index == 1 and rep.stabilization_level == 1
    trivial = coherent_from_top(t, t.levels[-1].trivial_subgroup())
    rep = is_open(trivial)
    assert not rep.is_open and rep.stabilization_level is None
    assert rep.index == 8 and rep.depth == 3
    # index 2 stabilizes from level 1 on
    top = t.levels[-1]
    half = coherent_from_top(t, closure(top, [top.power_map(2)[top.gen_indices[0]]]))
    rep = is_open(half)
    assert rep.is_open and rep.index == 2 and rep.stabilization_level == 1


def test_is_procyclic():
    assert is_procyclic(zp_tower(2, 4))
    assert is_procyclic(cyclic_tower(6, 3))
    assert is_procyclic(builtin_tower("c5k_x_c2"))
    assert not is_procyclic(builtin_tower("iii_2_c3"))
    assert not is_procyclic(builtin_tower("d10_5k"))


def test_pi_star():
    assert pi_star(zp_tower(3, 4)) == (3,)
    assert pi_star(cyclic_tower(6, 2)) == (2, 3)
    assert pi_star(builtin_tower("d10_5k")) == (2, 5)


def test_permutable_in_limit():
    t = builtin_tower("d10_5k", 2)
    top = t.levels[-1]
    view = enumerate_subgroups(top)
    rotation = next(s for s in view.subgroups if s.order == 25)
    reflections = [s for s in view.subgroups if s.order == 2]
    H = coherent_from_top(t, reflections[0])
    K = coherent_from_top(t, reflections[1])
    R = coherent_from_top(t, rotation)
    assert permutable_in_limit(H, R)  # a rotation part is normal levelwise
    assert not permutable_in_limit(H, K)  # two reflections do not permute
    with pytest.raises(DomainError):
        permutable_in_limit(H, coherent_from_top(zp_tower(2, 3), zp_tower(2, 3).levels[-1].full_subgroup()))


# -- trajectories ---------------------------------------------------------------


def test_width_trajectories_match_oracle():
    # frozen from oracle_width at each level
    expected = {
        "zp2": [1, 1, 1, 1],
        "c6k": [2, 3, 4, 5],
        "c5k_x_c2": [2, 2, 2, 2],
        "iii_2_c3": [4, 4, 4, 4],
        "d10_5k": [6, 26, 126],
    }
    for tag, values in expected.items():
        t = builtin_tower(tag)
        rep = level_lattice_trajectory(t, "width")
        assert rep.values == values, tag
        for g, w in zip(t.levels, values):
            assert oracle_width(enumerate_subgroups(g).lattice.leq) == w


def test_trajectory_verdicts():
    assert level_lattice_trajectory(builtin_tower("zp2"), "width").verdict == "stabilized"
    assert level_lattice_trajectory(builtin_tower("c6k"), "width").verdict == "monotone-unbounded"
    assert level_lattice_trajectory(builtin_tower("d10_5k"), "width").verdict == "monotone-unbounded"
    assert level_lattice_trajectory(builtin_tower("zp3"), "distributive").verdict == "stabilized"


def test_trajectory_render():
    rep = level_lattice_trajectory(builtin_tower("c6k"), "width")
    assert rep.render() == "[2,3,4,5] monotone-unbounded"
    rep = level_lattice_trajectory(builtin_tower("zp2"), "distributive")
    assert rep.render() == "[true,true,true,true] stabilized"


def test_trajectory_predicates():
    t = builtin_tower("iii_2_c3", 2)
    assert level_lattice_trajectory(t, "distributive").values == [False, False]
    assert level_lattice_trajectory(t, "modular").values == [True, True]
    dec = level_lattice_trajectory(builtin_tower("c6k", 2), "decomposable")
    assert dec.values == [True, True]
    with pytest.raises(DomainError):
        level_lattice_trajectory(t, "nonsense")


def test_trajectory_truncation():
    t = builtin_tower("c6k")
    rep = level_lattice_trajectory(t, "width", max_lattice_nodes=10)
    assert rep.truncated
    assert rep.values == [2, 3]
    assert rep.verdict == "inconclusive"
    assert "over the bound" in rep.render()


def test_builtin_towers():
    towers = bundled_towers()
    assert list(towers) == ["zp2", "zp3", "c6k", "c5k_x_c2", "iii_2_c3", "iv_2_2", "d10_5k"]
    flags = {tag: t.is_width_structure for tag, t in towers.items()}
    assert flags == {
        "zp2": True,
        "zp3": True,
        "c6k": False,
        "c5k_x_c2": True,
        "iii_2_c3": True,
        "iv_2_2": False,
        "d10_5k": False,
    }
    with pytest.raises(DomainError):
        builtin_tower("nope")
    assert builtin_tower("zp2", 2).depth == 2


# -- text format -----------------------------------------------------------------


def test_tower_text_round_trip():
    for tag in ["zp2", "iii_2_c3"]:
        t = builtin_tower(tag, 3)
        text = format_tower_text(t)
        back = parse_tower_text(text)
        assert back.name == t.name
        assert [g.order for g in back.levels] == [g.order for g in t.levels]
        for f, g in zip(back.maps, t.maps):
            assert (f.elem_map == g.elem_map).all()
        # the reparsed tower carries no construction flag
        assert back.is_width_structure is None


def test_parse_tower_text_errors():
    good = format_tower_text(builtin_tower("zp2", 2))
    cases = [
        ("levels only, no header\n", 1),
        ("tower t; depth x;\nname a; degree 2; gens (1 2)", 1),
        ("tower t; depth 2;\nname a; degree 2; gens (1 2)", 1),  # missing level
        (good + "map 5; images ()", 4),
    ]
    for text, _ in cases:
        with pytest.raises(FormatError):
            parse_tower_text(text)


def test_parse_tower_text_max_order():
    text = format_tower_text(builtin_tower("zp2", 3))
    with pytest.raises((FormatError, ResourceLimitError)) as err:
        parse_tower_text(text, max_order=4)
    assert "bound" in str(err.value)


def test_format_tower_requires_name():
    t = zp_tower(2, 2)
    t.name = None
    with pytest.raises(DomainError):
        format_tower_text(t)
