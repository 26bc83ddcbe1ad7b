"""Permutation arithmetic and cycle notation."""

import pytest

from proflat import Perm
from proflat.errors import FormatError
from proflat.perms import format_cycles, parse_cycles


def test_identity_and_degree():
    p = Perm.identity(5)
    assert p.degree == 5
    assert p.is_identity()
    assert [p(i) for i in range(5)] == [0, 1, 2, 3, 4]


def test_images_must_be_a_permutation():
    with pytest.raises(ValueError):
        Perm([0, 0, 2])
    with pytest.raises(ValueError):
        Perm([1, 2, 3])


def test_immutable():
    p = Perm.identity(3)
    with pytest.raises(AttributeError):
        p.images = (1, 0, 2)


def test_from_cycles_zero_based():
    p = Perm.from_cycles([(0, 1, 2), (3, 4)], 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert Perm.from_cycles([], 3) == Perm.identity(3)


def test_from_cycles_rejects_bad_points():
    with pytest.raises(ValueError):
        Perm.from_cycles([(0, 3)], 3)
    with pytest.raises(ValueError):
        Perm.from_cycles([(0, 1), (1, 2)], 3)


def test_composition_order():
    # (p * q)(x) = p(q(x)): apply q first.
    p = Perm.from_cycles([(0, 1)], 3)
    q = Perm.from_cycles([(1, 2)], 3)
    assert (p * q)(2) == p(q(2)) == 0
    assert (p * q).images == (1, 2, 0)
    assert (q * p).images == (2, 0, 1)


def test_composition_degree_mismatch():
    with pytest.raises(ValueError):
        Perm.identity(3) * Perm.identity(4)


def test_inverse():
    p = Perm.from_cycles([(0, 1, 2)], 4)
    assert p * p.inverse() == Perm.identity(4)
    assert p.inverse() * p == Perm.identity(4)


@pytest.mark.parametrize(
    "cycles, degree, order",
    [([], 1, 1), ([(0, 1)], 2, 2), ([(0, 1, 2)], 3, 3), ([(0, 1, 2), (3, 4)], 5, 6)],
)
def test_order(cycles, degree, order):
    assert Perm.from_cycles(cycles, degree).order() == order


def test_cycles_round_trip():
    p = Perm.from_cycles([(0, 2, 4), (1, 3)], 6)
    assert Perm.from_cycles(p.cycles(), 6) == p
    # fixed points appear only on request
    q = Perm.from_cycles([(0, 1)], 4)
    assert q.cycles() == [(0, 1)]
    assert q.cycles(include_fixed=True) == [(0, 1), (2,), (3,)]


def test_eq_and_hash():
    p = Perm.from_cycles([(0, 1)], 3)
    q = Perm([1, 0, 2])
    assert p == q and hash(p) == hash(q)
    assert p != Perm.identity(3)
    assert p != "not a perm"


def test_format_cycles():
    assert format_cycles(Perm.identity(4)) == "()"
    # text notation is 1-based
    assert format_cycles(Perm.from_cycles([(0, 1, 2)], 4)) == "(1 2 3)"
    assert format_cycles(Perm.from_cycles([(0, 1), (2, 3)], 4)) == "(1 2)(3 4)"


@pytest.mark.parametrize(
    "text, images",
    [
        ("()", (0, 1, 2)),
        ("(1 2 3)", (1, 2, 0)),
        ("(1 2)(3)", (1, 0, 2)),
        ("  (1 3)  ", (2, 1, 0)),
    ],
)
def test_parse_cycles(text, images):
    assert parse_cycles(text, 3).images == images


def test_parse_format_round_trip():
    for cycles in [[], [(0, 1)], [(0, 2, 4), (1, 3)], [(0, 5), (1, 4), (2, 3)]]:
        p = Perm.from_cycles(cycles, 6)
        assert parse_cycles(format_cycles(p), 6) == p


@pytest.mark.parametrize(
    "text",
    ["(1 2", "(0 1)", "(1 4)", "(1 2)(2 3)", "(1 x)"],
)
def test_parse_cycles_errors(text):
    with pytest.raises(FormatError):
        parse_cycles(text, 3)


def test_parse_cycles_reports_line():
    with pytest.raises(FormatError) as err:
        parse_cycles("(1 2", 3, line=7)
    assert err.value.line == 7
