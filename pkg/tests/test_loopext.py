"""Lattice central extensions: commutator maps and trivializability."""

import random
from fractions import Fraction

import pytest

from tdual_lie.errors import RequiresExplicitB
from tdual_lie.loopext import (
    admissibility_check,
    commutator_from_level,
    commutator_from_matrix,
    fibrewise_trivializable,
    is_extension_trivial,
    lift_commutator,
)
from tdual_lie.rootdata import basic_form, named_group


def level_commutator(name, level):
    rd = named_group(name)
    return rd, commutator_from_level(rd, basic_form(rd, level))


def test_su2_any_level_vanishes():
    for level in (0, 1, 2, 5):
        _, b = level_commutator("SU(2)", level)
        assert b.is_zero()  # rank-1 antisymmetric form has nothing to hold


def test_su3_level_one_half():
    _, b = level_commutator("SU(3)", 1)
    assert b.values[0][1] == Fraction(1, 2)
    assert b.values[1][0] == Fraction(1, 2)  # -1/2 reduced into [0,1)
    assert not is_extension_trivial(b)


def test_su3_level_two_trivial():
    _, b = level_commutator("SU(3)", 2)
    assert is_extension_trivial(b)


def test_su4_level_two_trivial():
    _, b = level_commutator("SU(4)", 2)
    assert is_extension_trivial(b)


def test_requires_explicit_b():
    b2 = named_group("Spin(5)")
    with pytest.raises(RequiresExplicitB):
        commutator_from_level(b2, basic_form(b2, 1))
    psu3 = named_group("PSU(3)")
    with pytest.raises(RequiresExplicitB):
        commutator_from_level(psu3, basic_form(psu3, 1))


def test_biadditive():
    rd, b = level_commutator("SU(4)", 1)
    rng = random.Random(3)
    n = rd.rank
    for _ in range(50):
        x = [rng.randint(-4, 4) for _ in range(n)]
        xp = [rng.randint(-4, 4) for _ in range(n)]
        y = [rng.randint(-4, 4) for _ in range(n)]
        s = [a + c for a, c in zip(x, xp)]
        assert b.value(s, y) == (b.value(x, y) + b.value(xp, y)) % 1


def test_antisymmetric_on_vectors():
    _, b = level_commutator("SU(3)", 1)
    rng = random.Random(4)
    for _ in range(30):
        x = [rng.randint(-3, 3) for _ in range(2)]
        y = [rng.randint(-3, 3) for _ in range(2)]
        assert (b.value(x, y) + b.value(y, x)) % 1 == 0
        assert b.value(x, x) == 0


def test_lift_examples():
    _, b0 = level_commutator("SU(2)", 3)
    assert all(v == 0 for row in lift_commutator(b0).matrix for v in row)

    rd, b = level_commutator("SU(3)", 1)
    lift = lift_commutator(b)
    assert lift.matrix[0][1] == Fraction(1, 2)
    assert lift.matrix[1][0] == Fraction(-1, 2)
    assert lift.reduces_to(b)

    # 3x3 case with upper entries (1/2, 0, 1/2): the canonical lift keeps
    # exactly those above the diagonal.
    rd4, b4 = level_commutator("SU(4)", 1)
    lift4 = lift_commutator(b4)
    assert (lift4.matrix[0][1], lift4.matrix[0][2], lift4.matrix[1][2]) == (
        Fraction(1, 2), Fraction(0), Fraction(1, 2))
    assert lift4.reduces_to(b4)


def test_doubled_level_always_trivial():
    for name in ["SU(2)", "SU(3)", "SU(4)", "SU(5)", "Spin(8)", "E6"]:
        for k in (1, 2, 3):
            _, b = level_commutator(name, 2 * k)
            assert b.is_zero(), (name, k)


def test_fibrewise_trivializable_reports():
    rep = fibrewise_trivializable(named_group("SU(2)"), basic_form(named_group("SU(2)"), 7))
    assert rep.trivializable

    for n in (3, 4, 5, 6):
        rd = named_group(f"SU({n})")
        rep = fibrewise_trivializable(rd, basic_form(rd, 1))
        assert not rep.trivializable
        assert rep.witness_value == "1/2"

    rd = named_group("SU(3)")
    assert fibrewise_trivializable(rd, basic_form(rd, 2)).trivializable


def test_trivializable_matches_direct_test_randomized():
    rng = random.Random(17)
    names = ["SU(2)", "SU(3)", "SU(4)", "SU(5)", "Spin(8)", "E6", "E7"]
    for _ in range(20):
        name = rng.choice(names)
        level = rng.randint(0, 4)
        rd = named_group(name)
        b = commutator_from_level(rd, basic_form(rd, level))
        rep = fibrewise_trivializable(rd, basic_form(rd, level))
        assert rep.trivializable == b.is_zero()


def test_admissibility():
    rd = named_group("SU(3)")
    form = basic_form(rd, 1)
    good = commutator_from_level(rd, form)
    assert admissibility_check(rd, form, good).passed

    zero = commutator_from_matrix(rd, [[0, 0], [0, 0]])
    bad = admissibility_check(rd, form, zero)
    assert not bad.passed
    assert bad.half_pairing_violations

    level0 = basic_form(rd, 0)
    assert admissibility_check(rd, level0, zero).passed


def test_explicit_matrix_reduction():
    rd = named_group("SU(3)")
    b = commutator_from_matrix(rd, [["0", "3/2"], ["1/2", "0"]])
    assert b.values[0][1] == Fraction(1, 2)
