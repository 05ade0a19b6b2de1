import pytest

from oideal.ideals import (UNIT, Ideal, colon, dimension, generic_combination_ideal, height,
                           ideal_ops, intersect, is_reduction, min_hitting_set, radical_member,
                           saturate)
from oideal.modules import FPModule, dual_generators, minimalize, omega
from oideal.poly import FreeElement, parse_ring

R2 = parse_ring("QQ[x,y]")


def I(text, ring=R2):
    return Ideal.parse(ring, text)


@pytest.mark.parametrize("op, a, b, expected", [
    ("quotient", "x", "x, y", "x"),
    ("quotient", "x^2, x*y", "y", "x"),
    ("sum", "x", "y", "x, y"),
    ("product", "x", "x, y", "x^2, x*y"),
    ("intersect", "x", "y", "x*y"),
    ("intersect", "x^2, y", "x, y^2", "x^2, y^2, x*y"),
    ("saturate", "x^2, x*y", "x, y", "x"),
])
def test_ideal_ops(op, a, b, expected):
    assert ideal_ops(op, I(a), I(b)).equals(I(expected))


def test_power_zero_is_unit():
    assert ideal_ops("power", I("x, y"), 0).is_unit()
    assert (I("x, y") ** 2).equals(I("x^2, x*y, y^2"))


def test_colon_by_polynomial():
    assert ideal_ops("quotient", I("x^2, x*y"), R2("y")).equals(I("x"))


def test_intersect_contained_in_both():
    a, b = I("x^2 - y, x*y"), I("y^2, x + y")
    both = intersect(a, b)
    assert both.issubset(a) and both.issubset(b)
    assert (a * b).issubset(both)


@pytest.mark.parametrize("f, ideal, expected", [
    ("x", "x^2", True),
    ("x", "y", False),
    ("x + y", "x^3, y^3", True),
    ("x*y", "x^2*y, x*y^2", True),
    ("x", "x^2*y, x*y^2", False),
])
def test_radical_member(f, ideal, expected):
    assert radical_member(R2(f), I(ideal)) is expected


def test_radical_member_on_cone():
    ring = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)")
    a = Ideal.parse(ring, "z0*z1, z1^2")
    assert radical_member(ring("z1"), a)
    assert not radical_member(ring("z0"), a)


@pytest.mark.parametrize("gens, expected", [
    ("a, b, c, d", 4),
    ("a*d - b*c", 1),
    ("a*b, c*d", 2),
    ("a^2, a*b", 1),
    ("1", UNIT),
])
def test_heights(qq_abcd, gens, expected):
    assert height(Ideal.parse(qq_abcd, gens)) == expected


def test_zero_ideal_height(qq_abcd):
    rep = dimension(Ideal(qq_abcd, []))
    assert rep.height == 0 and rep.dim_quotient == 4


def test_height_in_quotient_ring():
    ring = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)")
    assert height(Ideal(ring, ring.gens())) == 3
    assert height(Ideal.parse(ring, "z0, z1")) == 1


def test_height_json(qq_abcd):
    assert dimension(Ideal.parse(qq_abcd, "1")).to_json()["height"] == "unit"


@pytest.mark.parametrize("supports, expected", [
    ([0b1], 1), ([0b11, 0b110], 1), ([0b1, 0b10, 0b100], 3), ([], 0),
])
def test_min_hitting_set(supports, expected):
    assert min_hitting_set(supports) == expected


@pytest.mark.parametrize("J, I_, n", [
    ("x^2, y^2", "x^2, x*y, y^2", 1),
    ("x, y", "x, y", 0),
])
def test_reductions(J, I_, n):
    res = is_reduction(I(J), I(I_))
    assert res.confirmed and res.n == n


def test_not_a_reduction():
    res = is_reduction(I("x"), I("x, y"), n_max=4)
    assert not res.confirmed


def test_reduction_requires_containment():
    with pytest.raises(ValueError):
        is_reduction(I("x, y"), I("x"))


def test_generic_free_module():
    duals = [FreeElement.unit(R2, 2, 0), FreeElement.unit(R2, 2, 1)]
    res = generic_combination_ideal(duals, R2, "symbolic")
    assert res.height == 2


@pytest.mark.parametrize("d, bound", [(4, 4), (5, 4)])
def test_generic_random_koszul(d, bound):
    ring = parse_ring("GF(32003)[" + ",".join(f"z{i + 1}" for i in range(d)) + "]")
    duals = dual_generators(minimalize(omega(d, 1, ring)))
    res = generic_combination_ideal(duals, ring, "random", trials=3, seed=5)
    assert max(res.heights) == bound


def test_ring_mismatch():
    with pytest.raises(ValueError):
        ideal_ops("sum", I("x"), Ideal.parse(parse_ring("QQ[x,y,z]"), "x"))


def test_saturate_and_colon_agree_on_prime(qq_abcd):
    p = Ideal.parse(qq_abcd, "a, b")
    m = Ideal(qq_abcd, qq_abcd.gens())
    assert colon(p, m).equals(p)
    assert saturate(p * m, m).equals(p)
