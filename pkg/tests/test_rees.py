import pytest

from oideal.ideals import Ideal
from oideal.poly import FreeElement, parse_ring
from oideal.rees import (analytic_spread, fiber_obstruction, module_reduction_test, rees_of_module,
                         theorem_1_2_check)
from oideal.modules import perpendicular
from oideal.verify.instances import curve_generators, curve_module

R2 = parse_ring("QQ[x,y]")


def test_rees_of_maximal_ideal():
    rp = rees_of_module(R2, [R2("x"), R2("y")])
    assert rp.analytic_spread == 2
    ring = rp.rees_ring
    assert rp.rees_ideal.equals(Ideal(ring, [ring("x*T2 - y*T1")]))
    assert rp.fiber_ideal.is_zero()


def test_rees_of_free_module():
    rp = rees_of_module(R2, [FreeElement.unit(R2, 2, 0), FreeElement.unit(R2, 2, 1)])
    assert rp.rees_ideal.is_zero() and rp.analytic_spread == 2


def test_curve_spread(qq_abcd):
    assert rees_of_module(qq_abcd, curve_generators(qq_abcd, 2)).analytic_spread == 3


@pytest.mark.parametrize("d", [2, 3, 4])
def test_spread_of_variables(d):
    ring = parse_ring("QQ[" + ",".join(f"z{i}" for i in range(d)) + "]")
    assert analytic_spread(rees_of_module(ring, ring.gens())) == d


def test_spread_principal():
    assert rees_of_module(R2, [R2("x^2 + x*y")]).analytic_spread == 1


def test_spread_with_relation():
    # x^2, xy, y^2 satisfy one quadratic fiber relation
    rp = rees_of_module(R2, [R2("x^2"), R2("x*y"), R2("y^2")])
    assert rp.analytic_spread == 2
    assert len(rp.fiber_ideal.reduced_generators()) == 1


def test_reduction_equal_modules():
    gens = [R2("x"), R2("y")]
    cert = module_reduction_test(R2, gens, gens)
    assert cert.confirmed and cert.n == 0


def test_proper_reduction_of_maximal_ideal_fails():
    M = [R2("x"), R2("y")]
    U = [R2("x^2"), R2("x*y"), R2("y^2")]
    cert = module_reduction_test(R2, U, M, n_max=3)
    assert not cert.confirmed and cert.not_integral


def test_module_reduction_found():
    cert = module_reduction_test(R2, [R2("x^2"), R2("y^2")], [R2("x^2"), R2("x*y"), R2("y^2")])
    assert cert.confirmed and cert.n == 1


def test_fiber_obstruction_zero_for_reduction():
    U = [FreeElement(R2, [R2("x^2")]), FreeElement(R2, [R2("y^2")])]
    M = [FreeElement(R2, [R2(s)]) for s in ("x^2", "x*y", "y^2")]
    assert fiber_obstruction(R2, U, M) == 0


def test_theorem_check_integral():
    M = [R2("x"), R2("y")]
    assert theorem_1_2_check(R2, M, M).verdict == "integral"


def test_theorem_check_curve_perp(qq_abcd):
    _, _, N = curve_module(2)
    P = perpendicular(N)
    rep = theorem_1_2_check(qq_abcd, list(P.embedding), list(P.embedding[:3]))
    assert rep.verdict == "PASS" and rep.bound == 3 and rep.colon_height <= 3


def test_theorem_check_monomial():
    ring = parse_ring("QQ[x,y,z]")
    rep = theorem_1_2_check(ring, [ring("x"), ring("y"), ring("z")], [ring("x")])
    assert rep.verdict == "PASS"
    assert rep.to_json()["t"] == 1


def test_empty_generators():
    with pytest.raises(ValueError):
        rees_of_module(R2, [])
