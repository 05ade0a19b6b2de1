import pytest

from oideal.gb import (ResourceLimitError, contains, eliminate, groebner, kernel_of_map, lift,
                       normal_form, resource_limits, s_vector_residues, syzygies)
from oideal.ideals import Ideal
from oideal.poly import FreeElement, parse_ring
from oideal.verify.instances import curve_generators, displayed_matrix


def test_twisted_cubic_elimination():
    ring = parse_ring("QQ[x,y,z] order=elim(1)")
    gb = groebner(ring, [ring("y - x^2"), ring("z - x^3")])
    free = [v.coords[0] for v in eliminate(gb, 1)]
    assert free == [ring("y^3 - z^2")] or free == [ring("z^2 - y^3")]


def test_variables_basis(qq_xyz):
    gb = groebner(qq_xyz, [qq_xyz("x"), qq_xyz("y")])
    assert sorted(map(str, gb.polys())) == ["x", "y"]


def test_submodule_basis():
    ring = parse_ring("QQ[x,y]")
    vecs = [FreeElement(ring, [ring("x"), ring.zero()]), FreeElement(ring, [ring.zero(), ring("x")]),
            FreeElement(ring, [ring("y"), ring("y")])]
    gb = groebner(ring, vecs)
    assert len(gb) == 3
    assert s_vector_residues(gb) == []


@pytest.mark.parametrize("position", ["pot", "top"])
def test_submodule_membership(position):
    ring = parse_ring("QQ[x,y]")
    vecs = [FreeElement(ring, [ring("x"), ring("y")]), FreeElement(ring, [ring("y"), ring.zero()])]
    gb = groebner(ring, vecs, position=position)
    assert contains(gb, FreeElement(ring, [ring("x*y + y^2"), ring("y^2")]))
    assert not contains(gb, FreeElement(ring, [ring.zero(), ring("x")]))


def test_normal_forms(qq_abcd, qq_xyz):
    I = Ideal(qq_abcd, curve_generators(qq_abcd, 2))
    assert normal_form(I.gb(), qq_abcd("a*d - b*c")).is_zero()
    assert normal_form(groebner(qq_xyz, [qq_xyz("x"), qq_xyz("y")]), qq_xyz.one()) == qq_xyz.one()


@pytest.mark.parametrize("order", ["grlex", "lex"])
def test_single_step_reduction(order):
    # z0*z3 leads only when the order puts it above z1*z2
    ring = parse_ring(f"QQ[z0,z1,z2,z3] order={order}")
    gb = groebner(ring, [ring("z0*z3 - z1*z2")])
    assert normal_form(gb, ring("z0*z3")) == ring("z1*z2")


def test_grevlex_keeps_z0z3():
    ring = parse_ring("QQ[z0,z1,z2,z3]")
    gb = groebner(ring, [ring("z0*z3 - z1*z2")])
    assert normal_form(gb, ring("z1*z2")) == ring("z0*z3")


def test_eliminate_edge_cases():
    ring = parse_ring("QQ[x,T] order=elim(1)")
    assert eliminate(groebner(ring, [ring("T - x^2")]), 1) == []
    graph = parse_ring("QQ[x,y,T1,T2,T3] order=elim(2)")
    gb = groebner(graph, [graph("T1 - x"), graph("T2 - y"), graph("T3 - x*y")])
    out = Ideal(graph, [v.coords[0] for v in eliminate(gb, 2)])
    assert out.equals(Ideal(graph, [graph("T3 - T1*T2")]))
    plain = parse_ring("QQ[x,y] order=elim(0)")
    everything = groebner(plain, [plain("x^2 - y"), plain("x*y")])
    assert len(eliminate(everything, 0)) == len(everything)


def test_eliminate_requires_elimination_order(qq_xyz):
    with pytest.raises(ValueError):
        eliminate(groebner(qq_xyz, [qq_xyz("x")]), 1)


def test_syzygies_koszul():
    ring = parse_ring("QQ[x,y]")
    syz = list(syzygies(ring, [ring("x"), ring("y")]))
    assert len(syz) == 1
    v = syz[0]
    assert (v[0] * ring("x") + v[1] * ring("y")).is_zero()
    assert {str(v[0]), str(v[1])} in ({"y", "-x"}, {"-y", "x"})


def test_syzygies_of_nonzerodivisor(qq_xyz):
    assert list(syzygies(qq_xyz, [qq_xyz("x*y + z")])) == []


def test_syzygies_of_curve_generators(qq_abcd):
    from oideal.modules import FPModule, minimalize
    gens = curve_generators(qq_abcd, 2)
    syz = list(syzygies(qq_abcd, gens))
    for v in syz:
        assert sum((c * g for c, g in zip(v.coords, gens)), qq_abcd.zero()).is_zero()
    assert minimalize(FPModule.from_submodule(qq_abcd, syz)).n_generators == 4
    rows = displayed_matrix(qq_abcd, 2).row_vectors()
    assert all(contains(groebner(qq_abcd, syz), r) for r in rows)
    assert all(contains(groebner(qq_abcd, rows), v) for v in syz)


def test_lift_cofactors(qq_xyz):
    gens = [qq_xyz("x^2 - y"), qq_xyz("x*y - z")]
    target = qq_xyz("x^2*y - y^2 + z*x*y - z^2")
    coeffs = lift(qq_xyz, gens, target)
    assert coeffs is not None
    assert coeffs[0] * gens[0] + coeffs[1] * gens[1] == target
    assert lift(qq_xyz, gens, qq_xyz("x")) is None


def test_kernel_of_map():
    src, tgt = parse_ring("QQ[T1,T2]"), parse_ring("QQ[t]")
    ker = Ideal(src, kernel_of_map(src, tgt, [tgt("t^2"), tgt("t^3")]))
    assert ker.equals(Ideal(src, [src("T1^3 - T2^2")]))
    same = parse_ring("QQ[u,v]")
    assert kernel_of_map(same, same, same.gens()) == []


def test_kernel_is_curve_ideal(qq_abcd):
    tgt = parse_ring("QQ[t,u]")
    images = [tgt(s) for s in ("u^4", "t*u^3", "t^3*u", "t^4")]
    ker = Ideal(qq_abcd, kernel_of_map(qq_abcd, tgt, images))
    assert ker.equals(Ideal(qq_abcd, curve_generators(qq_abcd, 2)))


@pytest.mark.parametrize("limit, value", [("max_pairs", 2), ("max_basis", 2), ("max_degree", 3)])
def test_resource_limits(qq_xyz, limit, value):
    gens = [qq_xyz("x^5*y - z^7"), qq_xyz("x*y^3 - z^2"), qq_xyz("y^9 - x")]
    with pytest.raises(ResourceLimitError) as info:
        with resource_limits(**{limit: value}):
            groebner(qq_xyz, gens)
    assert info.value.limit == limit


def test_modular_basis():
    ring = parse_ring("GF(32003)[x,y,z]")
    gb = groebner(ring, [ring("x^2 - y*z"), ring("y^2 - x*z")])
    assert s_vector_residues(gb) == []
    assert contains(gb, ring("x^3 - y^3"))
