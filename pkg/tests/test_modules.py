import pytest

from oideal.gb import ResourceLimitError, contains, groebner, resource_limits
from oideal.ideals import Ideal, height
from oideal.modules import (FPModule, bareiss_det, dual_generators, check_Gs, double_perp_matches, ext_vanishes,
                            fitting_ideal, koszul_matrix, koszul_perp_check, matrix_rank, minimalize,
                            minors, module_colon, omega, order_ideal, perpendicular, rank,
                            submodule_colon, trace_ideal, wedge_element)
from oideal.poly import FreeElement, PolyMatrix, RingError, parse_matrix, parse_ring
from oideal.verify.instances import cone_module, curve_generators, curve_module, displayed_matrix

R2 = parse_ring("QQ[x,y]")


def test_minimalize_drops_unit_relation():
    N = FPModule(R2, 2, parse_matrix(R2, "[[1, x], [0, y]]"))
    M = minimalize(N)
    assert M.n_generators == 1
    assert Ideal(R2, list(M.relations.row(0).coords)).equals(Ideal.parse(R2, "y"))


def test_minimalize_keeps_minimal(qq_abcd):
    N = curve_module(2)[2]
    assert minimalize(N).n_generators == 4


def test_free_module_perp():
    P = perpendicular(FPModule.free(R2, 2))
    assert P.perp.relations == PolyMatrix.identity(R2, 2)
    assert rank(P.perp) == 0


def test_perp_of_curve_ideal(qq_abcd):
    gens = curve_generators(qq_abcd, 2)
    P = perpendicular(FPModule.from_submodule(qq_abcd, gens))
    assert rank(P.perp) == 3 and P.perp.n_generators == 4
    col = P.perp.relations.columns()
    assert Ideal(qq_abcd, list(col[0].coords)).equals(Ideal(qq_abcd, gens)) and len(col) == 1
    duals = dual_generators(P.perp)
    phi = displayed_matrix(qq_abcd, 2)
    assert all(contains(groebner(qq_abcd, duals), r) for r in phi.row_vectors())
    assert all(contains(groebner(qq_abcd, phi.row_vectors()), v) for v in duals)


def test_double_perp(qq_abcd):
    assert double_perp_matches(FPModule.from_submodule(qq_abcd, curve_generators(qq_abcd, 2)))


@pytest.mark.parametrize("route", ["row_ideal", "dual_kernel", "both"])
def test_order_ideal_third_generator(qq_abcd, route):
    N = curve_module(2)[2]
    res = order_ideal(N, [0, 0, 1, 0], route)
    assert res.ideal.equals(Ideal(qq_abcd, qq_abcd.gens()))
    if route == "both":
        assert res.agree


def test_order_ideal_wedge():
    ring = parse_ring("QQ[z1,z2,z3,z4]")
    O = omega(4, 1, ring)
    x = wedge_element(4, [(1, 2), (3, 4)], ring)
    assert order_ideal(O, x, "both").ideal.equals(Ideal(ring, ring.gens()))


def test_order_ideal_cone():
    ring, N = cone_module()
    res = order_ideal(N, [0, 1, 0], "both")
    assert res.agree and height(res.ideal) == 3 and rank(N) == 2


def test_order_ideal_zero_element(qq_abcd):
    assert order_ideal(curve_module(2)[2], [0, 0, 0, 0]).ideal.is_zero()


def test_fitting_identity():
    assert fitting_ideal(PolyMatrix.identity(R2, 2), 0).is_unit()


def test_fitting_diagonal():
    A = parse_matrix(R2, "[[x, 0], [0, y]]")
    assert fitting_ideal(A, 0).equals(Ideal.parse(R2, "x*y"))
    assert fitting_ideal(A, 1).equals(Ideal.parse(R2, "x, y"))
    assert fitting_ideal(A, 2).is_unit()


def test_fitting_three_by_n():
    ring = parse_ring("QQ[z0,z1,z2,z3]")
    A = parse_matrix(ring, "[[z0, z1, z2, z3], [z1, 0, 0, 0], [0, z2, 0, 0]]")
    assert fitting_ideal(A, 2).equals(Ideal(ring, ring.gens()))


def test_fitting_negative_index():
    with pytest.raises(ValueError):
        fitting_ideal(PolyMatrix.identity(R2, 2), -1)


@pytest.mark.parametrize("size", [3, 5])
def test_bareiss_matches_laplace(size):
    ring = parse_ring("QQ[" + ",".join(f"t{i}" for i in range(size * size)) + "]")
    gens = ring.gens()
    rows = [[gens[i * size + j] for j in range(size)] for i in range(size)]
    A = PolyMatrix(ring, rows, size, size)
    assert bareiss_det(rows, ring) == minors(A, size)[0] or bareiss_det(rows, ring) == -minors(A, size)[0]
    if size == 3:
        a, b, c, d, e, f, g, h, i = gens
        assert bareiss_det(rows, ring) == a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def test_module_colon_cases():
    f = R2("x^2 + y")
    M = FPModule(R2, 1, PolyMatrix(R2, [[f]], 1, 1))
    assert module_colon([], M).equals(Ideal(R2, [f]))
    assert module_colon([[1]], M).is_unit()


def test_colon_matches_order_ideal(qq_abcd):
    N = curve_module(2)[2]
    perp = perpendicular(N, minimal=False).perp
    others = [FreeElement.unit(qq_abcd, 4, i) for i in (0, 1, 3)]
    assert module_colon(others, perp).equals(order_ideal(N, [0, 0, 1, 0]).ideal)


def test_submodule_colon():
    U = [FreeElement(R2, [R2("x"), R2.zero()])]
    M = [FreeElement(R2, [R2.one(), R2.zero()])]
    assert submodule_colon(U, M).equals(Ideal.parse(R2, "x"))


def test_trace_ideals(qq_abcd):
    assert trace_ideal(FPModule.free(R2, 2)).is_unit()
    ring = parse_ring("QQ[z1,z2,z3,z4]")
    assert trace_ideal(omega(4, 1, ring)).equals(Ideal(ring, ring.gens()))


@pytest.mark.parametrize("text, expected", [
    ("[[x, y], [y, x]]", 2),
    ("[[x, y], [x, y]]", 1),
    ("[[0, 0], [0, 0]]", 0),
])
def test_matrix_rank(text, expected):
    assert matrix_rank(parse_matrix(R2, text)) == expected


@pytest.mark.parametrize("d", [3, 4])
def test_omega_rank(d):
    assert rank(omega(d, 1)) == d - 1


def test_koszul_shapes():
    A = koszul_matrix(2, 0)
    assert A.nrows == 2 and A.ncols == 1
    assert str(A[0, 0]) == "-z2" and str(A[1, 0]) == "z1"
    B = koszul_matrix(4, 0)
    assert (B.nrows, B.ncols) == (4, 6)
    assert all(sum(not B[i, j].is_zero() for i in range(4)) == 2 for j in range(6))


@pytest.mark.parametrize("d, i", [(2, 1), (3, -1), (1, 0)])
def test_koszul_range(d, i):
    with pytest.raises(ValueError):
        koszul_matrix(d, i)


def test_koszul_ring_too_small():
    with pytest.raises(RingError):
        koszul_matrix(3, 0, R2)


@pytest.mark.parametrize("d, i", [(3, 0), (3, 1), (4, 0), (4, 1), (5, 1)])
def test_koszul_perp(d, i):
    assert koszul_perp_check(d, i)


def test_gs_free_module():
    rep = check_Gs(FPModule.free(R2, 2))
    assert rep.holds and rep.max_s == float("inf")


def test_gs_curve_ideal(qq_abcd):
    rep = check_Gs(FPModule.from_submodule(qq_abcd, curve_generators(qq_abcd, 2)))
    assert rep.holds and rep.heights == {1: 2, 2: 4, 3: 4}
    assert rep.to_json()["s"] == "inf"


def test_gs_failure():
    ring = parse_ring("QQ[x,y,z]")
    rep = check_Gs(FPModule.from_submodule(ring, [ring("x^2"), ring("x*y"), ring("y^2")]))
    assert not rep.holds and rep.max_s == 2
    assert check_Gs(FPModule.from_submodule(ring, [ring("x^2"), ring("x*y"), ring("y^2")]), 2).holds


def test_ext_free_and_cyclic():
    rep = ext_vanishes(FPModule.free(R2, 2), [1, 2])
    assert all(rep.vanishes.values())
    cyc = FPModule(R2, 1, parse_matrix(R2, "[[x, y]]"))
    rep = ext_vanishes(cyc, [1, 2])
    assert rep.vanishes == {1: True, 2: False}


def test_ext_rejects_quotient_ring():
    ring, N = cone_module()
    with pytest.raises(RingError):
        ext_vanishes(N, [1])


def test_resolution_cap():
    with pytest.raises(ResourceLimitError):
        with resource_limits(max_pairs=1):
            ext_vanishes(curve_module(2)[2], [1, 2])


def test_module_json_round_trip(qq_abcd):
    N = curve_module(2)[2]
    again = FPModule.from_json(N.to_json())
    assert again.relations == N.relations and again.n_generators == 4
