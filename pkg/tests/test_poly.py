import pytest

from oideal.poly import (GF, QQ, MonomialOrder, ParseError, Ring, compare, parse_matrix, parse_poly,
                         parse_ring, parse_vector, poly_arith)
from oideal.poly.order import Ordering


def test_default_ring():
    ring = parse_ring("QQ[a,b,c,d]")
    assert ring.variables == ("a", "b", "c", "d")
    assert ring.weights == (1, 1, 1, 1)
    assert str(ring.order) == "grevlex"
    assert ring.field == QQ


def test_weighted_ring():
    ring = parse_ring("QQ[z1,z2,z3,z4,z5,z6] weights=(2,1,1,1,1,1)")
    assert ring("z1").degree() == 2
    assert ring("z1*z2 + z3^3").is_homogeneous()


@pytest.mark.parametrize("text, message", [
    ("GF(4)[x]", "non-prime"),
    ("QQ[x,x]", "duplicate"),
    ("QQ[x,y] weights=(1)", "one weight"),
    ("QQ[x] weights=(0)", "positive"),
    ("QQ[x] order=foo", "unknown order"),
])
def test_ring_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_ring(text)


def test_ring_options():
    ring = parse_ring("GF(7)[x,y] order=elim(1)")
    assert ring.field == GF(7)
    assert ring.order == MonomialOrder.elim(1)
    q = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)")
    assert len(q.quotient_polys()) == 1


def test_parse_basic(qq_abcd):
    f = parse_poly(qq_abcd, "a*d - b*c")
    assert len(f.terms) == 2
    assert parse_poly(qq_abcd, "a^0") == qq_abcd.one()
    g = parse_poly(qq_abcd, "c^3 - b*d^2")
    assert g.degree() == 3 and g.is_homogeneous()


def test_grevlex_leading_term(qq_abcd):
    # in grevlex the monomial with the smaller last exponent wins: bc > ad
    f = qq_abcd("a*d - b*c")
    assert f.leading_monomial() == (0, 1, 1, 0)
    lex = qq_abcd.with_order(MonomialOrder("lex"))
    assert f.change_ring(lex).leading_monomial() == (1, 0, 0, 1)


@pytest.mark.parametrize("text", ["x +", "x**2", "x^-1", "w", "(x", "x)"])
def test_parse_errors_have_offsets(qq_xyz, text):
    with pytest.raises(ParseError) as info:
        parse_poly(qq_xyz, text)
    assert info.value.offset >= 0


@pytest.mark.parametrize("text", [
    "0", "1", "-x", "x^2*y - 3/4*z", "x*y*z + x + y + z + 1", "-2*x^3 + 5",
])
def test_round_trip(qq_xyz, text):
    f = qq_xyz(text)
    assert qq_xyz(str(f)) == f


def test_gf_coefficients():
    ring = parse_ring("GF(5)[x]")
    assert ring("6*x") == ring("x")
    assert ring("5*x").is_zero()


@pytest.mark.parametrize("kind, a, b, weights, expected", [
    ("grevlex", (2, 0), (1, 1), (1, 1), Ordering.GT),
    ("grevlex", (1, 0, 0), (0, 2, 0), (2, 1, 1), Ordering.GT),
    ("lex", (1, 0), (0, 2), (1, 1), Ordering.GT),
    ("grlex", (0, 2), (1, 0), (1, 1), Ordering.GT),
    ("grevlex", (1, 1), (1, 1), (1, 1), Ordering.EQ),
])
def test_compare(kind, a, b, weights, expected):
    assert compare(MonomialOrder(kind), weights, a, b) == expected


def test_elimination_order():
    order = MonomialOrder.elim(1)
    # anything with the first variable beats anything without
    assert compare(order, (1, 1, 1), (1, 0, 0), (0, 5, 5)) == Ordering.GT


@pytest.mark.parametrize("op, a, b, expected", [
    ("mul", "x + y", "x - y", "x^2 - y^2"),
    ("mul", "x + y", "0", "0"),
    ("add", "x", "-x", "0"),
    ("sub", "x", "y", "x - y"),
])
def test_poly_arith(qq_xyz, op, a, b, expected):
    assert poly_arith(op, qq_xyz(a), qq_xyz(b)) == qq_xyz(expected)


def test_pow_and_truncate():
    ring = parse_ring("QQ[t]")
    f = poly_arith("pow", ring("1 + t"), 4)
    assert f.truncate(4) == ring("1 + 4*t + 6*t^2 + 4*t^3")
    assert poly_arith("pow", ring("t"), 0) == ring.one()


def test_vector_and_matrix(qq_xyz):
    v = parse_vector(qq_xyz, "[x, 0, y^2]")
    assert v.rank == 3 and v[1].is_zero()
    A = parse_matrix(qq_xyz, "[[x, y], [0, z]]")
    assert (A.nrows, A.ncols) == (2, 2)
    assert A.transpose()[1, 0] == qq_xyz("y")


def test_substitute_and_evaluate(qq_xyz):
    f = qq_xyz("x^2 + y*z")
    assert f.evaluate([1, 2, 3]) == 7
    g = f.substitute({0: qq_xyz("y")})
    assert g == qq_xyz("y^2 + y*z")


def test_ring_constructor_errors():
    from oideal.poly import RingError
    with pytest.raises(RingError):
        Ring(QQ, ("x",), (1, 2))
