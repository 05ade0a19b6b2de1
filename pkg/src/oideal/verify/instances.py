"""Computations behind each scenario.  Every function returns a dict of named
values; the scenario JSON decides which of them are checked and how."""

from __future__ import annotations

import itertools
import random

from ..gb import kernel_of_map
from ..ideals import UNIT, Ideal, colon, generic_combination_ideal, height, is_reduction, radical_member
from ..modules import (FPModule, check_Gs, dual_generators, fitting_ideal, minimalize, module_colon,
                       omega, order_ideal, perpendicular, rank, trace_ideal, koszul_ring, wedge_element)
from ..poly import GF, QQ, FreeElement, PolyMatrix, Ring, parse_matrix, parse_ring
from ..rees import rees_of_module, theorem_1_2_check
from .chern import chern_closed_form, chern_parity


def _h(v):
    return "unit" if v == UNIT else v


def _strs(ideal: Ideal) -> list[str]:
    return [str(g) for g in ideal.reduced_generators()]


def _variables_ideal(ring: Ring, names) -> Ideal:
    return Ideal(ring, [ring.var(v) for v in names])


# -- first Chern class parity ------------------------------------------------------

def chern_table(params: dict, seed: int) -> dict:
    ns = range(params.get("n_min", 2), params.get("n_max", 12) + 1)
    table = {n: chern_parity(n) for n in ns}
    return {
        "parity_table": [table[n] for n in ns],
        "expected_table": [n % 2 for n in ns],
        "closed_form_table": [chern_closed_form(n) for n in ns],
    }


# -- monomial curves on the quadric ------------------------------------------------------

def curve_ring() -> Ring:
    return parse_ring("QQ[a,b,c,d]")


def curve_generators(ring: Ring, alpha: int) -> list:
    a = alpha
    return [ring(s) for s in (
        "b*c - a*d",
        f"c^{a + 1} - b^{a - 1}*d^2",
        f"a*c^{a} - b^{a}*d",
        f"b^{a + 1} - a^2*c^{a - 1}",
    )]


def displayed_matrix(ring: Ring, alpha: int) -> PolyMatrix:
    a = alpha
    return parse_matrix(ring, (
        f"[[-b^{a}, 0, a, c], [-a*c^{a - 1}, 0, b, d],"
        f" [-b^{a - 1}*d, a, -c, 0], [-c^{a}, b, -d, 0]]"))


def curve_module(alpha: int) -> tuple[Ring, list, FPModule]:
    """``N = I^perp``: four generators, the single relation is the column of generators of ``I``."""
    ring = curve_ring()
    f = curve_generators(ring, alpha)
    return ring, f, FPModule.from_columns(ring, 4, [f])


def curve_module_facts(params: dict, seed: int) -> dict:
    alpha = int(params["alpha"])
    ring, f, N = curve_module(alpha)
    I = Ideal(ring, f)
    target = parse_ring("QQ[t,u]")
    images = [target(s) for s in (f"u^{2 * alpha}", f"t^{alpha - 1}*u^{alpha + 1}",
                                  f"t^{alpha + 1}*u^{alpha - 1}", f"t^{2 * alpha}")]
    curve = Ideal(ring, kernel_of_map(ring, target, images))
    phi = displayed_matrix(ring, alpha)
    rows_annihilate = all(r.dot(FreeElement(ring, f)).is_zero() for r in phi.row_vectors())
    presentation = FPModule.from_submodule(ring, f)
    gs = check_Gs(presentation)
    ell = rees_of_module(ring, f).analytic_spread
    x = [0, 0, 1, 0]
    oi = order_ideal(N, x, "both")
    m = _variables_ideal(ring, "abcd")
    r = rank(N)
    ht_x = height(oi.ideal)
    perp = perpendicular(N, minimal=False).perp
    others = [FreeElement.unit(ring, 4, i) for i in (0, 1, 3)]
    colon_identity = module_colon(others, perp).equals(oi.ideal)
    third_column = Ideal(ring, [phi[i, 2] for i in range(4)])
    return {
        "mu_I": minimalize(presentation).n_generators,
        "curve_kernel_equals_I": curve.equals(I),
        "height_I": height(I),
        "G_infinity": gs.holds and gs.max_s == float("inf"),
        "fitting_heights": {str(k): _h(v) for k, v in gs.heights.items()},
        "analytic_spread": ell,
        "displayed_rows_are_syzygies": rows_annihilate,
        "order_ideal_gen3": _strs(oi.ideal),
        "order_ideal_gen3_is_maximal": oi.ideal.equals(m),
        "displayed_third_column_matches": third_column.equals(oi.ideal),
        "order_ideal_height": ht_x,
        "routes_agree": oi.agree,
        "colon_identity": colon_identity,
        "rank_N": r,
        "height_exceeds_rank": ht_x > r,
    }


# -- the 2 x 4 determinantal example ----------------------------------------------

PLUCKER_PAIRS = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def minors_setup():
    ring = parse_ring("QQ[z1,z2,z3,z4,z5,z6] weights=(2,1,1,1,1,1)")
    A = parse_matrix(ring, "[[z1, z2^2, z3^2, 0], [0, z4^2, z5^2, z6^2]]")
    p = {}
    for i, j in PLUCKER_PAIRS:
        p[(i, j)] = A[0, i - 1] * A[1, j - 1] - A[0, j - 1] * A[1, i - 1]
    return ring, A, p


def _plucker_value(v) -> object:
    # T12*T34 - T13*T24 + T14*T23 on coordinates ordered like PLUCKER_PAIRS
    return v[0] * v[5] - v[1] * v[4] + v[2] * v[3]


def _kernel_vector(rows: list[list]) -> list | None:
    """A spanning vector of the kernel of a 5 x 6 rational matrix of rank 5, else None."""
    from gmpy2 import mpq

    m = [[mpq(a) for a in r] for r in rows]
    ncols = 6
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if r != 5:
        return None
    free = next(c for c in range(ncols) if c not in pivots)
    v = [mpq(0)] * ncols
    v[free] = mpq(1)
    for i, c in enumerate(pivots):
        v[c] = -m[i][free]
    return v


def reduction_candidates(seed: int, budget: int, coefficients=(1, -1, 2, -2)):
    """Seeded 5-subsets of the minors and of pairwise sums ``p + c q``, as coefficient vectors."""
    pool = [tuple(1 if k == i else 0 for k in range(6)) for i in range(6)]
    for i, j in itertools.combinations(range(6), 2):
        for c in coefficients:
            pool.append(tuple(1 if k == i else (c if k == j else 0) for k in range(6)))
    rng = random.Random(seed)
    seen = set()
    for _ in range(budget):
        pick = tuple(sorted(rng.sample(range(len(pool)), 5)))
        if pick in seen:
            continue
        seen.add(pick)
        yield [pool[k] for k in pick]


def determinantal_reduction(params: dict, seed: int) -> dict:
    ring, A, p = minors_setup()
    minors = [p[k] for k in PLUCKER_PAIRS]
    I = Ideal(ring, minors)
    degrees = {g.degree() for g in minors}
    homogeneous = all(g.is_homogeneous() for g in minors) and len(degrees) == 1
    plucker = p[(1, 2)] * p[(3, 4)] - p[(1, 3)] * p[(2, 4)] + p[(1, 4)] * p[(2, 3)]
    fiber_ring = parse_ring("QQ[T12,T13,T14,T23,T24,T34]")
    fiber = Ideal(fiber_ring, kernel_of_map(fiber_ring, ring, minors))
    plucker_ideal = Ideal(fiber_ring, [fiber_ring("T12*T34 - T13*T24 + T14*T23")])
    N = perpendicular(FPModule.from_submodule(ring, minors)).perp
    budget = int(params.get("search_budget", 4000))
    n_max = int(params.get("n_max", 6))
    tried = screened = 0
    found = None
    for cand in reduction_candidates(seed, budget):
        tried += 1
        v = _kernel_vector([list(c) for c in cand])
        if v is None or _plucker_value(v) == 0:
            continue
        screened += 1
        gens = []
        for c in cand:
            g = ring.zero()
            for k, a in enumerate(c):
                if a:
                    g = g + minors[k] * a
            gens.append(g)
        J = Ideal(ring, gens)
        red = is_reduction(J, I, n_max)
        if not red.confirmed:
            continue
        found = (J, red)
        break
    out = {
        "minors_weighted_homogeneous": homogeneous,
        "minor_degree": min(degrees),
        "plucker_relation_vanishes": plucker.is_zero(),
        "fiber_is_plucker_hypersurface": fiber.equals(plucker_ideal),
        "rank_N": rank(N),
        "candidates_tried": tried,
        "candidates_screened": screened,
        "reduction_found": found is not None,
    }
    if found:
        J, red = found
        out["reduction_generators"] = [str(g) for g in J.generators]
        out["reduction_size"] = len(J.generators)
        out["reduction_n"] = red.n
        out["reduction_homogeneous"] = all(g.is_homogeneous() for g in J.generators)
        out["colon_height"] = _h(height(colon(J, I)))
    return out


# -- Koszul examples ----------------------------------------------------------------

def _pairs(s: int):
    return [(2 * k + 1, 2 * k + 2) for k in range(s)]


def koszul_wedge_order_ideal(params: dict, seed: int) -> dict:
    d, s = int(params["d"]), int(params["s"])
    ring = koszul_ring(d)
    O = omega(d, 1, ring)
    x = wedge_element(d, _pairs(s), ring)
    oi = order_ideal(O, x, "both")
    target = _variables_ideal(ring, ring.variables[:2 * s])
    r = rank(O)
    h = height(oi.ideal)
    return {
        "order_ideal": _strs(oi.ideal),
        "order_ideal_is_first_variables": oi.ideal.equals(target),
        "order_ideal_height": h,
        "expected_height": 2 * s,
        "rank": r,
        "expected_rank": d - 1,
        "routes_agree": oi.agree,
        "height_exceeds_rank": h > r,
    }


def generic_koszul_heights(params: dict, seed: int) -> dict:
    d, i = int(params["d"]), int(params.get("i", 1))
    p = int(params.get("p", 32003))
    trials = int(params.get("trials", 7))
    ring = koszul_ring(d, GF(p) if p else QQ)
    O = omega(d, i, ring)
    duals = dual_generators(minimalize(O))
    res = generic_combination_ideal(duals, ring, "random", trials, seed)
    r = rank(O)
    heights = [_h(h) for h in res.heights]
    return {
        "rank": r,
        "heights": heights,
        "max_height": max(res.heights),
        "all_heights_at_most_rank": all(h <= r for h in res.heights),
        "trials": len(heights),
    }


# -- the quadric cone ---------------------------------------------------------------------

def cone_module() -> tuple[Ring, FPModule]:
    ring = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)")
    M = FPModule.from_submodule(ring, [ring("z0^2"), ring("z0*z1"), ring("z1^2")])
    return ring, perpendicular(M).perp


def cone_order_ideal(params: dict, seed: int) -> dict:
    ring, N = cone_module()
    oi = order_ideal(N, [0, 1, 0], "both")
    target = _variables_ideal(ring, ring.variables)
    r = rank(N)
    h = height(oi.ideal)
    return {
        "rank_N": r,
        "order_ideal": _strs(oi.ideal),
        "order_ideal_is_maximal": oi.ideal.equals(target),
        "order_ideal_height": h,
        "routes_agree": oi.agree,
        "height_exceeds_rank": h > r,
    }


# -- trace ideal of the curve module -----------------------------------------------------------

def curve_trace_sharpness(params: dict, seed: int) -> dict:
    alpha = int(params.get("alpha", 2))
    i = int(params.get("i", 1))
    ring, f, N = curve_module(alpha)
    x = [0, 0, 1, 0]
    ox = order_ideal(N, x).ideal
    tr = trace_ideal(N)
    rad_equal = all(radical_member(g, ox) for g in tr.generators) and \
        all(radical_member(g, tr) for g in ox.generators)
    sum_route = Ideal(ring, [g for k in range(4)
                             for g in order_ideal(N, FreeElement.unit(ring, 4, k)).ideal.generators])
    r = rank(N)
    duals = dual_generators(N)
    m = minimalize(FPModule.from_submodule(ring, duals)).n_generators
    bound = (r - 2) * (m - r + 3) + (r - 3) * i
    # U = R x: the order ideal of the submodule is that of its generator
    ht_u = height(ox)
    return {
        "rank_N": r,
        "mu_dual": m,
        "bound": bound,
        "height_order_ideal_U": ht_u,
        "radical_trace_equals_radical_order_ideal": rad_equal,
        "trace_equals_sum_of_order_ideals": tr.equals(sum_route),
    }


# -- Fitting ideals after appending an element ---------------------------------------------------

def appended_element_fitting(params: dict, seed: int) -> dict:
    d = int(params.get("d", 4))
    ring = koszul_ring(d)
    O = omega(d, 1, ring)
    x = wedge_element(d, _pairs(d // 2), ring)
    n = O.n_generators
    z = ring.zero()
    cols = [tuple(c.coords) + (z,) for c in O.relations.columns()]
    cols.append(tuple(-c for c in x.coords) + (ring.one(),))
    psi = PolyMatrix.from_columns(ring, cols, n + 1)
    psi_short = psi.submatrix(list(range(n)), list(range(psi.ncols)))
    n_max = int(params.get("n_max", 4))
    results = {}
    for k in range(1, psi.ncols + 1):
        big = fitting_ideal(psi, psi.nrows - k)
        small = fitting_ideal(psi_short, psi_short.nrows - k)
        if big.is_zero():
            results[str(k)] = True
            continue
        results[str(k)] = is_reduction(small, big, n_max).confirmed
    return {
        "order_ideal_height": height(order_ideal(O, x).ideal),
        "rank": rank(O),
        "minor_sizes_checked": len(results),
        "integral_by_size": results,
        "all_integral": all(results.values()),
    }


# -- kernels of generic maps --------------------------------------------------------------------

def generic_map_kernel(params: dict, seed: int) -> dict:
    t, s = int(params.get("t", 2)), int(params.get("s", 4))
    p = int(params.get("p", 32003))
    nvars = int(params.get("nvars", 4))
    trials = int(params.get("trials", 7))
    ring = Ring(GF(p), tuple(f"z{k + 1}" for k in range(nvars)))
    rng = random.Random(seed)
    zs = ring.gens()

    def linear():
        f = ring.zero()
        for zv in zs:
            f = f + zv * rng.randrange(p)
        return f

    chi = PolyMatrix(ring, [[linear() for _ in range(s)] for _ in range(t)], t, s)
    ht_it = height(fitting_ideal(chi, 0)) if t == chi.nrows else None
    from ..gb import syzygies

    kernel = list(syzygies(ring, chi.columns()))
    N = minimalize(FPModule.from_submodule(ring, kernel))
    r = rank(N)
    res = generic_combination_ideal(dual_generators(N), ring, "random", trials, seed)
    return {
        "height_maximal_minors": ht_it,
        "expected_minor_height": s - t + 1,
        "rank_N": r,
        "heights": [_h(h) for h in res.heights],
        "all_heights_at_most_rank": all(h <= r for h in res.heights),
    }


# -- order ideals by two routes on a corpus of modules ----------------------------------------------

def _random_module(ring: Ring, rows: int, cols: int, degree: int, rng: random.Random) -> FPModule:
    zs = ring.gens()
    monos = [m for m in itertools.product(range(degree + 1), repeat=ring.nvars) if 1 <= sum(m) <= degree]

    def entry():
        f = ring.zero()
        for _ in range(rng.randint(0, 2)):
            f = f + ring.monomial(rng.choice(monos), rng.randint(-3, 3))
        return f

    del zs
    return FPModule(ring, rows, PolyMatrix(ring, [[entry() for _ in range(cols)] for _ in range(rows)], rows, cols))


def corpus_modules(spec: list, seed: int) -> list[tuple[str, FPModule]]:
    out = []
    rng = random.Random(seed)
    for item in spec:
        kind = item["kind"]
        if kind == "matrix":
            ring = parse_ring(item["ring"])
            out.append((item.get("label", "matrix"), FPModule(ring, len(item["relations"]),
                                                               parse_matrix(ring, item["relations_text"])
                                                               if "relations_text" in item else
                                                               PolyMatrix(ring, [[ring(c) for c in r]
                                                                                 for r in item["relations"]]))))
        elif kind == "omega":
            out.append((f"omega(d={item['d']},i={item['i']})", omega(item["d"], item["i"])))
        elif kind == "curve":
            out.append((f"curve(alpha={item['alpha']})", curve_module(item["alpha"])[2]))
        elif kind == "cone":
            out.append(("cone", cone_module()[1]))
        elif kind == "ex3.11":
            ring, _, p = minors_setup()
            out.append(("ex3.11", FPModule.from_columns(ring, 6, [[p[k] for k in PLUCKER_PAIRS]])))
        elif kind == "random":
            ring = parse_ring(item["ring"])
            for k in range(item.get("count", 1)):
                out.append((f"random[{k}]", _random_module(ring, item["rows"], item["cols"], item["degree"], rng)))
        else:
            raise ValueError(f"unknown corpus module kind {kind!r}")
    return out


def two_route_corpus(params: dict, seed: int) -> dict:
    modules = corpus_modules(params["modules"], seed)
    disagreements = []
    checks = 0
    for label, N in modules:
        ring = N.ring
        elements = [FreeElement.unit(ring, N.n_generators, k) for k in range(N.n_generators)]
        elements.append(FreeElement(ring, [ring.one()] * N.n_generators))
        for x in elements:
            res = order_ideal(N, x, "both")
            checks += 1
            if not res.agree:
                disagreements.append(f"{label}: {x}")
    return {
        "modules": len(modules),
        "checks": checks,
        "disagreements": disagreements,
        "all_agree": not disagreements,
    }


# -- height bound for non-integral submodules -----------------------------------------------------------

def _random_monomial_instance(ring: Ring, rng: random.Random):
    monos = [m for m in itertools.product(range(3), repeat=ring.nvars) if 1 <= sum(m) <= 3]
    while True:
        picked = rng.sample(monos, rng.randint(2, 4))
        gens = []
        for e in sorted(picked):
            if not any(all(a <= b for a, b in zip(o, e)) for o in gens):
                gens = [o for o in gens if not all(a <= b for a, b in zip(e, o))] + [e]
        if len(gens) >= 2:
            break
    M = [ring.monomial(e) for e in gens]
    t = rng.randint(1, len(M) - 1)
    U = rng.sample(M, t)
    return M, U


def height_bound_suite(params: dict, seed: int) -> dict:
    ring = parse_ring(params.get("ring", "QQ[x,y,z]"))
    rng = random.Random(seed)
    count = int(params.get("instances", 20))
    verdicts = []
    violations = []
    for k in range(count):
        M, U = _random_monomial_instance(ring, rng)
        rep = theorem_1_2_check(ring, M, U)
        verdicts.append(rep.verdict)
        if rep.verdict == "FAIL":
            violations.append(f"M={[str(m) for m in M]} U={[str(u) for u in U]}")
    cring, f, N = curve_module(2)
    P = perpendicular(N)
    rep = theorem_1_2_check(cring, list(P.embedding), list(P.embedding[:3]))
    verdicts.append(rep.verdict)
    if rep.verdict == "FAIL":
        violations.append("curve perp")
    return {
        "instances": len(verdicts),
        "pass": verdicts.count("PASS"),
        "integral": verdicts.count("integral"),
        "undecided": verdicts.count("undecided"),
        "violations": len(violations),
        "violation_details": violations,
        "curve_perp_verdict": rep.verdict,
        "curve_perp_bound": rep.bound,
        "curve_perp_colon_height": _h(rep.colon_height),
    }


REGISTRY = {
    "intro-chern": chern_table,
    "ex3.10": curve_module_facts,
    "ex3.11": determinantal_reduction,
    "prop3.12": generic_koszul_heights,
    "prop3.13": koszul_wedge_order_ideal,
    "post4.1": cone_order_ideal,
    "thm5.5-curve": curve_trace_sharpness,
    "cor3.2-instance": appended_element_fitting,
    "prop3.14-spot": generic_map_kernel,
    "remark2.2-corpus": two_route_corpus,
    "thm1.2-suite": height_bound_suite,
}
