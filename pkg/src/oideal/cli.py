"""Command line front end: one subcommand per operation, JSON on stdout."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .gb import ResourceLimitError, eliminate, groebner, normal_form, resource_limits, syzygies
from .ideals import Ideal, dimension, ideal_ops, is_reduction, radical_member
from .modules import (FPModule, check_Gs, ext_vanishes, fitting_ideal, order_ideal, perpendicular,
                      trace_ideal)
from .poly import (MonomialOrder, ParseError, Ring, RingError, parse_matrix, parse_poly,
                   parse_poly_list, parse_ring, parse_vector)
from .rees import module_reduction_test, rees_of_module
from .verify import chern_closed_form, chern_parity, run_all, run_scenario, scenario_ids

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


def _text(value: str | None) -> str | None:
    """``@path`` reads the file, anything else is literal."""
    if value is not None and value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return fh.read()
    return value


def _order(text: str) -> MonomialOrder:
    text = text.strip()
    if text.startswith("elim(") and text.endswith(")"):
        return MonomialOrder.elim(int(text[5:-1]))
    return MonomialOrder(text)


def _ring(args, default: str | None = None) -> Ring:
    text = _text(args.ring) or default
    if text is None:
        raise UsageError("--ring is required")
    ring = parse_ring(text)
    if args.order:
        ring = ring.with_order(_order(args.order))
    return ring


def _ideal(args, ring: Ring, text: str | None, flag: str = "--ideal") -> Ideal:
    text = _text(text)
    if text is None:
        raise UsageError(f"{flag} is required")
    return Ideal(ring, parse_poly_list(ring, text) if text.strip() else [])


def _vectors(ring: Ring, text: str) -> list:
    text = _text(text)
    return [parse_vector(ring, part) for part in text.split(";") if part.strip()]


def _module(args) -> FPModule:
    text = _text(args.module)
    if text is None:
        if args.matrix is None:
            raise UsageError("--module or --matrix is required")
        ring = _ring(args)
        A = parse_matrix(ring, _text(args.matrix))
        return FPModule(ring, A.nrows, A)
    data = json.loads(text)
    ring = _ring(args, data.get("ring")) if args.ring else None
    module = FPModule.from_json(data, ring)
    if args.order and ring is None:
        module = FPModule.from_json(data, module.ring.with_order(_order(args.order)))
    return module


def _strs(polys) -> list[str]:
    return [str(p) for p in polys]


# -- handlers ------------------------------------------------------------------------

def cmd_gb(args):
    ring = _ring(args)
    if args.vectors:
        vecs = _vectors(ring, args.vectors)
        gb = groebner(ring, vecs, position=args.position)
        return {"ring": str(ring), "basis": [[str(c) for c in v] for v in gb.elements]}
    ideal = _ideal(args, ring, args.ideal)
    return {"ring": str(ring), "polys": _strs(ideal.gb().polys())}


def cmd_nf(args):
    ring = _ring(args)
    ideal = _ideal(args, ring, args.ideal)
    f = parse_poly(ring, _text(args.poly))
    nf = normal_form(ideal.gb(), f)
    return {"ring": str(ring), "normal_form": str(nf), "member": nf.is_zero()}


def cmd_eliminate(args):
    ring = _ring(args).with_order(MonomialOrder.elim(args.k))
    ideal = _ideal(args, ring, args.ideal)
    return {"ring": str(ring), "polys": [str(v.coords[0]) for v in eliminate(ideal.gb(), args.k)]}


def cmd_syzygies(args):
    ring = _ring(args)
    if args.vectors:
        vecs = _vectors(ring, args.vectors)
    else:
        vecs = list(_ideal(args, ring, args.ideal).generators)
    syz = syzygies(ring, vecs)
    return {"ring": str(ring), "syzygies": [[str(c) for c in v] for v in syz]}


def cmd_height(args):
    ring = _ring(args)
    rep = dimension(_ideal(args, ring, args.ideal))
    return {"height": rep.to_json()["height"]}


def cmd_dim(args):
    ring = _ring(args)
    return dimension(_ideal(args, ring, args.ideal)).to_json()


def cmd_colon(args):
    ring = _ring(args)
    a = _ideal(args, ring, args.ideal)
    b = _ideal(args, ring, args.by, "--by")
    op = "saturate" if args.saturate else "quotient"
    return {"ring": str(ring), "polys": _strs(ideal_ops(op, a, b).reduced_generators())}


def cmd_radical_member(args):
    ring = _ring(args)
    f = parse_poly(ring, _text(args.poly))
    return {"radical_member": radical_member(f, _ideal(args, ring, args.ideal))}


def cmd_reduction(args):
    ring = _ring(args)
    if args.vectors:
        M = _vectors(ring, args.vectors)
        U = _vectors(ring, args.sub)
        return module_reduction_test(ring, U, M, args.n_max).to_json()
    I = _ideal(args, ring, args.ideal)
    J = _ideal(args, ring, args.sub, "--sub")
    return is_reduction(J, I, args.n_max).to_json()


def _module_or_ideal(args) -> FPModule:
    if args.module or args.matrix:
        return _module(args)
    ring = _ring(args)
    return FPModule.from_submodule(ring, list(_ideal(args, ring, args.ideal).generators))


def cmd_perp(args):
    return perpendicular(_module_or_ideal(args), minimal=not args.keep_generators).to_json()


def cmd_order_ideal(args):
    if args.request:
        req = json.loads(_text(args.request))
        args.module = json.dumps(req["module"]) if isinstance(req["module"], dict) else req["module"]
        args.element = "[" + ",".join(req["element"]) + "]"
        args.route = req.get("route", args.route)
    N = _module(args)
    x = parse_vector(N.ring, _text(args.element))
    res = order_ideal(N, x, args.route)
    out = res.to_json()
    out["height"] = dimension(res.ideal).to_json()["height"]
    return out


def cmd_fitting(args):
    N = _module_or_ideal(args)
    return {"j": args.j, "polys": _strs(fitting_ideal(N.relations, args.j).reduced_generators())}


def cmd_trace(args):
    return {"polys": _strs(trace_ideal(_module_or_ideal(args)).reduced_generators())}


def _rees(args):
    ring = _ring(args)
    if args.vectors:
        return rees_of_module(ring, _vectors(ring, args.vectors))
    return rees_of_module(ring, list(_ideal(args, ring, args.ideal).generators))


def cmd_rees(args):
    return _rees(args).to_json()


def cmd_spread(args):
    return {"analytic_spread": _rees(args).analytic_spread}


def cmd_gs_check(args):
    s = float("inf") if args.s in ("inf", "infinity") else int(args.s)
    return check_Gs(_module_or_ideal(args), s).to_json()


def cmd_ext(args):
    indices = [int(i) for i in args.i.split(",")]
    return ext_vanishes(_module(args), indices).to_json()


def cmd_chern(args):
    ns = range(args.n, (args.to or args.n) + 1)
    return {"chern": [{"n": n, "coefficient": chern_parity(n), "closed_form": chern_closed_form(n)}
                      for n in ns]}


def cmd_verify(args):
    seed = args.seed
    if args.scenario == "all":
        reports = run_all(seed, args.jobs)
    else:
        params = {}
        for key in ("alpha", "d", "s"):
            v = getattr(args, key)
            if v is not None:
                params[key] = v
        reports = run_scenario(args.scenario, params or None, seed)
    if args.pretty:
        for r in reports:
            print(r.pretty(), file=sys.stderr)
    out = {"seed": seed, "reports": [r.to_json() for r in reports],
           "status": "FAIL" if any(r.failed for r in reports) else "PASS"}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2)
    return out


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help='ring text, e.g. "QQ[a,b,c,d]" (or @file)')
    common.add_argument("--order", help="override the ring order: lex, grlex, grevlex or elim(k)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--pretty", action="store_true", help="human-readable summary on stderr")
    common.add_argument("--max-pairs", type=int)
    common.add_argument("--max-bits", type=int)
    common.add_argument("--max-degree", type=int)
    common.add_argument("--timeout-s", type=float)

    parser = argparse.ArgumentParser(prog="oideal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def ideal_opt(p, required=False):
        p.add_argument("--ideal", required=required, help="comma-separated generators (or @file)")

    def module_opts(p):
        p.add_argument("--module", help="module JSON (inline or @file)")
        p.add_argument("--matrix", help="relation matrix, with --ring")

    p = add("gb", cmd_gb, "reduced Groebner basis")
    ideal_opt(p)
    p.add_argument("--vectors", help='submodule generators "[f,g];[h,k]"')
    p.add_argument("--position", choices=("pot", "top"), default="pot")

    p = add("nf", cmd_nf, "normal form modulo an ideal")
    ideal_opt(p, True)
    p.add_argument("--poly", required=True)

    p = add("eliminate", cmd_eliminate, "eliminate the first k variables")
    ideal_opt(p, True)
    p.add_argument("--k", type=int, required=True)

    p = add("syzygies", cmd_syzygies, "syzygies of polynomials or vectors")
    ideal_opt(p)
    p.add_argument("--vectors")

    p = add("height", cmd_height, "height of an ideal")
    ideal_opt(p, True)

    p = add("dim", cmd_dim, "Krull dimension of R/I")
    ideal_opt(p, True)

    p = add("colon", cmd_colon, "colon ideal I:J, or saturation")
    ideal_opt(p, True)
    p.add_argument("--by", required=True)
    p.add_argument("--saturate", action="store_true")

    p = add("radical-member", cmd_radical_member, "membership in the radical")
    ideal_opt(p, True)
    p.add_argument("--poly", required=True)

    p = add("reduction", cmd_reduction, "is J a reduction of I (or U of M)")
    ideal_opt(p)
    p.add_argument("--vectors", help="generators of M (module case)")
    p.add_argument("--sub", required=True, help="generators of J, or vectors of U")
    p.add_argument("--n-max", type=int, default=6)

    p = add("perp", cmd_perp, "perpendicular module")
    module_opts(p)
    ideal_opt(p)
    p.add_argument("--keep-generators", action="store_true", help="do not minimalize first")

    p = add("order-ideal", cmd_order_ideal, "order ideal of an element")
    module_opts(p)
    p.add_argument("--element", help='coefficients in the generators, e.g. "[0,0,1,0]"')
    p.add_argument("--route", choices=("row_ideal", "dual_kernel", "both"), default="both")
    p.add_argument("--request", help="order-ideal request JSON (inline or @file)")

    p = add("fitting", cmd_fitting, "Fitting ideal")
    module_opts(p)
    ideal_opt(p)
    p.add_argument("--j", type=int, required=True)

    p = add("trace", cmd_trace, "trace ideal")
    module_opts(p)
    ideal_opt(p)

    for name, func, text in (("rees", cmd_rees, "Rees and fiber ideals"),
                             ("spread", cmd_spread, "analytic spread")):
        p = add(name, func, text)
        ideal_opt(p)
        p.add_argument("--vectors")

    p = add("gs-check", cmd_gs_check, "the G_s condition")
    module_opts(p)
    ideal_opt(p)
    p.add_argument("--s", default="inf")

    p = add("ext", cmd_ext, "vanishing of Ext^i(M, R)")
    module_opts(p)
    p.add_argument("--i", required=True, help="comma-separated indices")

    p = add("chern", cmd_chern, "coefficient of t^(n-1) in (1+t)^n/(1+2t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--to", type=int)

    p = add("verify", cmd_verify, "run scenarios")
    p.add_argument("scenario", choices=scenario_ids() + ["all"])
    p.add_argument("--alpha", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--out", help="write the report JSON here")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    env_seed = os.environ.get("OIDEAL_SEED")
    if env_seed is not None:
        args.seed = int(env_seed)
    limits = {"max_pairs": args.max_pairs, "max_bits": args.max_bits, "max_degree": args.max_degree,
              "timeout_s": args.timeout_s}
    try:
        with resource_limits(**limits):
            out = args.func(args)
    except ResourceLimitError as exc:
        print(json.dumps({"error": "resource", "limit": exc.limit, "detail": str(exc)}))
        return EXIT_RESOURCE
    except (UsageError, ParseError, RingError, ValueError, KeyError, OSError) as exc:
        print(f"oideal {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(out))
    if args.pretty and args.command != "verify":
        print(json.dumps(out, indent=2), file=sys.stderr)
    if args.command == "verify" and out["status"] == "FAIL":
        return EXIT_FAIL
    return 0
