"""Command line front end: ``steinlab <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage errors (bad flags, malformed specs, unknown field sets).
"""

import argparse
import json
import sys
import time

from . import catO, checks, models, numtheory, weyl
from .weyl import WeylElem


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit_report(rep, args, start):
    if args.timing:
        rep.wall_time = time.perf_counter() - start
    print(rep.to_markdown() if args.format == "md" else rep.to_json())
    return 0 if rep.passed else 1


def _md_table(rows, header):
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for row in rows:
        lines.append("| " + " | ".join(str(row.get(h, "")) for h in header) + " |")
    return "\n".join(lines)


def cmd_verify(args):
    start = time.perf_counter()
    kw = {}
    if args.n is not None:
        if args.suite != "weyl":
            raise ValueError("--n only applies to 'verify weyl'")
        if not 3 <= args.n <= weyl.SEARCH_MAX_N:
            raise ValueError(f"--n must be between 3 and {weyl.SEARCH_MAX_N}")
        kw["n"] = args.n
    return _emit_report(checks.verify_suite(args.suite, **kw), args, start)


def _factor_report(w, flags):
    if w == "w0":
        comp = models.iw0_gl3()
    else:
        comp = models.component(3, w)
    fiber = models.factor_omega_fiber(w, flags)
    expected = 2 if (w == "w0" and flags == "equal") else 1
    return {"component": f"{w}:{flags}",
            "betti": list(comp.resolution().betti()),
            "dim": comp.dim(),
            "omega_fiber_origin": models.omega_fiber(comp, [0] * 6),
            "omega_fiber": fiber,
            "tangent_dim": models.tangent_dim_formula(w),
            "expected": expected,
            "pass": fiber == expected}


def cmd_omega_fiber(args):
    start = time.perf_counter()
    spec = models.PdRPointSpec.parse(args.taus)
    factors = [_factor_report(w, f) for w, f in spec.factors]
    value = models.product_omega_fiber(spec)
    pos = catO.position_for_spec(spec)
    out = {"spec": str(spec), "r": spec.r, "omega_fiber": value,
           "expected": 2 ** spec.r, "classical_dim_ratio": catO.classical_dim_ratio(pos),
           "factors": factors}
    out["pass"] = (value == out["expected"] == out["classical_dim_ratio"]
                   and all(f["pass"] for f in factors))
    if args.timing:
        out["wall_time"] = round(time.perf_counter() - start, 3)
    if args.format == "md":
        print(f"omega fibre of {spec}: {value} (expected {out['expected']})\n")
        print(_md_table(factors, ["component", "betti", "dim", "omega_fiber_origin",
                                  "omega_fiber", "tangent_dim", "expected", "pass"]))
    else:
        print(_dump(out))
    return 0 if out["pass"] else 1


def cmd_multiplicity(args):
    start = time.perf_counter()
    pos = catO.RefinementPosition.parse(args.wR, args.m)
    total, summands = catO.s_lambda_wR(pos, literal=args.literal)
    k = pos.w_xR.k
    cycles = {}
    for w in WeylElem.all(3, k):
        if catO.support_nonzero(w, pos):
            cycles[",".join(w.names())] = catO.cycle_of_simple(w, pos).as_dict()
    out = {"wR": ",".join(pos.w_xR.names()), "m": pos.m, "r": pos.r,
           "ratio": catO.classical_dim_ratio(pos),
           "summands": [catO.summand_label(s) for s in summands],
           "simples": total.as_dict(), "cycles": cycles}
    if args.timing:
        out["wall_time"] = round(time.perf_counter() - start, 3)
    if args.format == "md":
        print(f"w_R = {out['wR']}, m = {pos.m}, r = {pos.r}, ratio = {out['ratio']}\n")
        print(_md_table([{"summand": s} for s in out["summands"]], ["summand"]))
    else:
        print(_dump(out))
    return 0


def _spec_from(args):
    if (args.field_set is None) == (args.polys is None):
        raise ValueError("give exactly one of --field-set and --polys")
    return numtheory.field_set(args.field_set if args.field_set else args.polys)


def cmd_split(args):
    spec = _spec_from(args)
    primes = [int(p) for p in str(args.prime).split(",") if p.strip()]
    rows = [numtheory.is_totally_split_set(spec, p).as_dict() for p in primes]
    if args.format == "md":
        print(_md_table([{"prime": r["prime"], "totally_split": r["totally_split"],
                          "verdicts": json.dumps(r["verdicts"], sort_keys=True)} for r in rows],
                        ["prime", "verdicts", "totally_split"]))
    else:
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    return 0


def cmd_congruences(args):
    start = time.perf_counter()
    spec = _spec_from(args)
    rep = numtheory.congruence_classes(spec, args.modulus, k=args.k, strict=args.strict)
    out = rep.as_dict()
    out["field_set"] = spec.name
    if args.timing:
        out["wall_time"] = round(time.perf_counter() - start, 3)
    if args.format == "md":
        print(f"{spec.name} mod {rep.modulus}: {{{', '.join(map(str, rep.residues))}}}"
              f"{'' if rep.exact else ' (heuristic)'}\n")
        print(_md_table([{"residue": r, "witnesses": rep.witnesses[r]} for r in rep.residues],
                        ["residue", "witnesses"]))
    else:
        print(_dump(out))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "md"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    parser = argparse.ArgumentParser(prog="steinlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=("weyl", "steinberg", "resolution", "all"))
    p.add_argument("--n", type=int, default=None, help="largest symmetric group for 'weyl'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("omega-fiber", parents=[common], help="dualizing fibre of a product point")
    p.add_argument("--taus", required=True, help="e.g. w0:equal,w0:distinct,s1s2:na")
    p.set_defaults(func=cmd_omega_fiber)

    p = sub.add_parser("multiplicity", parents=[common], help="summands and cycles at a refinement position")
    p.add_argument("--wR", required=True, help="one word per factor, e.g. 1 or w0,s1")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--literal", action="store_true", help="keep L(lam) next to N(lam) for trivial factors")
    p.set_defaults(func=cmd_multiplicity)

    for name, func, helptext in (("split", cmd_split, "splitting of primes in a field set"),
                                 ("congruences", cmd_congruences, "totally split congruence classes")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--field-set", dest="field_set", default=None, help="builtin:<name> or polynomials")
        p.add_argument("--polys", default=None, help='e.g. "x^2+1;x^3-x^2-4x-1"')
        if name == "split":
            p.add_argument("--prime", required=True, help="a prime or a comma separated list")
        else:
            p.add_argument("--modulus", type=int, required=True)
            p.add_argument("--k", type=int, default=3, help="primes sampled per class")
            p.add_argument("--strict", action="store_true", help="refuse non-exact searches")
        p.set_defaults(func=func)
    return parser


USAGE_ERRORS = (ValueError, models.InvalidSpec, numtheory.NumTheoryError, weyl.WeylError,
                catO.ZeroSheaf)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"steinlab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
