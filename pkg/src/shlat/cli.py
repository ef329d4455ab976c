"""Command-line front end.

Every subcommand builds a plain dict report.  ``--format structured`` dumps it
as JSON with sorted keys (byte-for-byte reproducible); the default text format
prints one ``key: value`` line per field.  Numbers are reported as a decimal
next to their exact symbolic form.

Exit codes: 0 on success, 1 when ``--expect possible`` meets an impossibility
certificate (or a sweep finds a counterexample), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cases
from .errors import ShlatError
from .geometry import Limits, convex_envelope, generated_sublattice, is_convex
from .lattice import block_diagonalize, complement, is_equivalent, is_zero, join, meet
from .logexpr import LogExpr, LogRatio
from .metrics import (
    entropy_exact,
    is_aligned_rajski,
    is_aligned_shannon,
    is_independent,
    joint_entropy_exact,
    mutual_information_exact,
    rajski_distance_exact,
    shannon_distance_exact,
)
from .probability import joint
from .properties import SUITES, sweep
from .reconstruction import analyze
from .workspace import load_workspace

LOG2 = LogExpr.log(2)


def bits(e: LogExpr) -> dict:
    """An entropy-like quantity in bits, with its symbolic form."""
    r = LogRatio(e, LOG2)
    return {"value": float(r), "exact": str(r)}


def ratio(r: LogRatio) -> dict:
    return {"value": float(r), "exact": str(r)}


def _ratio_sum(a: LogRatio, b: LogRatio) -> dict:
    return {"value": float(a) + float(b), "exact": f"{a} + {b}"}


def _labels(X) -> dict:
    return {str(o): str(X.values[c]) for o, c in zip(X.space.outcomes, X.codes)}


def _names(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in _names(text)]
    except ValueError:
        raise ShlatError(f"expected comma-separated integers, got {text!r}") from None


# -- subcommands ---------------------------------------------------------------


def cmd_meet(args) -> tuple[dict, int]:
    X, Y = load_workspace(args.workspace).variables_named([args.x, args.y])
    J = joint(X, Y)
    B = block_diagonalize(J)
    M = meet(X, Y)
    return {
        "command": "meet",
        "x": args.x,
        "y": args.y,
        "block_count": B.block_count,
        "block_masses": [str(m) for m in B.block_mass],
        "row_perm": {str(v): B.row_perm[i] for i, v in enumerate(J.row_values)},
        "col_perm": {str(v): B.col_perm[j] for j, v in enumerate(J.col_values)},
        "labels": _labels(M),
        "entropy_bits": bits(entropy_exact(M)),
        "is_zero": is_zero(M),
        "equivalent_to_x": is_equivalent(M, X),
        "equivalent_to_y": is_equivalent(M, Y),
    }, 0


def cmd_join(args) -> tuple[dict, int]:
    X, Y = load_workspace(args.workspace).variables_named([args.x, args.y])
    V = join(X, Y)
    return {
        "command": "join",
        "x": args.x,
        "y": args.y,
        "labels": _labels(V),
        "cardinality": V.cardinality,
        "entropy_bits": bits(entropy_exact(V)),
        "equivalent_to_x": is_equivalent(V, X),
        "equivalent_to_y": is_equivalent(V, Y),
    }, 0


def cmd_complement(args) -> tuple[dict, int]:
    X, Y = load_workspace(args.workspace).variables_named([args.x, args.y])
    Z, T = complement(X, Y)
    return {
        "command": "complement",
        "x": args.x,
        "y": args.y,
        "labels": _labels(Z),
        "z_cardinality": T.z_cardinality,
        "tensor": [
            {"x": str(T.row_values[i]), "y": str(T.col_values[j]), "z": k, "mass": str(Fraction(w, T.total))}
            for (i, j, k), w in sorted(T.weights.items())
        ],
        "join_equivalent_to_y": is_equivalent(join(X, Z), Y),
        "meet_is_zero": is_zero(meet(X, Z)),
        "entropy_bits": bits(entropy_exact(Z)),
    }, 0


def cmd_dist(args) -> tuple[dict, int]:
    X, Y = load_workspace(args.workspace).variables_named([args.x, args.y])
    out = {
        "command": "dist",
        "x": args.x,
        "y": args.y,
        "H(X)": bits(entropy_exact(X)),
        "H(Y)": bits(entropy_exact(Y)),
        "H(X,Y)": bits(joint_entropy_exact(X, Y)),
        "I(X;Y)": bits(mutual_information_exact(X, Y)),
        "H(X^Y)": bits(entropy_exact(meet(X, Y))),
        "D": bits(shannon_distance_exact(X, Y)),
        "d": ratio(rajski_distance_exact(X, Y)),
        "equivalent": is_equivalent(X, Y),
        "independent": is_independent(X, Y),
    }
    if not (is_zero(X) and is_zero(Y)):
        hxy = joint_entropy_exact(X, Y)
        out["rho"] = ratio(LogRatio(hxy - shannon_distance_exact(X, Y), hxy))
    return out, 0


def cmd_align(args) -> tuple[dict, int]:
    X, Y, Z = load_workspace(args.workspace).variables_named([args.x, args.y, args.z])
    return {
        "command": "align",
        "order": [args.x, args.y, args.z],
        "D(X,Y)+D(Y,Z)": bits(shannon_distance_exact(X, Y) + shannon_distance_exact(Y, Z)),
        "D(X,Z)": bits(shannon_distance_exact(X, Z)),
        "d(X,Y)+d(Y,Z)": _ratio_sum(rajski_distance_exact(X, Y), rajski_distance_exact(Y, Z)),
        "d(X,Z)": ratio(rajski_distance_exact(X, Z)),
        "aligned_shannon": is_aligned_shannon(X, Y, Z),
        "aligned_rajski": is_aligned_rajski(X, Y, Z),
    }, 0


def cmd_envelope(args) -> tuple[dict, int]:
    doc = load_workspace(args.workspace)
    limits = Limits.from_env()
    if args.sublattice:
        X = doc.variable(args.sublattice)
        L = generated_sublattice(X, limits.max_support)
        return {
            "command": "envelope",
            "sublattice_of": args.sublattice,
            "size": len(L),
            "cardinalities": sorted(m.cardinality for m in L),
        }, 0
    if not args.vars:
        raise ShlatError("envelope needs --vars or --sublattice")
    E = convex_envelope(doc.variables_named(_names(args.vars)), limits)
    return {
        "command": "envelope",
        "generators": _names(args.vars),
        "size": len(E),
        "members": [
            {"name": m.name, "cardinality": m.cardinality, "entropy_bits": bits(entropy_exact(m))} for m in E
        ],
        "convex": is_convex(E),
    }, 0


def _analysis(rep, args, extra=None) -> tuple[dict, int]:
    out = {"command": "analyze"}
    out.update(rep.to_dict())
    out.update(extra or {})
    code = 1 if args.expect == "possible" and rep.theorem_verdict == "impossible" else 0
    return out, code


def cmd_analyze(args) -> tuple[dict, int]:
    doc = load_workspace(args.workspace)
    space = doc.space()
    X = doc.variable(args.x, space)
    comps = [doc.variable(n, space) for n in _names(args.components)]
    return _analysis(analyze(X, comps), args, {"target": args.x})


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


def _run_case(case, args) -> tuple[dict, int]:
    if getattr(args, "drop_last", False):
        case = case.drop(-1)
    rep = analyze(case.target, case.components)
    checks = cases.check_expected(case, rep)
    return _analysis(
        rep,
        args,
        {
            "case": case.name,
            "params": _jsonable(case.params),
            "expected": _jsonable(case.expected),
            "expected_matches": checks,
        },
    )


def cmd_case(args) -> tuple[dict, int]:
    kind = args.case
    if kind == "sign-abs":
        values = _ints(args.values)
        masses = [Fraction(m) for m in _names(args.masses)] if args.masses else None
        case = cases.sign_abs(values, masses, require_symmetric=not args.allow_asymmetric)
    elif kind == "linear-code":
        G = [_ints(row) for row in args.G.split(";")]
        case = cases.linear_code(args.q, len(G), len(G[0]), G)
    elif kind == "divisors":
        case = cases.integer_division(args.m)
    elif kind == "primes":
        case = cases.prime_valuations(args.m)
    elif kind == "crt":
        case = cases.crt(_ints(args.moduli))
    elif kind == "sort":
        comps = None
        if args.comparisons:
            comps = []
            for pair in _names(args.comparisons):
                a, _, b = pair.partition("-")
                comps.append((int(a), int(b)))
        case = cases.sorting_bound(args.k, comps)
    elif kind == "epsilon-chain":
        case = cases.epsilon_chain(args.N, Fraction(args.epsilon))
        M = cases.epsilon_chain_meet(case)
        X, Y = case.components
        return {
            "command": "case",
            "case": case.name,
            "N": args.N,
            "epsilon": str(Fraction(args.epsilon)),
            "meet_blocks": M.cardinality,
            "D(meet,0)": bits(entropy_exact(M)),
            "I(X;Y)": bits(mutual_information_exact(X, Y)),
        }, 0
    else:  # pragma: no cover - argparse restricts the choices
        raise ShlatError(f"unknown case {kind}")
    return _run_case(case, args)


def cmd_sweep(args) -> tuple[dict, int]:
    results = sweep(args.trials, args.seed, args.suite, args.workers)
    out = {
        "command": "sweep",
        "trials": args.trials,
        "seed": args.seed,
        "suites": [r.to_dict() for r in results],
        "all_passed": all(r.ok for r in results),
    }
    if args.format == "text":
        out["seconds"] = {r.suite: round(r.seconds, 2) for r in results}
    return out, 0 if out["all_passed"] else 1


# -- output --------------------------------------------------------------------


def _fmt_scalar(v) -> str:
    if isinstance(v, dict) and set(v) == {"value", "exact"}:
        return f"{v['value']:.12g}  [{v['exact']}]"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def render_text(report: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, v in report.items():
        if isinstance(v, dict) and set(v) != {"value", "exact"}:
            lines.append(f"{pad}{key}:")
            lines.append(render_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{key}:")
            for item in v:
                lines.append(render_text(item, indent + 1))
                lines.append("")
            lines.pop()
        elif isinstance(v, list):
            lines.append(f"{pad}{key}: " + ", ".join(_fmt_scalar(x) for x in v))
        else:
            lines.append(f"{pad}{key}: {_fmt_scalar(v)}")
    return "\n".join(lines)


def render(report: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(report, sort_keys=True, indent=2)
    return render_text(report)


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--expect", choices=("possible",), help="exit 1 on an impossibility certificate")

    ws = argparse.ArgumentParser(add_help=False)
    ws.add_argument("-w", "--workspace", required=True, help="JSON workspace file")

    p = argparse.ArgumentParser(prog="shlat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in (("meet", cmd_meet), ("join", cmd_join), ("complement", cmd_complement), ("dist", cmd_dist)):
        s = sub.add_parser(name, parents=[common, ws])
        s.add_argument("-x", required=True)
        s.add_argument("-y", required=True)
        s.set_defaults(func=fn)

    s = sub.add_parser("align", parents=[common, ws], help="test whether X, Y, Z are aligned in this order")
    s.add_argument("-x", required=True)
    s.add_argument("-y", required=True)
    s.add_argument("-z", required=True)
    s.set_defaults(func=cmd_align)

    s = sub.add_parser("envelope", parents=[common, ws], help="convex envelope or generated sublattice")
    s.add_argument("-v", "--vars", help="comma-separated generators")
    s.add_argument("--sublattice", metavar="X", help="enumerate all quotients of X instead")
    s.set_defaults(func=cmd_envelope)

    s = sub.add_parser("analyze", parents=[common, ws], help="reconstruction analysis")
    s.add_argument("-x", required=True, help="target variable")
    s.add_argument("-c", "--components", required=True, help="comma-separated components")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("case", help="built-in application instances")
    cs = s.add_subparsers(dest="case", required=True)
    c = cs.add_parser("sign-abs", parents=[common])
    c.add_argument("--values", default="-2,-1,1,2")
    c.add_argument("--masses", help="comma-separated rationals, default uniform")
    c.add_argument("--allow-asymmetric", action="store_true")
    c = cs.add_parser("linear-code", parents=[common])
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--G", default="1,0,1;0,1,1", help="rows separated by ';'")
    c = cs.add_parser("divisors", parents=[common])
    c.add_argument("--m", type=int, default=1)
    c = cs.add_parser("primes", parents=[common])
    c.add_argument("--m", type=int, default=30)
    c = cs.add_parser("crt", parents=[common])
    c.add_argument("--moduli", default="3,4,5")
    c.add_argument("--drop-last", action="store_true")
    c = cs.add_parser("sort", parents=[common])
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--comparisons", help="1-based pairs like 1-2,2-3")
    c = cs.add_parser("epsilon-chain", parents=[common])
    c.add_argument("--N", type=int, default=4)
    c.add_argument("--epsilon", default="1/8")
    s.set_defaults(func=cmd_case)

    s = sub.add_parser("sweep", parents=[common], help="randomized property suites")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--suite", action="append", choices=sorted(SUITES), help="repeatable; default all")
    s.set_defaults(func=cmd_sweep)
    return p


def run_command(argv=None) -> tuple[int, str]:
    """Parse ``argv`` and run it; returns ``(exit code, rendered report)``."""
    args = build_parser().parse_args(argv)
    report, code = args.func(args)
    return code, render(report, args.format)


def main(argv=None) -> int:
    try:
        code, text = run_command(argv)
    except ShlatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
