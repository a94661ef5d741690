"""Command-line front end: ``sympgroth <command> ...``.

Exit codes: 0 success, 1 a checked inequality failed or a scaling is not
certified, 2 malformed input, 3 enumeration capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .antisymmetric import antisym_canonical
from .errors import CapacityError, ConsistencyError, InputError
from .experiments import blt_sweep, sharpness_sweep, tame_bench
from .grothendieck import KG_UPPER, scaling_search, theorem1_check
from .io import load_family, load_matrix
from .linalg import DEFAULT_RANK_TOL, hs_norm, numerical_rank, spectral_norm
from .opnorms import abs_sum, infty_one_exact
from .tame import limit_check, tame

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _cmd_norm(args):
    A = load_matrix(args.path)
    res = infty_one_exact(A)
    report = {
        "abs_sum": abs_sum(A),
        "hs_norm": hs_norm(A),
        "spectral_norm": spectral_norm(A),
        "rank": numerical_rank(A, args.tol),
        "infty_one": res.value,
        "witness_t": res.witness_t.tolist(),
        "witness_s": res.witness_s.tolist(),
    }
    return report, True


def _cmd_scale(args):
    A = load_matrix(args.path)
    cert = scaling_search(A, kg=args.kg, seed=args.seed)
    return cert.to_dict(), cert.certified


def _cmd_check_thm1(args):
    A = load_matrix(args.path)
    rep = theorem1_check(A, args.kg, rank_tol=args.tol)
    return {"lhs": rep.lhs, "rhs": rep.rhs, "ratio": rep.ratio, "holds": rep.holds,
            "kg": args.kg, **rep.details}, rep.holds


def _cmd_canonical(args):
    B = load_matrix(args.path)
    form = antisym_canonical(B, args.tol)
    return {"k": form.k, "mus": list(map(float, form.mus)),
            "q_rows": form.q_rows.tolist()}, True


def _cmd_tame(args):
    fam = load_family(args.path)
    res = tame(fam, kg=args.kg, eps=args.eps, seed=args.seed, tol=args.tol)
    rep = res.to_dict()
    rep["kg"] = args.kg
    if res.rank:
        ok = res.achieved_sum ** 2 <= res.certified_bound ** 2 * (1 + 1e-6)
    else:
        ok = limit_check(res, fam)[2]
    return rep, bool(ok and res.certified)


def _cmd_sweep(args):
    if args.kind == "sharpness":
        rep = sharpness_sweep(args.ms or [1, 2, 4, 8], kg=args.kg)
    elif args.kind == "blt":
        rep = blt_sweep(args.ns or [1, 2, 3], N=args.N or 10, trials=args.trials,
                        seed=args.seed, kg=args.kg)
    else:
        rep = tame_bench(args.ns or [1, 2, 3], N=args.N or 8, trials=args.trials,
                         seed=args.seed, eps=args.eps, kg=args.kg)
    return rep, rep.all_hold


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kg", type=float, default=KG_UPPER,
                        help="Grothendieck constant used in bounds (default sinh(pi/2))")
    common.add_argument("--tol", type=float, default=DEFAULT_RANK_TOL,
                        help="relative rank tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="also write the JSON report to this path")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(prog="sympgroth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, what in [
        ("norm", _cmd_norm, "norms, rank and exact inf->1 norm with witnesses"),
        ("scale", _cmd_scale, "diagonal scaling certificate"),
        ("check-thm1", _cmd_check_thm1, "check sum|a| <= 3 kg sqrt(rank) ||A||_{inf->1}"),
        ("canonical", _cmd_canonical, "canonical form of an antisymmetric matrix"),
    ]:
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("path", help="matrix file (.json or .csv)")
        p.set_defaults(func=func)
    p = sub.add_parser("tame", parents=[common], help="symplectic map shrinking a family")
    p.add_argument("path", help="vector family file (.json or .csv, columns are vectors)")
    p.add_argument("--eps", type=float, default=1e-6)
    p.set_defaults(func=_cmd_tame)
    p = sub.add_parser("sweep", parents=[common], help="run an experiment sweep")
    p.add_argument("kind", choices=("sharpness", "blt", "tame"))
    p.add_argument("--ns", type=_int_list)
    p.add_argument("--ms", type=_int_list)
    p.add_argument("--N", type=int)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--eps", type=float, default=1e-6)
    p.set_defaults(func=_cmd_sweep)
    return parser


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")


def _render(report, fmt):
    if fmt == "csv":
        if hasattr(report, "csv_lines"):
            return "\n".join(report.csv_lines())
        lines = ["key,value"]
        for key, val in report.items():
            if np.isscalar(val) or val is None:
                lines.append(f"{key},{val}")
        return "\n".join(lines)
    data = report.to_dict() if hasattr(report, "to_dict") else report
    return json.dumps(data, indent=2, default=_jsonable)


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        report, ok = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ConsistencyError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    print(_render(report, args.format))
    if args.out:
        data = report.to_dict() if hasattr(report, "to_dict") else report
        with open(args.out, "w") as fh:
            json.dump(data, fh, indent=2, default=_jsonable)
    return EXIT_OK if ok else EXIT_FAILED


def main():
    sys.exit(run_cli())
