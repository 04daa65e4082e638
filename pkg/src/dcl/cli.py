"""Command-line front end.

Exit codes: 0 success (SAT where applicable), 1 UNSAT / failed check,
2 usage error, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import core
from .core import DchParseError, MODE_SIMPLE, MODES, read_instance, write_instance
from . import analytics
from .experiments import (
    ExperimentConfig,
    estimate_probability,
    format_csv,
    locate_threshold,
    moment_validation,
    scan,
)
from .reduction import export_dimacs
from .sampler import sample_lists, sample_pair_m, sample_pair_p
from .reduction import lists_to_hypergraphs
from .solver2 import check_certificate, decide2, format_certificate, parse_certificate
from .solvergen import brute_force, dpll


def _read_text(path: str) -> str:
    with open(path, "r") as fh:
        return fh.read()


def _write_text(path: Optional[str], text: str):
    if path is None:
        print(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _print_kv(pairs, fmt: str):
    if fmt == "csv":
        print("key,value")
        for k, v in pairs:
            print(f"{k},{_fmt_value(v)}")
    else:
        for k, v in pairs:
            print(f"{k}={_fmt_value(v)}")


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip() != ""]


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip() != ""]


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dcl", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample an instance and write it out")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--s", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default=MODE_SIMPLE)
    p.add_argument("--out")

    p = sub.add_parser("decide", help="decide an instance (decide2 for k=2, dpll otherwise)")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("solve", help="decide with an explicit solver")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--solver", choices=("decide2", "dpll", "brute"), default="dpll")

    p = sub.add_parser("bicycle-check", help="verify a two-cycle witness against an instance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--cert", required=True)

    p = sub.add_parser("export-dimacs", help="emit the same-sign CNF encoding")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")

    p = sub.add_parser("analytic", help="evaluate closed-form quantities")
    p.add_argument("what", choices=("constants", "psi", "f", "laplace", "gamma", "rate", "ratio", "bounds"))
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=float)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("threshold", help="bisect for the density where p_hat crosses a target")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", type=float, default=0.5)
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solver", choices=("decide2", "dpll", "brute"))
    p.add_argument("--workers", type=int)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("scan", help="estimate p_hat over a parameter grid; write CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", help="comma-separated edge counts")
    p.add_argument("--p", help="comma-separated edge probabilities")
    p.add_argument("--s", help="comma-separated palette sizes")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solver", choices=("decide2", "dpll", "brute"), default="decide2")
    p.add_argument("--mode", choices=MODES, default=MODE_SIMPLE)
    p.add_argument("--nested", action="store_true")
    p.add_argument("--workers", type=int)
    p.add_argument("--out")

    p = sub.add_parser("listcolor", help="estimate proper-colouring probability for list schemes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solver", choices=("decide2", "dpll", "brute"), default="decide2")
    p.add_argument("--workers", type=int)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("validate-moments", help="Monte Carlo check of the weighted-moment formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    return ap


def _require(args, names) -> bool:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        print(f"missing required flags: {', '.join('--' + n for n in missing)}", file=sys.stderr)
        return False
    return True


def _cmd_sample(args) -> int:
    given = [x for x in (args.m, args.p, args.s) if x is not None]
    if len(given) != 1:
        print("exactly one of --m, --p, --s is required", file=sys.stderr)
        return 2
    if args.m is not None:
        h = sample_pair_m(args.n, args.k, args.m, args.seed, args.mode)
    elif args.p is not None:
        h = sample_pair_p(args.n, args.k, args.p, args.seed)
    else:
        h = lists_to_hypergraphs(sample_lists(args.n, args.k, args.s, args.seed))
    _write_text(args.out, write_instance(h))
    return 0


def _decide_instance(h, solver: str) -> int:
    if solver == "decide2":
        dec = decide2(h)
    elif solver == "brute":
        dec = brute_force(h)
    else:
        dec = dpll(h)
    if dec.satisfiable:
        print("SAT")
        print(str(dec.assignment))
        return 0
    print("UNSAT")
    cert = getattr(dec, "certificate", None)
    if cert is not None:
        print(format_certificate(cert))
    elif hasattr(dec, "certificate"):
        # decide2 proved unsatisfiability but no two-cycle witness exists.
        print("no disjoint-cycle witness exists for this instance", file=sys.stderr)
    return 1


def _cmd_decide(args) -> int:
    h = read_instance(_read_text(args.infile))
    solver = "decide2" if h.k == 2 and h.mode == MODE_SIMPLE else "dpll"
    return _decide_instance(h, solver)


def _cmd_solve(args) -> int:
    h = read_instance(_read_text(args.infile))
    return _decide_instance(h, args.solver)


def _cmd_bicycle_check(args) -> int:
    h = read_instance(_read_text(args.infile))
    try:
        cert = parse_certificate(_read_text(args.cert))
    except ValueError as exc:
        print(f"certificate parse error: {exc}", file=sys.stderr)
        return 3
    if check_certificate(h, cert):
        print("OK")
        return 0
    print("INVALID")
    return 1


def _cmd_export_dimacs(args) -> int:
    h = read_instance(_read_text(args.infile))
    _write_text(args.out, export_dimacs(h))
    return 0


def _cmd_analytic(args) -> int:
    what = args.what
    fmt = args.format
    if what == "constants":
        if not _require(args, ["k"]):
            return 2
        c = analytics.constants(args.k)
        _print_kv(
            [
                ("upper", c.upper),
                ("lower", c.lower),
                ("ap_condition", c.ap_condition),
                ("first_moment_root", c.first_moment_root),
            ],
            fmt,
        )
        return 0
    if what == "psi":
        if not _require(args, ["gamma", "k"]):
            return 2
        _print_kv([("psi", analytics.psi(args.gamma, args.k))], fmt)
        return 0
    if what == "f":
        if not _require(args, ["alpha", "gamma", "k"]):
            return 2
        _print_kv([("f", analytics.f_alpha(args.alpha, args.gamma, args.k))], fmt)
        return 0
    if what == "laplace":
        if not _require(args, ["k", "r", "gamma"]):
            return 2
        rep = analytics.laplace_check(args.k, args.r, args.gamma)
        _print_kv(
            [
                ("passed", rep.passed),
                ("grid_max_location", rep.grid_max_location),
                ("g_at_half", rep.g_at_half),
                ("second_difference_at_half", rep.second_difference_at_half),
                ("failure_reason", rep.failure_reason),
            ],
            fmt,
        )
        return 0
    if what == "gamma":
        if not _require(args, ["k", "r"]):
            return 2
        g = analytics.find_gamma(args.k, args.r)
        _print_kv([("gamma", g if g is not None else "none")], fmt)
        return 0
    if what == "rate":
        if not _require(args, ["k", "r"]):
            return 2
        rep = analytics.first_moment_rate(args.k, args.r)
        _print_kv(
            [
                ("rate_at_half", rep.rate_at_half),
                ("max_rate", rep.max_rate),
                ("argmax_x", rep.argmax_x),
            ],
            fmt,
        )
        return 0
    if what == "ratio":
        if not _require(args, ["n", "k", "r", "gamma"]):
            return 2
        _print_kv(
            [("ratio", analytics.second_moment_ratio(args.n, args.k, args.r, args.gamma))], fmt
        )
        return 0
    if what == "bounds":
        if not _require(args, ["c"]):
            return 2
        pairs = [("alt_cycle_free_lower_bound", analytics.alt_cycle_free_lower_bound(args.c))]
        if args.n is not None:
            pairs.append(("bicycle_expectation_bound", analytics.bicycle_expectation_bound(args.c, args.n)))
        _print_kv(pairs, fmt)
        return 0
    return 2


def _cmd_threshold(args) -> int:
    res = locate_threshold(
        args.n,
        args.k,
        target=args.target,
        tol=args.tol,
        trials=args.trials,
        seed=args.seed,
        solver=args.solver,
        workers=args.workers,
    )
    _print_kv(
        [
            ("estimate", res.estimate),
            ("bracket_lo", res.bracket_lo),
            ("bracket_hi", res.bracket_hi),
            ("flag", res.flag),
        ],
        args.format,
    )
    return 0


def _cmd_scan(args) -> int:
    given = [x for x in (args.m, args.p, args.s) if x is not None]
    if len(given) != 1:
        print("exactly one of --m, --p, --s (comma-separated grid) is required", file=sys.stderr)
        return 2
    if args.m is not None:
        grid = _int_list(args.m)
    elif args.p is not None:
        grid = _float_list(args.p)
    else:
        grid = _int_list(args.s)
    if not grid:
        print("grid must be nonempty", file=sys.stderr)
        return 2
    model_field = "m" if args.m is not None else ("p" if args.p is not None else "s")
    cfg = ExperimentConfig(
        n=args.n,
        k=args.k,
        trials=args.trials,
        seed=args.seed,
        solver=args.solver,
        mode=args.mode,
        grid=tuple(grid),
        nested=args.nested,
        workers=args.workers,
        **{model_field: grid[0]},
    )
    records = scan(cfg)
    text = format_csv(records)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return 0


def _cmd_listcolor(args) -> int:
    cfg = ExperimentConfig(
        n=args.n,
        k=args.k,
        trials=args.trials,
        seed=args.seed,
        solver=args.solver,
        s=args.s,
        workers=args.workers,
    )
    rec = estimate_probability(cfg)
    _print_kv(
        [
            ("n", rec.n),
            ("k", rec.k),
            ("s", rec.param),
            ("trials", rec.trials),
            ("sat", rec.sat),
            ("p_hat", rec.p_hat),
            ("ci_lo", rec.ci_lo),
            ("ci_hi", rec.ci_hi),
        ],
        args.format,
    )
    return 0


def _cmd_validate_moments(args) -> int:
    rep = moment_validation(
        args.n,
        args.k,
        args.r,
        args.gamma,
        args.trials,
        seed=args.seed,
        workers=args.workers,
    )
    _print_kv(
        [
            ("sample_mean", rep.sample_mean),
            ("std_error", rep.std_error),
            ("closed_binom", rep.closed_binom),
            ("closed_paper", rep.closed_paper),
            ("supported", rep.supported),
        ],
        args.format,
    )
    return 0


_HANDLERS = {
    "sample": _cmd_sample,
    "decide": _cmd_decide,
    "solve": _cmd_solve,
    "bicycle-check": _cmd_bicycle_check,
    "export-dimacs": _cmd_export_dimacs,
    "analytic": _cmd_analytic,
    "threshold": _cmd_threshold,
    "scan": _cmd_scan,
    "listcolor": _cmd_listcolor,
    "validate-moments": _cmd_validate_moments,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except (DchParseError,) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
