"""Command-line surface.

    qsf eval <fn> --q <r> --x <r> [--k <int>] [--a <r>] [--n <int>] [--eps <r>]
    qsf zero --q <r> [--tol <r>] [--which psi|gplus|gminus]
    qsf check <check-id> [--q <r>] [--param name=value ...]
    qsf suite [--seed <u64>] [--samples <int>] [--q-min <r>] [--q-max <r>]
              [--include id,...] [--exclude id,...] [--out <path>] [--format json|csv]
    qsf identities [--q <r>] [--n-max <int>]

Exit codes: 0 all pass, 1 any fail, 2 usage/domain error, 3 numeric
non-convergence.  The environment variable QSF_EPS overrides the
default truncation tolerance; an explicit --eps flag wins over it.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog, identities, qcore, qgamma, roots
from .context import QContext
from .errors import (
    BracketFailure,
    DomainViolation,
    InvalidArgument,
    NonConvergent,
    Overflow,
    UnknownCheck,
)
from .sampling import sample_params, substream
from .suite import SuiteConfig, run_suite, serialize_report

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

EVAL_FNS = (
    "bracket", "qpoch", "qpochinf", "phi10", "gamma",
    "loggamma", "psi", "psideriv", "gammaconst",
)


def _default_eps() -> float:
    env = os.environ.get("QSF_EPS")
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise InvalidArgument(f"bad QSF_EPS value {env!r}") from exc
    return 1e-12


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsf",
        description="q-gamma/q-digamma evaluations and inequality verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function")
    p_eval.add_argument("fn", choices=EVAL_FNS)
    p_eval.add_argument("--q", type=float, required=True)
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--k", type=int)
    p_eval.add_argument("--a", type=float)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--eps", type=float)

    p_zero = sub.add_parser("zero", help="locate a root in (1,2)")
    p_zero.add_argument("--q", type=float, required=True)
    p_zero.add_argument("--tol", type=float, default=1e-12)
    p_zero.add_argument("--which", choices=("psi", "gplus", "gminus"), default="psi")
    p_zero.add_argument("--eps", type=float)

    p_check = sub.add_parser("check", help="run one catalog check")
    p_check.add_argument("check_id")
    p_check.add_argument("--q", type=float)
    p_check.add_argument("--param", action="append", default=[],
                         metavar="name=value", help="explicit parameter")
    p_check.add_argument("--eps", type=float)

    p_suite = sub.add_parser("suite", help="run the full verification suite")
    p_suite.add_argument("--seed", type=int, default=42)
    p_suite.add_argument("--samples", type=int, default=1000)
    p_suite.add_argument("--q-min", type=float, default=0.05)
    p_suite.add_argument("--q-max", type=float, default=0.95)
    p_suite.add_argument("--include", type=str, default="")
    p_suite.add_argument("--exclude", type=str, default="")
    p_suite.add_argument("--out", type=str)
    p_suite.add_argument("--format", choices=("json", "csv"), default="json")
    p_suite.add_argument("--eps", type=float)

    p_ident = sub.add_parser("identities", help="run all identity residual checks")
    p_ident.add_argument("--q", type=float, default=0.5)
    p_ident.add_argument("--n-max", type=int)
    p_ident.add_argument("--eps", type=float)

    return parser


def _ctx(q: float, eps: float | None) -> QContext:
    return QContext(q=q, eps=eps if eps is not None else _default_eps())


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidArgument(message)


def _cmd_eval(args) -> int:
    ctx = _ctx(args.q, args.eps)
    fn = args.fn
    if fn == "bracket":
        _require(args.x is not None, "bracket needs --x")
        print(f"value={qcore.q_bracket(ctx, args.x):.17g}")
        return EXIT_PASS
    if fn == "qpoch":
        _require(args.a is not None and args.n is not None, "qpoch needs --a and --n")
        print(f"value={qcore.qpoch_finite(ctx, args.a, args.n):.17g}")
        return EXIT_PASS
    if fn == "qpochinf":
        _require(args.a is not None, "qpochinf needs --a")
        r = qcore.qpoch_inf(ctx, args.a)
    elif fn == "phi10":
        _require(args.a is not None and args.x is not None, "phi10 needs --a and --x")
        r = qcore.phi10(ctx, args.a, args.x, form="series")
    elif fn == "gamma":
        _require(args.x is not None, "gamma needs --x")
        r = qgamma.gamma_q(ctx, args.x)
    elif fn == "loggamma":
        _require(args.x is not None, "loggamma needs --x")
        r = qgamma.log_gamma_q(ctx, args.x)
    elif fn == "psi":
        _require(args.x is not None, "psi needs --x")
        r = qgamma.psi_q(ctx, args.x)
    elif fn == "psideriv":
        _require(args.x is not None and args.k is not None, "psideriv needs --x and --k")
        r = qgamma.psi_q_deriv(ctx, args.x, args.k)
    elif fn == "gammaconst":
        r = qgamma.gamma_q_constant(ctx)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidArgument(fn)
    print(f"value={r.value:.17g} err={r.err:.3g}")
    return EXIT_PASS


def _cmd_zero(args) -> int:
    ctx = _ctx(args.q, args.eps)
    if args.which == "psi":
        r = roots.psi_zero(ctx, args.tol)
    else:
        r = roots.g_plus_minus_zero(ctx, "+" if args.which == "gplus" else "-", args.tol)
    print(
        f"x0={r.x0:.17g} residual={r.residual:.3g} "
        f"bracket=[{r.bracket[0]:.17g}, {r.bracket[1]:.17g}] iterations={r.iterations}"
    )
    return EXIT_PASS


def _parse_param(text: str) -> tuple[str, float]:
    if "=" not in text:
        raise InvalidArgument(f"--param needs name=value, got {text!r}")
    name, _, raw = text.partition("=")
    try:
        return name.strip(), float(raw)
    except ValueError as exc:
        raise InvalidArgument(f"bad numeric value in --param {text!r}") from exc


def _cmd_check(args) -> int:
    entry = catalog.get_entry(args.check_id)
    overrides = dict(_parse_param(p) for p in args.param)
    defaults = sample_params(entry, substream(42, entry.id, 0))
    params = {**defaults, **overrides}
    q = args.q if args.q is not None else params.get("q", 0.5)
    params.pop("q", None)
    ctx = _ctx(q, args.eps)
    outcome = catalog.run_check(ctx, args.check_id, params)
    print(f"check {outcome.id} verdict={outcome.verdict} margin={outcome.margin:.6g}")
    shown = {"q": q, **outcome.params}
    print("  params: " + " ".join(f"{k}={v:.10g}" for k, v in shown.items()))
    for m in outcome.values:
        print(f"  {m.label} = {m.value:.12g} (err {m.err:.2g})")
    if outcome.reason:
        print(f"  reason: {outcome.reason}")
    return EXIT_FAIL if outcome.verdict == catalog.FAIL else EXIT_PASS


def _cmd_suite(args) -> int:
    include = tuple(s for s in args.include.split(",") if s)
    exclude = tuple(s for s in args.exclude.split(",") if s)
    config = SuiteConfig(
        seed=args.seed,
        samples_per_entry=args.samples,
        q_min=args.q_min,
        q_max=args.q_max,
        eps=args.eps if args.eps is not None else _default_eps(),
        include=include,
        exclude=exclude,
    )
    report = run_suite(config)
    payload = serialize_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode())
    for s in report.entries:
        print(
            f"{s.id}: pass={s.passed} fail={s.failed} inconclusive={s.inconclusive} "
            f"min_margin={s.min_margin:.3g}",
            file=sys.stderr,
        )
    print(f"suite verdict: {report.verdict} ({report.wall_time_s:.1f}s)", file=sys.stderr)
    return EXIT_PASS if report.verdict == catalog.PASS else EXIT_FAIL


def _identity_plan(ctx: QContext, n_max: int | None):
    def cap(k: int) -> int:
        return min(k, n_max) if n_max else k

    for n in range(2, cap(8) + 1):
        for z in (0.5, 1.0, 1.7):
            yield identities.check_jackson(ctx, z, n)
    for n in range(2, cap(12) + 1):
        yield identities.check_q_gauss_product(ctx, n, "full")
        yield identities.check_q_gauss_product(ctx, n, "simplified")
    for n in range(2, cap(30) + 1):
        yield identities.check_pqn(ctx, n)
    for n in range(2, cap(12) + 1):
        for k in range(0, 6):
            yield identities.check_psi_sum(ctx, n, k)
    for n in range(2, cap(30) + 1):
        yield identities.check_moebius_product(ctx, n)


def _cmd_identities(args) -> int:
    ctx = _ctx(args.q, args.eps)
    worst = 0.0
    failed = 0
    for res in _identity_plan(ctx, args.n_max):
        status = "PASS" if res.passed else "FAIL"
        failed += 0 if res.passed else 1
        worst = max(worst, res.residual)
        print(f"{res.id}: residual={res.residual:.3g} {status}")
    print(f"identities: {'PASS' if failed == 0 else 'FAIL'} (worst residual {worst:.3g})")
    return EXIT_PASS if failed == 0 else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "zero":
            return _cmd_zero(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "suite":
            return _cmd_suite(args)
        if args.command == "identities":
            return _cmd_identities(args)
        raise InvalidArgument(f"unknown command {args.command!r}")
    except (InvalidArgument, DomainViolation, UnknownCheck) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergent, Overflow, BracketFailure) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
