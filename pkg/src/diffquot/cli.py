"""Command-line front end.

Subcommands: ``expand`` prints the two-factor expansion terms, ``apply``
and ``multi`` evaluate a closed form next to its iterated-operator oracle,
``verify`` runs seeded randomized exact campaigns, and ``numeric`` runs the
floating-point grid check.  Exit codes: 0 success, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from .bipoly import LAM, ONE, ZERO, BiPoly
from .leibniz import apply_expansion, leibniz_terms, render_term
from .multifactor import (
    egf_check,
    egf_pair,
    forward_binomial,
    inverse_binomial,
    multi_delta,
)
from .numeric import GridSpec, NumericFn, SingularityInWindowError, verify_two_factor
from .operators import delta_pow, translate_pow
from .parsing import ParseError, parse_poly
from .sampling import random_bipoly


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int  # 0 success, 1 verification failure, 2 usage/parse error
    payload: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from exiting the process
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="diffquot", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("expand", help="print the two-factor expansion of order r")
    p.add_argument("--r", type=int, required=True, help="expansion order, positive")
    p.add_argument("--json", action="store_true", help="one JSON object per term")

    p = sub.add_parser("apply", help="expansion vs iterated-operator oracle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--f", required=True, help="polynomial, e.g. 'x^2 - 1/2*l'")
    p.add_argument("--g", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("multi", help="multifactor closed form vs oracle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--factors", required=True, help="comma-separated polynomials")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="seeded randomized exact campaigns")
    p.add_argument(
        "--theorem",
        required=True,
        choices=["1.1", "1.3", "inversion", "egf"],
        help="1.1 = two-factor expansion, 1.3 = multifactor expansion, "
        "inversion = binomial inversion round trip, egf = e^t series identity "
        "(for egf, --r is the truncation order)",
    )
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=3, help="factor count (1.3/inversion/egf)")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("numeric", help="floating-point two-factor grid check")
    p.add_argument("--f", required=True, help="exp, sin, cos, poly:c0,c1,..., recip:a")
    p.add_argument("--g", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")

    return parser


def run_command(argv: Sequence[str]) -> CommandOutcome:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise _UsageError("missing subcommand (see diffquot --help)")
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        return CommandOutcome(2, f"error: {exc}\n")
    except ParseError as exc:
        return CommandOutcome(2, f"error: {exc}\n")
    except SystemExit as exc:  # argparse --help
        code = exc.code if isinstance(exc.code, int) else 0
        return CommandOutcome(code, "")


def main(argv: Sequence[str] | None = None) -> int:
    outcome = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if outcome.exit_code == 2 else sys.stdout
    stream.write(outcome.payload)
    return outcome.exit_code


def _require_positive_r(r: int, command: str) -> None:
    if r < 1:
        raise _UsageError(f"{command} requires a positive integer r")


def _cmd_expand(args) -> CommandOutcome:
    _require_positive_r(args.r, "expand")
    e = leibniz_terms(args.r)
    if args.json:
        lines = [json.dumps(dataclasses.asdict(t)) for t in e.terms]
    else:
        lines = [render_term(t) for t in e.terms]
    return CommandOutcome(0, "\n".join(lines) + "\n")


def _cmd_apply(args) -> CommandOutcome:
    _require_positive_r(args.r, "apply")
    f = parse_poly(args.f)
    g = parse_poly(args.g)
    result = apply_expansion(leibniz_terms(args.r), f, g)
    oracle = delta_pow(f * g, args.r)
    return _verdict_outcome(args, result, oracle)


def _cmd_multi(args) -> CommandOutcome:
    _require_positive_r(args.r, "multi")
    factors = [parse_poly(part) for part in args.factors.split(",")]
    result = multi_delta(factors, args.r)
    oracle = delta_pow(math.prod(factors, start=ONE), args.r)
    return _verdict_outcome(args, result, oracle)


def _verdict_outcome(args, result: BiPoly, oracle: BiPoly) -> CommandOutcome:
    equal = result == oracle
    if args.json:
        payload = (
            json.dumps(
                {
                    "r": args.r,
                    "result": str(result),
                    "oracle": str(oracle),
                    "equal": equal,
                }
            )
            + "\n"
        )
    else:
        payload = (
            f"closed form: {result}\n"
            f"oracle:      {oracle}\n"
            f"verdict:     {'EQUAL' if equal else 'DIFFER'}\n"
        )
    return CommandOutcome(0 if equal else 1, payload)


def _cmd_verify(args) -> CommandOutcome:
    _require_positive_r(args.r, "verify")
    if args.trials < 1:
        raise _UsageError("trials must be a positive integer")
    if args.n < 1:
        raise _UsageError("n must be a positive integer")
    rng = random.Random(args.seed)
    check = _CAMPAIGNS[args.theorem]
    for trial in range(args.trials):
        ok, inputs = check(rng, args.r, args.n)
        if not ok:
            lines = [
                f"theorem {args.theorem}: FAIL trial={trial} seed={args.seed} "
                f"r={args.r} n={len(inputs)}"
            ]
            lines += [f"  {name} = {p}" for name, p in inputs]
            return CommandOutcome(1, "\n".join(lines) + "\n")
    n = 2 if args.theorem == "1.1" else args.n
    return CommandOutcome(
        0,
        f"theorem {args.theorem}: ok trials={args.trials} r={args.r} "
        f"n={n} seed={args.seed}\n",
    )


def _campaign_two_factor(rng, r, n):
    f = random_bipoly(rng)
    g = random_bipoly(rng)
    ok = apply_expansion(leibniz_terms(r), f, g) == delta_pow(f * g, r)
    return ok, [("f", f), ("g", g)]


def _random_factors(rng, n):
    return [random_bipoly(rng, max_deg_x=4, max_deg_lam=1, max_terms=4) for _ in range(n)]


def _campaign_multi_factor(rng, r, n):
    factors = _random_factors(rng, n)
    oracle = delta_pow(math.prod(factors, start=ONE), r)
    ok = multi_delta(factors, r) == oracle
    return ok, [(f"f{i + 1}", p) for i, p in enumerate(factors)]


def _campaign_inversion(rng, r, n):
    factors = _random_factors(rng, n)
    big_f = math.prod(factors, start=ONE)
    # forward outputs fed through the inverse transform and vice versa
    from_forward = ZERO
    from_inverse = ZERO
    sign = (-1) ** r
    for k in range(r + 1):
        c = math.comb(r, k)
        from_forward = from_forward + c * forward_binomial(factors, k)
        from_inverse = from_inverse + sign * c * inverse_binomial(factors, k)
        sign = -sign
    ok = (
        from_forward == translate_pow(big_f, r)
        and from_inverse == LAM**r * delta_pow(big_f, r)
    )
    return ok, [(f"f{i + 1}", p) for i, p in enumerate(factors)]


def _campaign_egf(rng, r, n):
    factors = _random_factors(rng, n)
    a, abar = egf_pair(factors, order=r)
    return egf_check(a, abar), [(f"f{i + 1}", p) for i, p in enumerate(factors)]


_CAMPAIGNS = {
    "1.1": _campaign_two_factor,
    "1.3": _campaign_multi_factor,
    "inversion": _campaign_inversion,
    "egf": _campaign_egf,
}


def _cmd_numeric(args) -> CommandOutcome:
    _require_positive_r(args.r, "numeric")
    if args.tol <= 0:
        raise _UsageError("tol must be positive")
    try:
        f = NumericFn.parse(args.f)
        g = NumericFn.parse(args.g)
        grid = GridSpec(args.x0, args.step, args.count, args.lam)
        report = verify_two_factor(f, g, args.r, grid, args.tol)
    except SingularityInWindowError as exc:
        raise _UsageError(str(exc))
    except ValueError as exc:
        raise _UsageError(str(exc))
    if args.json:
        payload = report.to_json() + "\n"
    else:
        payload = (
            f"max_abs_err={report.max_abs_err:.6e} "
            f"max_rel_err={report.max_rel_err:.6e} "
            f"cancellation_ratio={report.cancellation_ratio:.6e} "
            f"trials={report.trials} pass={'yes' if report.passed else 'no'}\n"
        )
    return CommandOutcome(0 if report.passed else 1, payload)


_HANDLERS = {
    "expand": _cmd_expand,
    "apply": _cmd_apply,
    "multi": _cmd_multi,
    "verify": _cmd_verify,
    "numeric": _cmd_numeric,
}


if __name__ == "__main__":
    sys.exit(main())
