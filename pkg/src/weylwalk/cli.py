"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors, 2 on domain errors such as
endpoints outside the chamber or an unreachable fixed endpoint.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from datetime import datetime, timezone
from fractions import Fraction

import mpmath

from . import __version__
from .asymptotics import (DEFAULT_PREC, VARIANTS, convergence_report, fixed_endpoint_asymptotic,
                          free_endpoint_asymptotic)
from .counting import count_confined_dp, count_confined_reflection, count_free_endpoint
from .lattice import DomainError, Model, check_chamber, reachable
from .schur import det_direct, det_schur_series, exp_i_coeffs, geometric_coeffs
from .selberg import HERMITE_MOMENTS, LAGUERRE_MOMENTS, Weight, moment, quadrature_oracle, selberg_one
from .series import format_gq, gq

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Bad command-line input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _n_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _n_ladder(text: str) -> list[int]:
    try:
        start, factor, count = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("ladder must be start:factor:count") from None
    if start < 1 or factor < 2 or count < 0:
        raise argparse.ArgumentTypeError("ladder needs start >= 1, factor >= 2, count >= 0")
    return [start * factor**i for i in range(count)]


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--model", choices=["lockstep", "randomturns"], default="lockstep")
    p.add_argument("-k", type=int, help="dimension (inferred from vectors when omitted)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON record")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised inputs")
    p.add_argument("--precision", type=int, default=DEFAULT_PREC, help="working precision in bits")
    p.add_argument("--meta", action="store_true", help="add version and timestamp to the output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="weylwalk", description="Walks confined to the type-A Weyl chamber.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", parents=[common], help="exact confined counts")
    c.add_argument("--from", dest="start", type=_int_vector, required=True)
    c.add_argument("--to", dest="end", type=_int_vector)
    c.add_argument("--free", action="store_true", help="sum over all endpoints")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--method", choices=["dp", "reflection", "both"], default="dp")

    a = sub.add_parser("asympt", parents=[common], help="asymptotic estimates")
    a.add_argument("--from", dest="start", type=_int_vector, required=True)
    a.add_argument("--to", dest="end", type=_int_vector)
    a.add_argument("--free", action="store_true")
    a.add_argument("-n", type=int, required=True)
    a.add_argument("--order", type=int, choices=[1, 2], default=2)
    a.add_argument("--variant", choices=VARIANTS, default="corrected")
    a.add_argument("--with-exact", action="store_true", help="also compute the exact count")

    v = sub.add_parser("convergence", parents=[common], help="error ladder against exact counts")
    v.add_argument("--from", dest="start", type=_int_vector, required=True)
    v.add_argument("--to", dest="end", type=_int_vector)
    v.add_argument("--free", action="store_true")
    ladder = v.add_mutually_exclusive_group(required=True)
    ladder.add_argument("--n-list", type=_n_list)
    ladder.add_argument("--n-ladder", type=_n_ladder)
    v.add_argument("--order", type=int, choices=[1, 2], default=2)
    v.add_argument("--variant", choices=VARIANTS, default="corrected")

    e = sub.add_parser("expand", parents=[common], help="check the Schur expansion of det(f(z_j u_m))")
    e.add_argument("--f", dest="func", default="exp_i",
                   help="exp_i, geometric, random, or poly:<a0,a1,...>")
    e.add_argument("--u", type=_rational_vector, required=True)
    e.add_argument("--degree", type=int, required=True)

    s = sub.add_parser("selberg", parents=[common], help="Selberg-type integrals")
    s.add_argument("--weight", default="hermite", help="hermite or laguerre:<alpha>")
    s.add_argument("--moment", default="one")
    return parser


def _model(args, *vectors) -> Model:
    lengths = {len(x) for x in vectors if x is not None}
    if len(lengths) > 1:
        raise UsageError("endpoint vectors have different lengths")
    k = args.k
    if lengths:
        (inferred,) = lengths
        if k is not None and k != inferred:
            raise UsageError(f"-k {k} does not match vector length {inferred}")
        k = inferred
    if k is None:
        raise UsageError("give -k or an endpoint vector")
    if k < 1:
        raise UsageError("k must be at least 1")
    return Model.lock_step(k) if args.model == "lockstep" else Model.random_turns(k)


def _endpoint_mode(args):
    if args.free and args.end is not None:
        raise UsageError("--free and --to are mutually exclusive")
    if not args.free and args.end is None:
        raise UsageError("give --to or --free")


def _real(x) -> str:
    return mpmath.nstr(x, 25)


def cmd_count(args) -> dict:
    _endpoint_mode(args)
    model = _model(args, args.start, args.end)
    u = check_chamber(args.start, "start")
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    methods = ["dp", "reflection"] if args.method == "both" else [args.method]
    out: dict = {}
    if args.free:
        for m in methods:
            out[m] = count_free_endpoint(model, u, args.n, method="dp" if m == "dp" else "reflection_sum")
    else:
        v = check_chamber(args.end, "end")
        out["reachable"] = reachable(model, u, v, args.n)
        for m in methods:
            if not out["reachable"]:
                # counts live on the model lattice; parity failure means zero
                out[m] = 0
                continue
            out[m] = (count_confined_dp if m == "dp" else count_confined_reflection)(model, u, v, args.n)
    out["count"] = str(out[methods[0]])
    for m in methods:
        out[m] = str(out[m])
    if args.method == "both":
        out["agree"] = out["dp"] == out["reflection"]
    return out


def cmd_asympt(args) -> dict:
    _endpoint_mode(args)
    model = _model(args, args.start, args.end)
    with mpmath.workprec(args.precision):
        if args.free:
            est = free_endpoint_asymptotic(model, args.start, args.n, args.order, args.variant, args.precision)
        else:
            est = fixed_endpoint_asymptotic(model, args.start, args.end, args.n, args.order, args.variant,
                                            args.precision)
        out = {"log_estimate": _real(est.log_value), "estimate": _real(mpmath.exp(est.log_value)),
               "order": int(est.order), "variant": est.variant}
        if args.with_exact:
            if args.free:
                exact = count_free_endpoint(model, args.start, args.n)
            else:
                exact = count_confined_reflection(model, args.start, args.end, args.n)
            out["exact"] = str(exact)
            out["rel_error"] = _real(est.relative_error(exact))
    return out


def cmd_convergence(args):
    _endpoint_mode(args)
    model = _model(args, args.start, args.end)
    ns = args.n_list if args.n_list is not None else args.n_ladder
    if not ns:
        raise UsageError("empty n list")
    if any(n < 1 for n in ns):
        raise UsageError("n values must be positive")
    return convergence_report(model, args.start, None if args.free else args.end, ns, args.order,
                              args.variant, args.precision)


def _coeffs(text: str, degree: int, seed: int):
    if text == "exp_i":
        return exp_i_coeffs(degree)
    if text == "geometric":
        return geometric_coeffs(degree)
    if text == "random":
        rng = random.Random(seed)
        return [gq(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for _ in range(degree + 1)]
    if text.startswith("poly:"):
        try:
            a = [Fraction(x) for x in text[5:].split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad polynomial coefficients in {text!r}") from None
        return [gq(x) for x in a] + [gq(0)] * max(0, degree + 1 - len(a))
    raise UsageError(f"unknown function {text!r}")


def cmd_expand(args) -> dict:
    if args.degree < 0:
        raise UsageError("degree must be nonnegative")
    if args.k is not None and args.k != len(args.u):
        raise UsageError(f"-k {args.k} does not match --u length {len(args.u)}")
    a = _coeffs(args.func, args.degree, args.seed)
    lhs = det_direct(a, args.u, args.degree)
    rhs = det_schur_series(a, args.u, args.degree)
    keys = sorted(set(lhs.terms) | set(rhs.terms), key=lambda e: (sum(e), tuple(-x for x in e)))
    table = [{"exponent": list(e), "lhs": format_gq(lhs.coeff(e)), "rhs": format_gq(rhs.coeff(e))} for e in keys]
    return {"k": len(args.u), "degree": args.degree, "terms": table, "identical": lhs == rhs}


def _weight(args) -> Weight:
    k = args.k if args.k is not None else 1
    text = args.weight
    if text == "hermite":
        return Weight.hermite(k)
    if text.startswith("laguerre:"):
        try:
            alpha = Fraction(text.split(":", 1)[1])
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad alpha in {text!r}") from None
        return Weight.laguerre(k, alpha)
    raise UsageError(f"unknown weight {text!r}")


def cmd_selberg(args) -> dict:
    try:
        w = _weight(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    allowed = ("one",) + (HERMITE_MOMENTS if w.alpha is None else LAGUERRE_MOMENTS)
    if args.moment not in allowed:
        raise UsageError(f"moment must be one of {allowed}")
    one = selberg_one(w)
    ratio = moment(w, args.moment)
    dps = max(30, int(args.precision * 0.30103))
    with mpmath.workdps(dps):
        closed = one.to_mpf() * mpmath.mpf(ratio.numerator) / ratio.denominator
        oracle = quadrature_oracle(w, args.moment, dps=dps)
        dev = abs(oracle / closed - 1) if closed else abs(oracle)
        return {"weight": args.weight, "k": w.k, "moment": args.moment, "one": one.as_dict(),
                "ratio": str(ratio), "closed_form": _real(closed), "oracle": _real(oracle),
                "deviation": mpmath.nstr(dev, 6)}


def _params(args) -> dict:
    skip = {"json", "csv", "meta", "command"}
    out = {}
    for key, val in sorted(vars(args).items()):
        if key in skip or val is None:
            continue
        out[key] = [str(x) for x in val] if isinstance(val, (tuple, list)) else val
    return out


def _emit_table(result: dict, args, stream):
    if args.csv:
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(["key", "value"])
        for key, val in result.items():
            w.writerow([key, json.dumps(val) if isinstance(val, (list, dict)) else val])
        return
    for key, val in result.items():
        if key == "terms":
            stream.write(f"{'exponent':<16}{'lhs':>24}{'rhs':>24}\n")
            for row in val:
                stream.write(f"{str(tuple(row['exponent'])):<16}{row['lhs']:>24}{row['rhs']:>24}\n")
        else:
            stream.write(f"{key}={str(val).lower() if isinstance(val, bool) else val}\n")


def _emit(command: str, result, args, stream):
    if command == "convergence":
        if args.json:
            rows = [{"n": r.n, "exact": str(r.exact), "log_estimate": _real(r.log_estimate),
                     "rel_error": _real(r.rel_error)} for r in result.rows]
            result = {"rows": rows, "slope": result.slope, "fit_points": result.fit_points}
        else:
            stream.write(result.to_csv())
            return
    if args.json:
        record = {"schema": SCHEMA_VERSION, "command": command, "params": _params(args), "results": result}
        if args.meta:
            record["meta"] = {"version": __version__, "timestamp": datetime.now(timezone.utc).isoformat()}
        stream.write(json.dumps(record, sort_keys=True) + "\n")
        return
    _emit_table(result, args, stream)
    if args.meta:
        stream.write(f"# version={__version__} timestamp={datetime.now(timezone.utc).isoformat()}\n")


COMMANDS = {
    "count": cmd_count,
    "asympt": cmd_asympt,
    "convergence": cmd_convergence,
    "expand": cmd_expand,
    "selberg": cmd_selberg,
}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"weylwalk: error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"weylwalk: domain error: {exc}", file=sys.stderr)
        return 2
    buf = io.StringIO()
    _emit(args.command, result, args, buf)
    stdout.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
