"""Command-line surface: ``leroy-kit <eval|tabulate|verify> [flags]``.

Exit codes: 0 success, 1 unexpected verify failure, 2 domain error,
3 non-convergence.  Flags are long-form only; ``LEROY_KIT_TOL`` overrides
the default series tolerance when ``--tol`` is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import identity_harness as harness
from . import lerch_family as lf
from . import leroy_family as rf
from . import transforms_resummation as tr
from .errors import ConvergenceError, DomainError
from .series_engine import EvalResult

_DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class _FnSpec:
    params: tuple[str, ...]  # required parameter flags
    call: Callable[..., EvalResult]  # call(primary, params, tol)
    primary: str = "zeta"  # the argument tabulate varies


def _fns() -> dict[str, _FnSpec]:
    return {
        "leroy": _FnSpec(("mu",), lambda z, p, tol: rf.leroy(z, p["mu"], tol)),
        "leroy-gen": _FnSpec(
            ("alpha", "beta", "mu"),
            lambda z, p, tol: rf.leroy_gen(z, p["alpha"], p["beta"], p["mu"], tol),
        ),
        "leroy4": _FnSpec(
            ("alpha", "beta", "gamma", "delta"),
            lambda z, p, tol: rf.leroy4(z, p["alpha"], p["beta"], p["gamma"], p["delta"], tol),
        ),
        "prabhakar": _FnSpec(
            ("alpha", "beta", "gamma"),
            lambda z, p, tol: rf.prabhakar(z, p["alpha"], p["beta"], p["gamma"], tol),
        ),
        "lerch": _FnSpec(
            ("alpha", "s"), lambda z, p, tol: lf.lerch(z, p["alpha"], p["s"], tol=tol)
        ),
        "lerch-gen": _FnSpec(
            ("alpha", "beta", "s"),
            lambda z, p, tol: lf.lerch_gen(z, p["alpha"], p["beta"], p["s"], tol),
        ),
        "polylog": _FnSpec(("s",), lambda z, p, tol: lf.polylog(p["s"], z, tol)),
        "polylog-half": _FnSpec(("s",), lambda z, p, tol: lf.polylog_half(p["s"], z, tol)),
        "ti": _FnSpec(("s",), lambda z, p, tol: lf.ti_gen(z, p["s"], tol)),
        "chi": _FnSpec(("s",), lambda z, p, tol: lf.legendre_chi(p["s"], z, tol=tol)),
        "chi-c": _FnSpec(("s",), lambda z, p, tol: lf.chi_c(p["s"], z, tol)),
        "chi-s": _FnSpec(("s",), lambda z, p, tol: lf.chi_s_part(p["s"], z, tol)),
        "hurwitz-zeta": _FnSpec(
            ("s",), lambda a, p, tol: lf.hurwitz_zeta(p["s"], a), primary="alpha"
        ),
        "polygamma": _FnSpec(
            ("m",), lambda a, p, tol: lf.polygamma(int(p["m"]), a), primary="alpha"
        ),
        "polygamma2": _FnSpec(
            ("m", "alpha"), lambda z, p, tol: lf.polygamma2(int(p["m"]), p["alpha"], z)
        ),
        "euler-d1": _FnSpec((), lambda z, p, tol: tr.euler_d1_bar(z)),
        "euler-d2": _FnSpec((), lambda z, p, tol: tr.euler_d2_bar(z)),
        "euler-d2-gen": _FnSpec(
            ("alpha", "beta"),
            lambda z, p, tol: tr.euler_d2_bar_gen(z, p["alpha"], p["beta"]),
        ),
    }


_PARAM_FLAGS = ("mu", "alpha", "beta", "gamma", "delta", "s", "m")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leroy-kit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        for flag in _PARAM_FLAGS:
            p.add_argument(f"--{flag}", type=float, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
        p.add_argument("--precision", type=int, default=15)
        p.add_argument("--out", default=None)

    pe = sub.add_parser("eval", help="evaluate one function at one point")
    pe.add_argument("function")
    pe.add_argument("--zeta", type=float, default=None)
    common(pe)

    pt = sub.add_parser("tabulate", help="tabulate a function over a range")
    pt.add_argument("function")
    pt.add_argument("--from", dest="start", type=float, required=True)
    pt.add_argument("--to", dest="stop", type=float, required=True)
    pt.add_argument("--steps", type=int, required=True)
    common(pt)

    pv = sub.add_parser("verify", help="run the identity registry")
    pv.add_argument("identity_id", nargs="?", default=None)
    pv.add_argument("--profile", choices=("default", "strict"), default="default")
    pv.add_argument("--format", choices=("plain", "csv", "json"), default="json")
    pv.add_argument("--precision", type=int, default=15)
    pv.add_argument("--out", default=None)
    return ap


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _fmt(v: float, precision: int) -> str:
    return format(v, f".{precision}g")


def _check_precision(precision: int) -> None:
    if not 6 <= precision <= 17:
        raise DomainError(f"precision must be in [6, 17], got {precision}")


def _gather_params(args, spec: _FnSpec) -> dict[str, float]:
    params = {}
    for flag in spec.params:
        v = getattr(args, flag)
        if v is None:
            raise DomainError(f"missing required parameter --{flag}")
        params[flag] = v
    return params


def _tol_from(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("LEROY_KIT_TOL")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise DomainError(f"bad LEROY_KIT_TOL value {env!r}") from exc
    return _DEFAULT_TOL


def _cmd_eval(args) -> int:
    _check_precision(args.precision)
    fns = _fns()
    if args.function not in fns:
        raise DomainError(
            f"unknown function {args.function!r}; choose from {', '.join(sorted(fns))}"
        )
    spec = fns[args.function]
    params = _gather_params(args, spec)
    primary = args.zeta if spec.primary == "zeta" else getattr(args, spec.primary)
    if primary is None:
        raise DomainError(f"missing required argument --{spec.primary}")
    r = spec.call(primary, params, _tol_from(args))
    p = args.precision
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "value": float(_fmt(r.value, p)),
                    "abs_err": float(_fmt(r.abs_err, p)),
                    "method": r.method.value,
                    "terms_or_level": r.terms_or_level,
                }
            ),
            args.out,
        )
    elif args.format == "csv":
        _emit(
            "value,abs_err,method,terms_or_level\n"
            f"{_fmt(r.value, p)},{_fmt(r.abs_err, p)},{r.method.value},{r.terms_or_level}",
            args.out,
        )
    else:
        _emit(
            f"value = {_fmt(r.value, p)}\n"
            f"abs_err = {_fmt(r.abs_err, p)}\n"
            f"method = {r.method.value}\n"
            f"terms_or_level = {r.terms_or_level}",
            args.out,
        )
    return 0


def _cmd_tabulate(args) -> int:
    _check_precision(args.precision)
    fns = _fns()
    if args.function not in fns:
        raise DomainError(f"unknown function {args.function!r}")
    if args.steps < 1:
        raise DomainError("steps must be >= 1")
    if not args.start < args.stop:
        raise DomainError("--from must be less than --to")
    spec = fns[args.function]
    params = _gather_params(args, spec)
    tol = _tol_from(args)
    p = args.precision
    rows = []
    ok = 0
    last_error: Exception | None = None
    for k in range(args.steps + 1):
        z = args.start + (args.stop - args.start) * k / args.steps
        try:
            r = spec.call(z, params, tol)
            rows.append((z, r.value, r.abs_err, None))
            ok += 1
        except (DomainError, ConvergenceError) as exc:
            rows.append((z, None, None, str(exc)))
            last_error = exc
    if args.format == "json":
        payload = [
            {"zeta": z, "value": v, "abs_err": e} if msg is None else {"zeta": z, "error": msg}
            for z, v, e, msg in rows
        ]
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        lines = ["zeta,value,abs_err"]
        for z, v, e, msg in rows:
            if msg is None:
                lines.append(f"{_fmt(z, p)},{_fmt(v, p)},{_fmt(e, p)}")
            else:
                lines.append(f"{_fmt(z, p)},ERROR,{msg.replace(',', ';')}")
        _emit("\n".join(lines), args.out)
    else:
        lines = [f"{'zeta':>24} {'value':>24} {'abs_err':>12}"]
        for z, v, e, msg in rows:
            if msg is None:
                lines.append(f"{_fmt(z, p):>24} {_fmt(v, p):>24} {_fmt(e, 3):>12}")
            else:
                lines.append(f"{_fmt(z, p):>24} error: {msg}")
        _emit("\n".join(lines), args.out)
    if ok == 0:
        if isinstance(last_error, ConvergenceError):
            return 3
        return 2
    return 0


def _cmd_verify(args) -> int:
    _check_precision(args.precision)
    profile = harness.Profile(args.profile)
    if args.identity_id:
        reports = [harness.run_identity(args.identity_id, profile=profile)]
    else:
        reports = harness.run_all(profile=profile)
    if args.format == "json":
        _emit(harness.reports_to_json(reports), args.out)
    elif args.format == "csv":
        lines = ["identity_id,status,max_abs_err,tolerance"]
        for r in reports:
            err = "" if r.max_abs_err is None else _fmt(r.max_abs_err, args.precision)
            lines.append(f"{r.identity_id},{r.status.value},{err},{r.tolerance!r}")
        _emit("\n".join(lines), args.out)
    else:
        lines = []
        for r in reports:
            err = "n/a" if r.max_abs_err is None else _fmt(r.max_abs_err, 6)
            lines.append(
                f"{r.status.value:>12}  {r.identity_id:<32} max_err={err} tol={r.tolerance:g}"
            )
        _emit("\n".join(lines), args.out)
    expected_fail = set(harness.expected_failure_ids())
    for r in reports:
        if r.status is harness.Status.FAIL and r.identity_id not in expected_fail:
            return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "tabulate":
            return _cmd_tabulate(args)
        return _cmd_verify(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
