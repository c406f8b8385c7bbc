"""Command line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
3 the time limit ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .macdonald import compute_E, compute_E_inverted, compute_P
from .qt_field import SYMBOLIC, EvalField, QTRat
from .verify import SUITES, ResourceBound, run_suite
from .weights import (
    as_composition,
    c_lambda,
    coeff_a,
    coeff_b,
    coeff_f,
    compositions,
    is_partition,
    norm_closed_form,
    partitions,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

COMPUTE_KINDS = ("E", "E_inverted", "P", "a", "b", "f", "norm", "C")


class UsageError(ValueError):
    pass


def _parse_lambda(s: str) -> tuple[int, ...]:
    try:
        return as_composition(int(v) for v in s.split(",") if v.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad composition {s!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsmac", description="Exact nonsymmetric Macdonald polynomial toolkit.")
    p.add_argument("--version", action="version", version=f"nsmac {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int, help="number of variables")
        sp.add_argument("--deg", type=int, help="degree (compute) or degree bound (verify)")
        sp.add_argument("--k", type=int, help="t = q^k specialization")
        sp.add_argument("--lambda", dest="lambdas", action="append", type=_parse_lambda, default=[],
                        metavar="a,b,c", help="composition; repeatable")
        sp.add_argument("--mode", choices=("symbolic", "fastcheck"), default="symbolic")
        sp.add_argument("--seed", type=int, default=0, help="fastcheck evaluation point seed")
        sp.add_argument("--format", choices=("pretty", "structured"), default="pretty")
        sp.add_argument("--out", help="write the report to this file")
        sp.add_argument("--time-limit", type=float, help="seconds before giving up (exit 3)")

    c = sub.add_parser("compute", help="compute polynomials or coefficient tables")
    c.add_argument("kind", choices=COMPUTE_KINDS)
    c.add_argument("--factors", type=int, help="norm: truncate generic-t products to this many factors")
    common(c)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    common(v)
    return p


# --------------------------------------------------------------------------
# serialization


def coeff_json(c) -> dict:
    if isinstance(c, QTRat):
        return {"num": str(c.num), "den": str(c.den)}
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def coeff_str(c) -> str:
    return str(c)


def poly_json(f) -> dict:
    names = [f"x{i + 1}" for i in range(f.nvars)]
    return {
        "text": f.to_text(names),
        "terms": [{"exponent": list(e), "coefficient": coeff_json(f.terms[e])}
                  for e in sorted(f.terms, reverse=True)],
    }


# --------------------------------------------------------------------------
# commands


def _field(args):
    if args.mode == "fastcheck":
        return EvalField.random(args.seed)
    return SYMBOLIC


def _resolve_n(args) -> int:
    ns = {len(l) for l in args.lambdas}
    if args.n is not None:
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        bad = [l for l in args.lambdas if len(l) != args.n]
        if bad:
            raise UsageError(f"composition {bad[0]} does not have {args.n} parts")
        return args.n
    if len(ns) == 1:
        return ns.pop()
    raise UsageError("--n is required")


def _lambdas(args, n: int, partitions_only: bool) -> list[tuple[int, ...]]:
    if args.lambdas:
        lams = list(args.lambdas)
    else:
        if args.deg is None:
            raise UsageError("give --lambda or --deg")
        if args.deg < 0:
            raise UsageError("--deg must be nonnegative")
        lams = list(partitions(args.deg, n) if partitions_only else compositions(args.deg, n))
    if partitions_only:
        for l in lams:
            if not is_partition(l):
                raise UsageError(f"{l} is not a partition")
    return lams


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError("--k is required")
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    return args.k


def cmd_compute(args) -> tuple[list, bool]:
    kind = args.kind
    n = args.n = _resolve_n(args)
    field = _field(args)
    lams = _lambdas(args, n, partitions_only=kind in ("P", "b", "f"))
    out = []
    for lam in lams:
        rec = {"kind": kind, "lambda": list(lam)}
        if kind in ("E", "E_inverted"):
            r = compute_E(lam, field) if kind == "E" else compute_E_inverted(lam, field)
            rec["spectral"] = [list(p) for p in r.spectral]
            rec["poly"] = poly_json(r.poly)
        elif kind == "P":
            r = compute_P(lam, field)
            rec["poly"] = poly_json(r.poly)
            rec["E_coefficients"] = [{"mu": list(mu), "coefficient": coeff_json(c)}
                                     for mu, c in sorted(r.e_coefficients.items(), reverse=True)]
        elif kind == "f":
            rec["u_coefficients"] = [coeff_json(field.coerce(c)) for c in coeff_f(lam)]
            rec["value"] = _u_text([field.coerce(c) for c in coeff_f(lam)])
        else:
            if kind == "a":
                v = coeff_a(lam)
            elif kind == "b":
                v = coeff_b(lam)
            elif kind == "C":
                v = c_lambda(lam, _need_k(args))
            else:
                if args.factors is not None:
                    if args.factors < 0:
                        raise UsageError("--factors must be nonnegative")
                    v = norm_closed_form(lam, D=args.factors)
                else:
                    v = norm_closed_form(lam, k=_need_k(args))
            if kind not in ("C", "norm"):
                v = field.coerce(v)
            rec["value"] = coeff_str(v)
            rec["coefficient"] = coeff_json(v)
        out.append(rec)
    return out, True


def _u_text(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        s = str(c)
        if " " in s and not (s.startswith("(") and s.endswith(")") and "/" not in s):
            s = f"({s})"
        parts.append(s if k == 0 else f"{s} * u" if k == 1 else f"{s} * u^{k}")
    return " + ".join(parts) if parts else "0"


def cmd_verify(args) -> tuple[list, bool]:
    n = args.n = _resolve_n(args)
    if args.deg is None:
        raise UsageError("--deg is required")
    if args.deg < 0:
        raise UsageError("--deg must be nonnegative")
    k = args.k
    if k is not None and k < 1:
        raise UsageError("--k must be at least 1 for verification")
    res = run_suite(args.suite, n, args.deg, k, field=_field(args), time_limit=args.time_limit)
    return [res.to_dict()], res.passed


# --------------------------------------------------------------------------
# output


def _metadata(args) -> dict:
    meta = {
        "command": args.command,
        "what": args.kind if args.command == "compute" else args.suite,
        "n": args.n,
        "D": args.deg,
        "k": args.k,
        "version": __version__,
    }
    meta.update(_field(args).metadata())
    return meta


def _pretty(meta: dict, results: list) -> str:
    lines = []
    if meta["command"] == "verify":
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(f"{r['suite']}: {status} ({r['checks']} checks, mode {meta['mode']})")
            for note in r["notes"]:
                lines.append(f"  note: {note}")
            cx = r["counterexample"]
            if cx:
                lines.append(f"  first failure: {cx['identity']} at {cx['where']}")
                lines.append(f"    left:  {cx['left']}")
                lines.append(f"    right: {cx['right']}")
        return "\n".join(lines) + "\n"
    for r in results:
        lam = "(" + ",".join(str(v) for v in r["lambda"]) + ")"
        if "poly" in r:
            lines.append(f"{r['kind']}{lam} = {r['poly']['text']}")
        else:
            lines.append(f"{r['kind']}{lam} = {r['value']}")
    return "\n".join(lines) + "\n"


def render(meta: dict, results: list, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps({"metadata": meta, "results": results}, sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"
    return _pretty(meta, results)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "compute":
            results, ok = cmd_compute(args)
        else:
            results, ok = cmd_verify(args)
    except UsageError as exc:
        print(f"nsmac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBound as exc:
        print(f"nsmac: {exc}", file=sys.stderr)
        return EXIT_BOUND
    text = render(_metadata(args), results, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL
