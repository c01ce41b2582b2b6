"""Command-line front end: ``hankelcf <verb> [options]``.

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .catalog import all_ids, lookup, target_series, verify_all, verify_id
from .catalog.targets import DESCRIPTIONS
from .errors import HankelCFError
from .euler import (euler_egf_coefficients, euler_numbers, q_euler, secant_power_numbers,
                    tangent_numbers)
from .exact import GaussianRational, format_scalar, parse_fraction
from .hankel import hankel_sequence
from .hfrac import classify, expand, hankel_profile
from .perms import MAX_N, stats, verify_exp_cf, verify_flajolet_cf, weight_sum
from .series import TruncatedSeries, named_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _text(c) -> str:
    if isinstance(c, GaussianRational) and c.im == 0:
        return str(c.re)
    return str(c)


def _json_value(c):
    if isinstance(c, GaussianRational) and c.im == 0:
        return str(c.re)
    return format_scalar(c)


def _max_order() -> int | None:
    raw = os.environ.get("HFRAC_MAX_ORDER")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HFRAC_MAX_ORDER must be an integer, got {raw!r}") from None


def _capped(value: int, flag: str) -> int:
    if value < 0:
        raise UsageError(f"{flag} must be >= 0")
    cap = _max_order()
    if cap is not None and value > cap:
        raise UsageError(f"{flag} {value} exceeds HFRAC_MAX_ORDER={cap}")
    return value


def _fraction_arg(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


# -- series selection ---------------------------------------------------------

SERIES_NAMES = ("euler", "euler_egf", "secant", "tangent", "sin", "cos", "tan", "sec",
                "tan_plus_sec", "sec_pow")


def _series(args, order: int) -> TruncatedSeries:
    if args.coeffs is not None:
        try:
            cs = [parse_fraction(t) for t in args.coeffs.replace(",", " ").split()]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--coeffs: cannot parse {args.coeffs!r}") from None
        return TruncatedSeries(cs, len(cs) - 1)
    if args.file is not None:
        try:
            with open(args.file) as fh:
                return TruncatedSeries.from_dict(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"--file: {exc}") from None
    name = args.series
    if name == "euler":
        return TruncatedSeries(euler_numbers(order), order)
    if name == "euler_egf":
        return TruncatedSeries(euler_egf_coefficients(order), order)
    if name == "secant":
        return TruncatedSeries(euler_numbers(2 * order)[0::2][:order + 1], order)
    if name == "tangent":
        return TruncatedSeries(tangent_numbers(order), order)
    if name in DESCRIPTIONS:
        return target_series(name, order, args.r)
    try:
        return named_series(name, order, args.r)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"--series: {exc}") from None


def _add_series_flags(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--series", default="euler",
                     help=f"named series: {', '.join(SERIES_NAMES)} or a catalog target")
    src.add_argument("--coeffs", help="explicit coefficients c0,c1,... (exact rationals)")
    src.add_argument("--file", help="JSON series file {\"order\", \"coeffs\"}")
    p.add_argument("--r", type=int, default=None, help="parameter r for sec_pow and E^(r) targets")


# -- verbs --------------------------------------------------------------------

def cmd_euler(args, out) -> int:
    n = _capped(args.n, "--n")
    kind = args.kind
    if kind == "E":
        values = euler_numbers(n)
    elif kind == "e":
        values = euler_egf_coefficients(n)
    elif kind == "tangent":
        values = tangent_numbers(n)
    elif kind == "secant":
        values = euler_numbers(2 * n)[0::2]
    else:
        if args.r is None or args.r < 1:
            raise UsageError("--kind secant_power needs --r >= 1")
        values = secant_power_numbers(args.r, n)
    if args.format == "json":
        out.write(json.dumps({"name": kind, "values": [_json_value(v) for v in values]}) + "\n")
    else:
        out.write(" ".join(_text(v) for v in values) + "\n")
    return EXIT_OK


def cmd_qeuler(args, out) -> int:
    n = _capped(args.n, "--n")
    values = q_euler(n, args.q)
    if args.format == "json":
        out.write(json.dumps({"name": "qeuler" if args.q is None else f"qeuler(q={args.q})",
                              "values": [_json_value(v) for v in values]}) + "\n")
    elif args.q is not None:
        out.write(" ".join(_text(v) for v in values) + "\n")
    else:
        for i, v in enumerate(values):
            out.write(f"E_{i}(q) = {v}\n")
    return EXIT_OK


def cmd_hfrac(args, out) -> int:
    order = _capped(args.order, "--order")
    if args.delta < 1:
        raise UsageError("--delta must be >= 1")
    sf = expand(_series(args, order), args.delta)
    profile = hankel_profile(sf) if args.profile and sf.delta == 2 else None
    if args.profile and sf.delta != 2:
        raise UsageError("--profile needs --delta 2")
    if args.format == "json":
        data = sf.to_dict()
        data["class"] = classify(sf)
        data["certified_order"] = sf.certified_order
        if profile is not None:
            data["profile"] = {"s": list(profile.s), "eps": list(profile.eps),
                               "values": {str(k): format_scalar(v) for k, v in profile.values.items()}}
        out.write(json.dumps(data) + "\n")
        return EXIT_OK
    out.write(f"delta={sf.delta} class={classify(sf)} certified_order={sf.certified_order}\n")
    for j, lv in enumerate(sf.levels):
        out.write(f"level {j}: v={_text(lv.v)} k={lv.k} u={lv.u}\n")
    if profile is not None:
        out.write("s = " + " ".join(map(str, profile.s)) + "\n")
        out.write("H_s = " + " ".join(_text(profile.values[s]) for s in profile.s) + "\n")
    return EXIT_OK


def cmd_hankel(args, out) -> int:
    n_max = _capped(args.max, "--max")
    seq = list(_series(args, max(2 * n_max - 2, 0)).coeffs)
    values = hankel_sequence(seq, n_max)
    if args.format == "json":
        out.write(json.dumps({"name": f"hankel({args.series})", "values": [_json_value(v) for v in values]})
                  + "\n")
    else:
        out.write(" ".join(_text(v) for v in values) + "\n")
    return EXIT_OK


def cmd_perm_stats(args, out) -> int:
    if args.sigma is not None:
        try:
            sigma = [int(t) for t in args.sigma.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"--sigma: cannot parse {args.sigma!r}") from None
        st = stats(sigma)
        data = {"val": st.val, "pk": st.pk, "da": st.da, "dd": st.dd, "des": st.des, "asc": st.asc}
        if args.format == "json":
            out.write(json.dumps(data) + "\n")
        else:
            out.write(" ".join(f"{k}={v}" for k, v in data.items()) + "\n")
        return EXIT_OK
    if args.n is None:
        raise UsageError("perm-stats needs --n or --sigma")
    n = _capped(args.n, "--n")
    limit = args.limit if args.limit is not None else MAX_N
    if args.check_cf is not None:
        rng = random.Random(args.seed)
        check = verify_flajolet_cf if args.check_cf == "flajolet" else verify_exp_cf
        results = []
        for _ in range(args.samples):
            u = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
            results.append({"u": [str(c) for c in u], "ok": check(n, *u, limit=limit)})
        ok = all(r["ok"] for r in results)
        if args.format == "json":
            out.write(json.dumps({"check": args.check_cf, "n": n, "seed": args.seed, "samples": results,
                                  "status": "PASS" if ok else "FAIL"}) + "\n")
        else:
            out.write(("PASS" if ok else "FAIL") + "\n")
        return EXIT_OK if ok else EXIT_FAIL
    value = weight_sum(n, args.weight, limit)
    if args.format == "json":
        out.write(json.dumps({"name": args.weight, "n": n, "value": _json_value(value)}) + "\n")
    else:
        out.write(_text(value) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    order = _capped(args.order, "--order")
    n_max = _capped(args.n_max, "--n-max")
    if args.list:
        for id_ in all_ids():
            out.write(id_ + "\n")
        return EXIT_OK
    if args.all:
        reports = verify_all(order, n_max, r_values=None if args.r is None else (args.r,),
                             workers=args.workers)
    elif args.id:
        if args.r is not None and args.id in all_ids() and "->" not in args.id:
            if not lookup(args.id).parameterized:
                raise UsageError(f"--r: {args.id} has no parameter")
        reports = [verify_id(args.id, order, n_max, args.r)]
    else:
        raise UsageError("verify needs --id, --all or --list")
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        out.write(json.dumps(payload if args.all else payload[0]) + "\n")
    elif args.all:
        for r in reports:
            out.write(f"{r.id} {r.status}\n")
        out.write(f"{sum(r.passed for r in reports)}/{len(reports)} PASS\n")
    else:
        r = reports[0]
        out.write(r.status + "\n")
        if r.first_mismatch is not None:
            out.write(f"first mismatch: {json.dumps(r.first_mismatch)}\n")
        for note in r.notes:
            if args.verbose:
                out.write(f"note: {note}\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hankelcf",
                                     description="Exact Hankel continued fractions and Euler numbers.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     help="shorthand for --format json")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("euler", parents=[fmt], help="Euler numbers and variants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("E", "e", "tangent", "secant", "secant_power"), default="E")
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(run=cmd_euler)

    p = sub.add_parser("qeuler", parents=[fmt], help="q-Euler polynomials E_n(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=_fraction_arg, default=None, help="specialize q to a rational")
    p.set_defaults(run=cmd_qeuler)

    p = sub.add_parser("hfrac", parents=[fmt], help="super delta-fraction expansion of a series")
    _add_series_flags(p)
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--delta", type=int, default=2)
    p.add_argument("--profile", action="store_true", help="also print the Hankel profile (delta 2)")
    p.set_defaults(run=cmd_hfrac)

    p = sub.add_parser("hankel", parents=[fmt], help="Hankel determinants H_0..H_max")
    _add_series_flags(p)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(run=cmd_hankel)

    p = sub.add_parser("perm-stats", parents=[fmt], help="permutation statistics by enumeration")
    p.add_argument("--n", type=int)
    p.add_argument("--weight", choices=("W1", "W2", "W3", "W4"), default="W2")
    p.add_argument("--sigma", help="statistics of one permutation, e.g. 3,1,2")
    p.add_argument("--limit", type=int, default=None, help=f"enumeration bound (default {MAX_N})")
    p.add_argument("--check-cf", choices=("flajolet", "exp"),
                   help="check a continued fraction against enumeration at random (u1..u4)")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_perm_stats)

    p = sub.add_parser("verify", parents=[fmt], help="verify catalog identities")
    p.add_argument("--id")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true", help="list registered ids")
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="print notes such as display discrepancies")
    p.set_defaults(run=cmd_verify)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.run(args, out)
    except UsageError as exc:
        err.write(f"hankelcf {args.verb}: error: {exc}\n")
        return EXIT_USAGE
    except (HankelCFError, KeyError) as exc:
        err.write(f"hankelcf {args.verb}: error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
