"""Command-line front end: ``cores count | enum | avg | convert | tcore | verify``.

Output is byte-stable across runs for identical arguments: enumerations are
sorted, rationals are rendered in canonical reduced form, and the verify
suite seeds its randomness deterministically.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import betaset, coords, enumeration, oracle, stats
from .partition import Partition

FORMATS = ("json", "jsonl", "csv", "plain")


class UsageError(Exception):
    """Bad arguments detected after argparse; maps to exit code 2."""


def _compact_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_partition(text: str) -> Partition:
    if text.strip() == "":
        return Partition()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse partition {text!r}: {exc}") from None
    return Partition(parts)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from None


def _check_threads_env() -> None:
    """CORES_THREADS sets the worker count; it may only affect speed, never
    output.  The current implementation is single-process, so the value is
    validated and otherwise unused."""
    raw = os.environ.get("CORES_THREADS")
    if raw is None:
        return
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"CORES_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"CORES_THREADS must be a positive integer, got {raw!r}")


def _emit_records(records, fmt: str, out) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(_compact_json(rec.to_json_dict()) + "\n")
    elif fmt == "json":
        out.write(_compact_json([rec.to_json_dict() for rec in records]) + "\n")
    elif fmt == "csv":
        for rec in records:
            out.write(rec.csv_row() + "\n")
    else:
        for rec in records:
            d = rec.to_json_dict()
            line = (
                f"z={','.join(map(str, d['z']))}"
                f" a={','.join(map(str, d['a']))}"
                f" parts={rec.partition.csv_cell()}"
                f" size={rec.size}"
            )
            if rec.stab is not None:
                line += f" stab={rec.stab}"
            out.write(line + "\n")


def cmd_count(args) -> int:
    params = args.params
    if params and params[0] == "triple":
        if len(params) != 3 or args.self_conjugate:
            raise UsageError("usage: cores count triple <m> <d>")
        m, d = _as_int(params[1], "m"), _as_int(params[2], "d")
        print(enumeration.count_triple(m, d))
        return 0
    if len(params) != 2:
        raise UsageError("usage: cores count <s> <t> [--self-conjugate]")
    s, t = _as_int(params[0], "s"), _as_int(params[1], "t")
    if args.self_conjugate:
        print(enumeration.count_sc(s, t))
    else:
        print(enumeration.count_st(s, t))
    return 0


def cmd_enum(args) -> int:
    if args.triple is not None:
        if args.params or args.self_conjugate:
            raise UsageError("--triple takes no positional s t and no --self-conjugate")
        if args.with_stab:
            raise UsageError("--with-stab is not defined for triple enumerations")
        m, d = args.triple
        records = (
            enumeration.enum_triple_sym(m, d)
            if args.method == "sym"
            else enumeration.enum_triple_asym(m, d)
        )
    else:
        if len(args.params) != 2:
            raise UsageError("usage: cores enum <s> <t> [--self-conjugate] | cores enum --triple <m> <d>")
        s, t = _as_int(args.params[0], "s"), _as_int(args.params[1], "t")
        if args.self_conjugate:
            records = enumeration.enum_sc_st_cores(s, t)
        else:
            records = enumeration.enum_st_cores(s, t)
        if args.with_stab:
            records = stats.attach_stabilizers(records, self_conjugate=args.self_conjugate)
    _emit_records(records, args.format, sys.stdout)
    return 0


def cmd_avg(args) -> int:
    s, t = args.s, args.t
    if args.moment is not None:
        if args.moment < 0:
            raise UsageError("--moment must be >= 0")
        if args.moment > 8:
            raise UsageError("--moment is capped at 8 in the CLI; call the library for more")
        value = stats.moment_sum(s, t, args.moment, args.weighted, args.self_conjugate)
    else:
        value = stats.average_size(s, t, args.weighted, args.self_conjugate)
    print(stats.format_rational(value))
    return 0


def cmd_tcore(args) -> int:
    p = _parse_partition(args.partition)
    print(_compact_json(betaset.t_core(p, args.t).to_json()))
    return 0


def cmd_convert(args) -> int:
    given = [name for name in ("partition", "beta", "a", "z", "u") if getattr(args, name) is not None]
    if len(given) != 1:
        raise UsageError("convert needs exactly one of --partition/--beta/--a/--z/--u")
    t = args.t
    s = args.s

    if args.partition is not None:
        p = _parse_partition(args.partition)
    elif args.beta is not None:
        try:
            d = json.loads(args.beta)
            b = betaset.BetaSet(d["members"], d["gaps"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad --beta payload: {exc}") from None
        p = betaset.partition_from_beta(b)
    elif args.a is not None:
        entries = _parse_ints(args.a, "a-tuple")
        p = betaset.partition_from_a(betaset.ATuple(len(entries), entries))
        t = t or len(entries)
    elif args.z is not None:
        entries = _parse_ints(args.z, "z-tuple")
        zt = coords.ZTuple(len(entries), sum(entries), entries)
        p = betaset.partition_from_a(coords.z_to_a(zt))
        t, s = len(entries), sum(entries)
    else:
        if t is None or s is None:
            raise UsageError("--u needs both --t and --s")
        entries = _parse_ints(args.u, "u-tuple")
        zt = coords.u_to_z(coords.UTuple(t, s, entries))
        p = betaset.partition_from_a(coords.z_to_a(zt))

    out: dict = {"partition": p.to_json(), "size": p.size}
    out["beta"] = betaset.beta_from_partition(p).to_json_dict()
    if t is not None:
        out["t"] = t
        b = betaset.beta_from_partition(p)
        out["is_t_core"] = betaset.is_s_core(b, t)
        if out["is_t_core"]:
            a = betaset.a_coords(p, t)
            out["a"] = a.to_json()
            if s is not None:
                zt = coords.a_to_z(a, s)
                out["z"] = zt.to_json_dict()
                if coords.is_self_conjugate_a(a):
                    out["u"] = coords.z_to_u(zt).to_json_dict()
    print(_compact_json(out))
    return 0


def cmd_verify(args) -> int:
    reports = oracle.run_verify_suite(args.smax, args.tmax, args.nmax)
    if args.format == "jsonl":
        for rep in reports:
            print(_compact_json(rep.to_json_dict()))
    else:
        for rep in reports:
            line = f"{'PASS' if rep.passed else 'FAIL'} {rep.check} {_compact_json(rep.params)}"
            if not rep.passed:
                line += f" witness={rep.witness}"
            print(line)
    failures = sum(1 for rep in reports if not rep.passed)
    print(f"{len(reports) - failures}/{len(reports)} checks passed")
    return 1 if failures else 0


def _as_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cores",
        description="Exact enumeration and statistics of simultaneous core partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="closed-form counts")
    p_count.add_argument("params", nargs="+", help="<s> <t>, or: triple <m> <d>")
    p_count.add_argument("--self-conjugate", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enum", help="stream every core")
    p_enum.add_argument("params", nargs="*", help="<s> <t>")
    p_enum.add_argument("--self-conjugate", action="store_true")
    p_enum.add_argument("--triple", nargs=2, type=int, metavar=("M", "D"))
    p_enum.add_argument("--method", choices=("sym", "asym"), default="sym")
    p_enum.add_argument("--with-stab", action="store_true")
    p_enum.add_argument("--format", choices=FORMATS, default="jsonl")
    p_enum.set_defaults(func=cmd_enum)

    p_avg = sub.add_parser("avg", help="exact average size or moment sum")
    p_avg.add_argument("s", type=int)
    p_avg.add_argument("t", type=int)
    p_avg.add_argument("--weighted", action="store_true")
    p_avg.add_argument("--self-conjugate", action="store_true")
    p_avg.add_argument("--moment", type=int, default=None, metavar="E")
    p_avg.set_defaults(func=cmd_avg)

    p_tcore = sub.add_parser("tcore", help="t-core of a partition")
    p_tcore.add_argument("t", type=int)
    p_tcore.add_argument("--partition", required=True, help="comma-separated parts, e.g. 5,5")
    p_tcore.set_defaults(func=cmd_tcore)

    p_conv = sub.add_parser("convert", help="translate one object between views")
    p_conv.add_argument("--partition", help="comma-separated parts")
    p_conv.add_argument("--beta", help='JSON {"members":[...],"gaps":[...]}')
    p_conv.add_argument("--a", help="comma-separated a-coordinates")
    p_conv.add_argument("--z", help="comma-separated z-coordinates")
    p_conv.add_argument("--u", help="comma-separated u-coordinates")
    p_conv.add_argument("--t", type=int, default=None)
    p_conv.add_argument("--s", type=int, default=None)
    p_conv.set_defaults(func=cmd_convert)

    p_verify = sub.add_parser("verify", help="run the structural cross-check suite")
    p_verify.add_argument("--smax", type=int, default=5)
    p_verify.add_argument("--tmax", type=int, default=6)
    p_verify.add_argument("--nmax", type=int, default=20)
    p_verify.add_argument("--format", choices=("plain", "jsonl"), default="plain")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_threads_env()
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # CoreError subclasses ValueError, so both contract violations and
        # plainly malformed values (s = 0, bad ranges) land here
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
