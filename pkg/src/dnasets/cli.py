"""Command-line interface: ``dnasets <command> ...``.

Exit codes: 0 success, 1 usage error, 2 infeasible parameters,
3 decode or verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import bound_report, table2_report
from .channel import EnumerationCapExceeded, ErrorType
from .constructions import (BchInner, BchSetCode, CharacteristicCode, ChecksumSumCode,
                            ConcatenatedCode, GroupedIndexCode, IndexedCode, VtSetCode)
from .core import DecodeError, ParameterError
from .setfile import (bytes_to_int, format_set, int_to_bytes, parse_code, parse_set)
from .verify import counterexample, is_correcting_code, monte_carlo

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_FAILURE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def build_construction(args):
    name = args.construction
    M, L = args.M, args.L
    if name == "c1":
        return IndexedCode(M, L, args.delta)
    if name == "c2":
        return CharacteristicCode(M, L, args.s, args.t)
    if name == "c3":
        if args.c is None:
            raise UsageError("c3 needs --c")
        return GroupedIndexCode(M, L, args.c, args.delta)
    if name == "c4":
        inner = BchInner(L, args.eps)
        return ConcatenatedCode(inner, IndexedCode(M, inner.k, args.delta))
    if name == "c5":
        return ChecksumSumCode(M, L, args.a)
    if name == "c6":
        return VtSetCode(M, L, args.a)
    if name == "c7":
        return BchSetCode(M, L, args.eps)
    raise UsageError(f"unknown construction {name!r}")


def parse_channel(text: str) -> tuple[int, int, int | None, ErrorType]:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("channel must be s,t,eps,type (eps may be '*')")
    try:
        s, t = int(parts[0]), int(parts[1])
        eps = None if parts[2] in ("*", "inf") else int(parts[2])
        kind = ErrorType.parse(parts[3])
    except ValueError as exc:
        raise UsageError(f"bad channel {text!r}: {exc}") from exc
    return s, t, eps, kind


def _decode_kw(args) -> dict:
    if args.construction in ("c1", "c3") and getattr(args, "mode", None):
        return {"mode": args.mode}
    return {}


def cmd_encode(args) -> int:
    code = build_construction(args)
    msg = bytes_to_int(Path(args.inp).read_bytes())
    if msg >= code.capacity:
        raise ParameterError(f"info does not fit: capacity is {code.capacity}")
    S = code.encode(msg)
    Path(args.out).write_text(format_set(S, 2, code.L))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = build_construction(args)
    received, _, _ = parse_set(Path(args.inp).read_text(), strict=False)
    msg = code.decode(received, **_decode_kw(args))
    nbytes = args.nbytes if args.nbytes is not None else (code.capacity.bit_length() - 1) // 8
    Path(args.out).write_bytes(int_to_bytes(msg, nbytes))
    return EXIT_OK


def cmd_simulate(args) -> int:
    code = build_construction(args)
    s, t, eps, kind = parse_channel(args.channel)
    res = monte_carlo(code, s, t, eps, kind, args.trials, args.seed,
                      decode_kw=_decode_kw(args))
    out = res.to_json()
    out["construction"] = args.construction
    out["channel"] = {"s": s, "t": t, "eps": eps, "type": kind.value}
    sys.stdout.write(dump_json(out))
    return EXIT_OK


def cmd_bounds(args) -> int:
    eps = None if args.eps in ("*", "inf") else int(args.eps)
    exact = not args.asymptotic or args.exact
    rep = bound_report(args.M, args.L, args.s, args.t, eps, args.type,
                       exact=exact, asymptotic=args.asymptotic)
    sys.stdout.write(dump_json(rep.to_json()))
    return EXIT_OK


def cmd_table2(args) -> int:
    if args.json:
        sys.stdout.write(dump_json(table2_report("json")))
    else:
        sys.stdout.write(table2_report("text"))
    return EXIT_OK


def cmd_verify(args) -> int:
    code, q, L, M = parse_code(Path(args.code).read_text())
    s, t, eps, kind = parse_channel(args.channel)
    verdict = is_correcting_code(code, s, t, eps, kind, q=q)
    out = {"schema": "dnasets.verify/1", "codewords": len(code),
           "channel": {"s": s, "t": t, "eps": eps, "type": kind.value}, **verdict.to_json()}
    sys.stdout.write(dump_json(out))
    return EXIT_OK if verdict.correcting else EXIT_FAILURE


def cmd_counterexample(args) -> int:
    out = counterexample()
    sys.stdout.write(f"D-correcting={str(out['D_correcting']).lower()}\n")
    sys.stdout.write(f"I-correcting={str(out['I_correcting']).lower()}\n")
    sys.stdout.write(dump_json(out))
    ok = out["D_correcting"] and not out["I_correcting"] and out["known_witness_in_intersection"]
    return EXIT_OK if ok else EXIT_FAILURE


def _code_args(p):
    p.add_argument("--construction", required=True,
                   choices=["c1", "c2", "c3", "c4", "c5", "c6", "c7"])
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--delta", type=int, default=0, help="MDS redundancy (c1, c3, c4)")
    p.add_argument("--s", type=int, default=0, help="losses to correct (c2)")
    p.add_argument("--t", type=int, default=0, help="corrupted sequences to correct (c2)")
    p.add_argument("--c", default=None, help="index fraction, e.g. 1/2 (c3)")
    p.add_argument("--a", type=int, default=0, help="VT checksum residue (c5, c6)")
    p.add_argument("--eps", type=int, default=1, help="substitutions per sequence (c4, c7)")
    p.add_argument("--mode", choices=["L", "I", "D"], default=None,
                   help="decoder mode for c1/c3")


def make_parser() -> Parser:
    parser = Parser(prog="dnasets", description="Codes over sets of DNA sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("encode", help="encode an info file into a set file")
    _code_args(p)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received set file into an info file")
    _code_args(p)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--nbytes", type=int, default=None)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo decoding over a random channel")
    _code_args(p)
    p.add_argument("--channel", required=True, help="s,t,eps,type")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bounds", help="evaluate code-size bounds")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--eps", default="*")
    p.add_argument("--type", default="L")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--asymptotic", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table2", help="print the table of leading redundancy terms")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify", help="check a code file for pairwise disjoint error balls")
    p.add_argument("--code", required=True)
    p.add_argument("--channel", required=True, help="s,t,eps,type")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="run the built-in insertion/deletion example")
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dnasets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, EnumerationCapExceeded) as exc:
        print(f"dnasets: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except DecodeError as exc:
        print(f"dnasets: decode failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as exc:
        print(f"dnasets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
