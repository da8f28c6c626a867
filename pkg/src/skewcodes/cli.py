"""Command-line front end.

Subcommands: exists, count, random, enumerate, verify, dual,
inseparable-enum, oracle.  Output is a stream of newline-delimited JSON
records (or plain text with --format text); in JSON mode the first record
is a schema header so consumers can pin the format.  Enumeration streams
codes one by one and never materializes the list.

Exit codes: 0 success, 2 invalid parameters, 3 nonexistence for `random`.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import codes as codes_mod
from . import oracle as oracle_mod

SCHEMA = "skewcodes/1"


def _parse_int_list(text):
    return tuple(int(x) for x in text.replace(",", " ").split())


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewcodes",
        description="selfdual skew cyclic codes: existence, counting, "
        "sampling and enumeration",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_seed=False):
        p.add_argument("--q", type=int, required=True, help="size of the base field F")
        p.add_argument("--r", type=int, required=True, help="degree of K over F")
        p.add_argument("--k", type=int, default=1, help="length multiplier (modulus Y^k - 1)")
        p.add_argument(
            "--modulus",
            type=_parse_int_list,
            default=None,
            help="explicit palindromic central modulus P(Y): encoded F "
            "coefficients, constant term first (overrides --k)",
        )
        p.add_argument(
            "--field-modulus",
            type=_parse_int_list,
            default=None,
            help="modulus of K over GF(p), constant term first "
            "(default: canonical)",
        )
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default=None, help="write records to a file")
        if with_seed:
            p.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("exists", help="decide existence of selfdual codes"))
    common(sub.add_parser("count", help="exact number of selfdual codes"))
    p = sub.add_parser("random", help="one uniformly random selfdual code")
    common(p, with_seed=True)
    p = sub.add_parser("enumerate", help="stream all selfdual codes")
    common(p)
    p.add_argument("--limit", type=int, default=None, help="stop after N codes")
    p = sub.add_parser("verify", help="check a generator for selfduality")
    common(p)
    p.add_argument(
        "--generator",
        required=True,
        help="JSON list of K coefficients (each a GF(p) coordinate list), "
        "or @file to read from a file",
    )
    p = sub.add_parser("dual", help="print the dual code's generator")
    common(p)
    p.add_argument("--generator", required=True, help="as for verify")
    p = sub.add_parser(
        "inseparable-enum", help="enumerate purely inseparable selfdual codes (k = p^m)"
    )
    common(p)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument(
        "--dedup",
        choices=("on", "off"),
        default="on",
        help="deduplicate the (possibly redundant) walk",
    )
    p = sub.add_parser("oracle", help="brute-force report at tiny parameters")
    common(p)
    p.add_argument("--budget", type=int, default=10**6)
    return parser


class _Emitter:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream
        if fmt == "json":
            self.emit({"schema": SCHEMA})

    def emit(self, record, text=None):
        if self.fmt == "json":
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write((text if text is not None else str(record)) + "\n")

    def flush(self):
        self.stream.flush()


def _params_from_args(args):
    return codes_mod.CodeParameters(
        q=args.q,
        r=args.r,
        k=args.k,
        modulus=args.modulus,
        field_modulus=args.field_modulus,
        seed=getattr(args, "seed", 0),
    )


def _load_generator(params, text):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    data = json.loads(text)
    K = codes_mod._field_data(params)["K"]
    gen = tuple(K.from_coords(tuple(c)) for c in data)
    return codes_mod.SkewCode(params, gen)


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    stream = open(args.output, "w") if args.output else sys.stdout
    out = _Emitter(args.format, stream)
    try:
        code = _dispatch(args, out)
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        out.flush()
        if args.output:
            stream.close()
    return code


def _dispatch(args, out):
    params = _params_from_args(args)
    if args.command == "exists":
        ok, reason = codes_mod.exists_selfdual_reason(params)
        out.emit({"exists": ok, "reason": reason}, text=f"{ok} ({reason})")
        return 0
    if args.command == "count":
        n = codes_mod.count_selfdual(params)
        out.emit({"count": n}, text=str(n))
        return 0
    if args.command == "random":
        if not codes_mod.exists_selfdual(params):
            _reason = codes_mod.exists_selfdual_reason(params)[1]
            out.emit({"error": "no selfdual codes", "reason": _reason},
                     text=f"no selfdual codes: {_reason}")
            return 3
        rng = random.Random(args.seed)
        code = codes_mod.random_selfdual(params, rng)
        out.emit(code.serialize(), text=_text_code(code))
        return 0
    if args.command == "enumerate":
        n = 0
        for code in codes_mod.enumerate_selfdual(params):
            out.emit(code.serialize(), text=_text_code(code))
            n += 1
            if args.limit is not None and n >= args.limit:
                break
        return 0
    if args.command == "verify":
        code = _load_generator(params, args.generator)
        record = {
            "selforthogonal": codes_mod.is_selforthogonal(code),
            "selfdual": codes_mod.is_selfdual(code),
            "dim": code.dim,
        }
        out.emit(record, text=str(record))
        return 0
    if args.command == "dual":
        code = _load_generator(params, args.generator)
        dual = codes_mod.dual_code(code)
        out.emit(dual.serialize(), text=_text_code(dual))
        return 0
    if args.command == "inseparable-enum":
        n = 0
        if args.dedup == "on":
            stream = codes_mod.inseparable_enumerate_distinct(params)
        else:
            K = codes_mod._field_data(params)["K"]
            stream = (
                codes_mod.SkewCode(params, f)
                for f in codes_mod.inseparable_enumerate(params)
            )
        for code in stream:
            out.emit(code.serialize(), text=_text_code(code))
            n += 1
            if args.limit is not None and n >= args.limit:
                break
        return 0
    if args.command == "oracle":
        report = oracle_mod.brute_codes(params, budget=args.budget)
        out.emit(report.serialize(), text=str(report.serialize()))
        return 0
    raise ValueError(f"unknown command {args.command}")  # pragma: no cover


def _text_code(code):
    K = codes_mod._field_data(code.params)["K"]
    coeffs = ["[" + ",".join(str(x) for x in K.coords(c)) + "]" for c in code.generator]
    return f"dim={code.dim} generator=" + " + ".join(
        f"{c}*X^{i}" for i, c in enumerate(coeffs)
    )


def main():  # pragma: no cover - thin wrapper
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
