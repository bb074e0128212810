"""Command-line surface: relations, verify-gb, normal-words, check, rewrite, kernel-dim.

Exit codes: 0 success, 1 semantic false verdict (not a constant, failed
Groebner verification), 2 usage/parse/instance errors.  Output on stdout
is byte-identical across runs on identical inputs; certificates include a
timestamp but their pass/fail entries replay identically.
"""

from __future__ import annotations

import argparse
import json
import sys

from .derivation import is_constant, load_instance
from .errors import ConstalgError, NotAConstantError
from .groebner import verify_groebner
from .normal_words import enumerate_normal_words, kernel_dim_oracle, rewrite_constant
from .orders import CORRECTED, LITERAL
from .poly import RING_A, format_monomial, format_poly, parse_poly
from .presentation import build_relations

_VARIANT_BY_FLAG = {"corrected": CORRECTED, "paper": LITERAL}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="constalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--instance", required=True, help="instance JSON file")
        return p

    p = add("relations", "print the relation families R and S")
    p.add_argument("--out", help="also write the listing to this file")

    p = add("verify-gb", "verify that R united with S is a reduced Groebner basis")
    p.add_argument("--variant", choices=sorted(_VARIANT_BY_FLAG), default="corrected")
    p.add_argument("--certificate", help="write the per-pair certificate JSON here")
    p.add_argument("--jobs", type=int, default=1, help="parallel pair reductions")

    p = add("normal-words", "list normal words up to an image-degree bound")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--variant", choices=sorted(_VARIANT_BY_FLAG), default="corrected")

    p = add("check", "exit 0/1 as the polynomial is/is not a constant")
    p.add_argument("--poly", required=True)

    p = add("rewrite", "rewrite a constant in terms of the generators")
    p.add_argument("--poly", required=True)
    p.add_argument("--out", help="also write the expression to this file")

    p = add("kernel-dim", "dimension of the constants up to a degree bound")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--basis", action="store_true", help="also print a basis")

    return parser


def _cmd_relations(args) -> int:
    inst = load_instance(args.instance)
    lines = [
        f"{label}: {format_poly(poly)}"
        for label, poly in build_relations(inst).labeled()
    ]
    text = "\n".join(lines)
    if text:
        print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + ("\n" if text else ""))
    return 0


def _cmd_verify_gb(args) -> int:
    inst = load_instance(args.instance)
    variant = _VARIANT_BY_FLAG[args.variant]
    cert = verify_groebner(inst, variant=variant, jobs=max(1, args.jobs))
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as handle:
            json.dump(cert.to_json_dict(), handle, indent=2)
            handle.write("\n")
    conf = cert.conformance
    print(f"lead conformance: {'ok' if conf.ok else 'FAILED'} ({len(conf.entries)} relations)")
    zero = sum(1 for p in cert.pairs if p.normal_form_zero)
    print(f"s-polynomial pairs: {zero}/{len(cert.pairs)} reduce to zero")
    print(f"reducedness: {'ok' if cert.reduced else 'FAILED'}")
    if cert.verdict:
        print("verdict: verified reduced Groebner basis")
        return 0
    print(f"verdict: FAILED ({cert.first_failure()})")
    return 1


def _cmd_normal_words(args) -> int:
    inst = load_instance(args.instance)
    if args.max_deg < 0:
        raise _UsageError("--max-deg must be nonnegative")
    words = enumerate_normal_words(
        inst, args.max_deg, variant=_VARIANT_BY_FLAG[args.variant]
    )
    if args.count_only:
        print(len(words))
    else:
        for word in words:
            print(format_monomial(word.monomial))
    return 0


def _cmd_check(args) -> int:
    inst = load_instance(args.instance)
    poly = parse_poly(args.poly, RING_A, inst.d)
    if is_constant(inst, poly):
        print("constant")
        return 0
    print("not a constant")
    return 1


def _cmd_rewrite(args) -> int:
    inst = load_instance(args.instance)
    poly = parse_poly(args.poly, RING_A, inst.d)
    expression = format_poly(rewrite_constant(inst, poly))
    print(expression)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(expression + "\n")
    return 0


def _cmd_kernel_dim(args) -> int:
    inst = load_instance(args.instance)
    if args.max_deg < 0:
        raise _UsageError("--max-deg must be nonnegative")
    result = kernel_dim_oracle(inst, args.max_deg)
    print(f"dimension: {result.dimension}")
    if args.basis:
        for poly in result.basis:
            print(format_poly(poly))
    return 0


_COMMANDS = {
    "relations": _cmd_relations,
    "verify-gb": _cmd_verify_gb,
    "normal-words": _cmd_normal_words,
    "check": _cmd_check,
    "rewrite": _cmd_rewrite,
    "kernel-dim": _cmd_kernel_dim,
}


def run(argv=None) -> int:
    """Execute one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except NotAConstantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (_UsageError, ConstalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
