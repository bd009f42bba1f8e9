"""Command line: ``cccodes construct | bounds | verify | oracle``.

Exit codes: 0 ok, 1 expectation failed, 2 bad input, 3 instance over budget.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codefile
from .bounds import bound_report
from .composition import Composition, multinomial
from .construction import ConstructionParams, InvalidParams, build_code
from .field import NotPrime, ReducibleModulus, field_new
from .residue_ring import quotient_size
from .verify import DEFAULT_CAP, InstanceTooLarge, exact_max_code, exact_min_distance

OK, EXPECTATION_FAILED, BAD_INPUT, OVER_BUDGET = 0, 1, 2, 3


class _BadInput(Exception):
    pass


def _composition(text: str, q: int | None = None, n: int | None = None) -> Composition:
    try:
        comp = Composition.parse(text)
    except ValueError as exc:
        raise _BadInput(f"bad --composition {text!r}: {exc}") from None
    if q is not None and comp.q != q:
        raise _BadInput(f"--composition has {comp.q} entries but --q is {q}")
    if n is not None and comp.n != n:
        raise _BadInput(f"--composition sums to {comp.n} but --n is {n}")
    return comp


def _field(p: int, k: int, modulus: str | None = None):
    try:
        mod = [int(t) for t in modulus.split(",")] if modulus else None
        return field_new(p, k, mod)
    except (NotPrime, ReducibleModulus, ValueError) as exc:
        raise _BadInput(str(exc)) from None


def cmd_construct(args: argparse.Namespace) -> int:
    field = _field(args.p, args.k, args.modulus)
    comp = _composition(args.composition, q=args.q)
    params = ConstructionParams(field, args.q, args.d0, comp)
    try:
        code = build_code(params, workers=args.workers)
    except InvalidParams as exc:
        raise _BadInput(str(exc)) from None
    codefile.write(
        args.out, comp, code.words,
        field=(field.p, field.k), d0=args.d0,
        guaranteed_d=code.guaranteed_d, has_guarantee_line=True,
    )
    g = "none" if code.guaranteed_d is None else code.guaranteed_d
    print(f"field=GF({field.p}^{field.k}) modulus={','.join(map(str, field.modulus))}")
    print(f"r={field.r}")
    print(f"M={code.size}")
    print(f"space={multinomial(comp)} cosets={quotient_size(field, args.d0)} pigeonhole_bound={code.pigeonhole_bound}")
    print(f"guaranteed_d={g}")
    print(f"coset={','.join(map(str, code.coset.key))}")
    print(f"wrote {args.out}")
    return OK


def cmd_bounds(args: argparse.Namespace) -> int:
    comp = _composition(args.composition, q=args.q, n=args.n)
    field = None
    if args.field:
        p, _, k = args.field.partition("^")
        try:
            field = _field(int(p), int(k or 1))
        except ValueError:
            raise _BadInput(f"--field must look like p^k, got {args.field!r}") from None
    elif args.d0 is not None:
        raise _BadInput("--d0 requires --field")
    report = bound_report(comp, args.d, field, args.d0)
    if args.format == "structured":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        cf = codefile.read(args.code)
    except (OSError, codefile.MalformedCodeFile) as exc:
        raise _BadInput(str(exc)) from None
    if not all(cf.comp.matches(w) for w in cf.words):
        raise _BadInput(f"some codeword does not have composition {cf.comp}")
    size = len(cf.words)
    d = exact_min_distance(cf.words) if size >= 2 else None
    print(f"size={size}")
    print(f"min_distance={'none' if d is None else d}")
    if args.expect_d is not None:
        # a code with fewer than two words meets every distance requirement
        if d is not None and d < args.expect_d:
            print(f"FAIL: minimum distance {d} < expected {args.expect_d}")
            return EXPECTATION_FAILED
        print(f"PASS: minimum distance >= {args.expect_d}")
    return OK


def cmd_oracle(args: argparse.Namespace) -> int:
    comp = _composition(args.composition, q=args.q)
    try:
        size, witness = exact_max_code(comp, args.d, cap=args.cap)
    except InstanceTooLarge as exc:
        print(f"instance too large: {exc}", file=sys.stderr)
        return OVER_BUDGET
    print(f"A_{comp.q}({comp.n},{args.d},[{comp}])={size}")
    if args.out:
        codefile.write(args.out, comp, witness)
        print(f"wrote {args.out}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cccodes", description="Constant-composition codes from residue polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build the largest fiber code")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--d0", type=int, required=True)
    c.add_argument("--composition", required=True)
    c.add_argument("--out", type=Path, required=True)
    c.add_argument("--modulus", help="comma-separated coefficients, constant term first")
    c.add_argument("--workers", type=int, default=1, help="processes for the counting pass")
    c.set_defaults(func=cmd_construct)

    b = sub.add_parser("bounds", help="report bounds on A_q(n,d,composition)")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--composition", required=True)
    b.add_argument("--field", help="p^k, enables the construction bound")
    b.add_argument("--d0", type=int)
    b.add_argument("--format", choices=("text", "structured"), default="text")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="exact minimum distance of a code file")
    v.add_argument("--code", type=Path, required=True)
    v.add_argument("--expect-d", type=int)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact maximum code size by clique search")
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--d", type=int, required=True)
    o.add_argument("--composition", required=True)
    o.add_argument("--cap", type=int, default=DEFAULT_CAP)
    o.add_argument("--out", type=Path)
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
