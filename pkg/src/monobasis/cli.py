"""Command-line front end.

Input grammar for polynomials: terms joined by `+`/`-`; a term is an
optional coefficient (`int` or `int/int`), optionally followed by `*` and
a monomial; a monomial is `x<k>` factors (each with an optional `^<e>`)
joined by `*`.  Reports are line-oriented `key=value` with a stable key
order; exit code 0 means success (or "is a basis"), 1 means a negative
verdict or a failed identity, and 2 means bad usage or bad input.
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .certify import (
    certify_basis,
    factorize_delta,
    multiplication_matrix,
    rank_oracle,
    upsilon_bivariate,
    vandermonde_verify,
)
from .errors import AlgebraError, InputError, ParseError
from .fields import field_from_spec
from .hilbert import DegreeProfile, hilbert_H, hilbert_h
from .polynomials import MonomialSet, MultiPoly, PolySystem, m0_set
from .resultants import resultant_macaulay
from .rootsystems import power_system
from .subresultants import subresultant_delta

__all__ = ["main", "parse_poly", "parse_monomial_list", "load_system"]

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|(x\d+)|(\^)|(\*)|(\+)|(-)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(7):
            raise ParseError(f"unexpected character {m.group(7)!r}", m.start(7))
        for kind, g in enumerate(m.groups()[:6]):
            if g is not None:
                tokens.append((("num", "var", "caret", "star", "plus", "minus")[kind], g, m.start(kind + 1)))
        pos = m.end()
    return tokens


def parse_poly(text: str, nvars: int, field) -> MultiPoly:
    """Parse a polynomial in variables x1..x<nvars> over the given field."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 0)
    poly = MultiPoly.zero(field, nvars)
    i = 0
    first = True
    while i < len(tokens):
        if not first and tokens[i][0] not in ("plus", "minus"):
            raise ParseError("terms must be joined by '+' or '-'", tokens[i][2])
        first = False
        sign = 1
        while i < len(tokens) and tokens[i][0] in ("plus", "minus"):
            if tokens[i][0] == "minus":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ParseError("dangling sign", tokens[-1][2])
        coeff = field.one
        mono = [0] * nvars
        saw_factor = False
        while True:
            kind, value, pos = tokens[i]
            if kind == "num":
                coeff = coeff * field.of(Fraction(value))
            elif kind == "var":
                k = int(value[1:])
                if not 1 <= k <= nvars:
                    raise ParseError(f"unknown variable {value}", pos)
                e = 1
                if i + 1 < len(tokens) and tokens[i + 1][0] == "caret":
                    if i + 2 >= len(tokens) or tokens[i + 2][0] != "num" or "/" in tokens[i + 2][1]:
                        raise ParseError("exponent must be a non-negative integer", tokens[i + 1][2])
                    e = int(tokens[i + 2][1])
                    i += 2
                mono[k - 1] += e
            else:
                raise ParseError(f"unexpected token {value!r}", pos)
            saw_factor = True
            i += 1
            if i < len(tokens) and tokens[i][0] == "star":
                i += 1
                if i >= len(tokens):
                    raise ParseError("dangling '*'", tokens[-1][2])
                continue
            break
        if not saw_factor:
            raise ParseError("empty term", tokens[i][2] if i < len(tokens) else 0)
        if sign < 0:
            coeff = -coeff
        poly = poly + MultiPoly.monomial(field, tuple(mono), coeff)
    return poly


def parse_monomial_list(text: str, nvars: int, field) -> MonomialSet:
    """Comma-separated monomials (`1` for the constant) -> MonomialSet."""
    monos = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ParseError("empty entry in monomial list", 0)
        p = parse_poly(part, nvars, field)
        supp = p.support()
        if len(supp) != 1 or p.terms[supp[0]] != field.one:
            raise ParseError(f"{part!r} is not a monomial", 0)
        monos.append(supp[0])
    return MonomialSet(monos)


def load_system(path: str, field) -> PolySystem:
    """Read a system file: `degrees: d1,..,dn` header, then one poly per line."""
    degrees = None
    polys = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if degrees is None:
                if not line.lower().startswith("degrees:"):
                    raise InputError("first line must declare `degrees: d1,..,dn`")
                degrees = tuple(int(x) for x in line.split(":", 1)[1].split(","))
                continue
            polys.append(parse_poly(line, len(degrees), field))
    if degrees is None:
        raise InputError("missing degrees header")
    if len(polys) != len(degrees):
        raise InputError(f"expected {len(degrees)} polynomials, found {len(polys)}")
    return PolySystem(polys, degrees)


# ---------------------------------------------------------------------------
# subcommands


def _degrees_arg(text: str) -> tuple:
    try:
        ds = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad degree list {text!r}")
    if not ds or any(d < 1 for d in ds):
        raise InputError("degrees must be positive integers")
    return ds


def _cmd_hilbert(args) -> int:
    profile = DegreeProfile(_degrees_arg(args.degrees))
    print(
        f"H={hilbert_H(profile, args.tau)}"
        f" h={hilbert_h(profile, args.tau)}"
        f" rho={profile.rho}"
        f" d={profile.bezout}"
    )
    return 0


def _cmd_resultant(args) -> int:
    field = field_from_spec(args.field)
    sys_ = load_system(args.system, field)
    res = resultant_macaulay(sys_.leading_forms())
    print(f"res={field.format(res)}")
    return 0


def _cmd_subresultant(args) -> int:
    field = field_from_spec(args.field)
    sys_ = load_system(args.system, field)
    M = parse_monomial_list(args.monomials, sys_.nvars, field)
    t = M.delta if args.degree is None else args.degree
    sub = subresultant_delta(sys_.homogenized(), t, M.homogenized_at(t))
    print(f"t={t}")
    print(f"delta={field.format(sub.value)}")
    return 0


def _cmd_basis_check(args) -> int:
    field = field_from_spec(args.field)
    sys_ = load_system(args.system, field)
    M = parse_monomial_list(args.monomials, sys_.nvars, field)
    cert = certify_basis(sys_, M)
    print(f"res={field.format(cert.res_value)}")
    print(f"delta={field.format(cert.delta_value)}")
    print(f"t={cert.t_used}")
    print(f"product={field.format(cert.product)}")
    print(f"verdict={cert.verdict}")
    if args.oracle:
        agrees = rank_oracle(sys_, M) == cert.is_basis
        print(f"oracle={'agree' if agrees else 'DISAGREE'}")
        if not agrees:
            print("internal error: oracle disagrees with certificate", file=sys.stderr)
            return 2
    return 0 if cert.is_basis else 1


def _cmd_factor(args) -> int:
    field = field_from_spec(args.field)
    sys_ = load_system(args.system, field)
    M = parse_monomial_list(args.monomials, sys_.nvars, field)
    report = factorize_delta(sys_.leading_forms(), M)
    print(f"applicable={'yes' if report.applicable else 'no'}")
    for t, value in report.factors:
        print(f"factor.{t}={field.format(value)}")
    if report.applicable:
        print(f"product={field.format(report.product)}")
    return 0 if report.applicable else 1


def _cmd_vandermonde(args) -> int:
    field = field_from_spec(args.field)
    degrees = _degrees_arg(args.degrees)
    sys_, roots = power_system(field, degrees, [1] * len(degrees))
    if args.set == "m0":
        M = m0_set(degrees)
    else:
        if not args.monomials:
            raise InputError("--set custom requires --monomials")
        M = parse_monomial_list(args.monomials, len(degrees), field)
    report = vandermonde_verify(sys_, roots, M)
    print(f"det={field.format(report.det_value)}")
    print(f"jacobian={field.format(report.jacobian_product)}")
    print(f"res={field.format(report.resultant_value)}")
    print(f"delta={field.format(report.subresultant_value)}")
    print(f"t={report.t_used}")
    print(f"sign={report.matched_sign if report.holds else 'none'}")
    print(f"residual={field.format(report.identity_residual)}")
    if report.disp_exact is not None:
        print(f"exact_sign={'yes' if report.disp_exact else 'no'}")
    return 0 if report.holds else 1


def _cmd_upsilon(args) -> int:
    field = field_from_spec(args.field)
    sys_ = load_system(args.system, field)
    if sys_.n != 2:
        raise InputError("upsilon is defined for bivariate systems only")
    d1, d2 = sys_.degrees
    if d1 > d2:
        raise InputError("declare the lower degree first")
    value = upsilon_bivariate(sys_.polys[0], sys_.polys[1], d1, d2)
    print(f"upsilon={field.format(value)}")
    return 0


def _cmd_mulmat(args) -> int:
    field = field_from_spec(args.field)
    sys_ = load_system(args.system, field)
    M = parse_monomial_list(args.monomials, sys_.nvars, field)
    g = parse_poly(args.g, sys_.nvars, field)
    mm = multiplication_matrix(sys_, M, g)
    print(f"kernel_dim={mm.kernel_dim}")
    print(f"det={field.format(mm.det())}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monobasis",
        description="certify monomial bases of zero-dimensional quotient algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert function values for a degree profile")
    p.add_argument("--degrees", required=True)
    p.add_argument("--tau", type=int, required=True)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("resultant", help="resultant of the leading forms")
    p.add_argument("--field", required=True)
    p.add_argument("--system", required=True)
    p.set_defaults(func=_cmd_resultant)

    p = sub.add_parser("subresultant", help="subresultant of the homogenized system")
    p.add_argument("--field", required=True)
    p.add_argument("--system", required=True)
    p.add_argument("--monomials", required=True)
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=_cmd_subresultant)

    p = sub.add_parser("basis-check", help="certify a candidate monomial basis")
    p.add_argument("--field", required=True)
    p.add_argument("--system", required=True)
    p.add_argument("--monomials", required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=_cmd_basis_check)

    p = sub.add_parser("factor", help="factor the certificate into degree slices")
    p.add_argument("--field", required=True)
    p.add_argument("--system", required=True)
    p.add_argument("--monomials", required=True)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser(
        "vandermonde-verify",
        help="check the Vandermonde identity on a roots-of-unity system",
    )
    p.add_argument("--degrees", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--set", choices=("m0", "custom"), default="m0")
    p.add_argument("--monomials", default=None)
    p.set_defaults(func=_cmd_vandermonde)

    p = sub.add_parser("upsilon", help="closed-form bivariate Vandermonde quotient")
    p.add_argument("--field", required=True)
    p.add_argument("--system", required=True)
    p.set_defaults(func=_cmd_upsilon)

    p = sub.add_parser("mulmat", help="multiplication matrix in a certified basis")
    p.add_argument("--field", required=True)
    p.add_argument("--system", required=True)
    p.add_argument("--monomials", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=_cmd_mulmat)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
