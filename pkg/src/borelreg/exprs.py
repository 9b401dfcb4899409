"""The ideal expression language of the command line.

Grammar (whitespace insignificant)::

    expr     := term ('+' term)*
    term     := atom ('*' atom)*
    atom     := '(' monlist ')' | '(' expr ')' | func
    monlist  := monomial (',' monomial)*
    monomial := part ('*' part)* | '1'
    part     := 'x' INT ('^' INT)?
    func     := 'sbt' '(' monomial ')'
              | 'sbtc' '(' monomial (',' monomial)* ')'
              | 'dfixp' '(' part ';' dseq ')'
              | 'dfix' '(' part (',' part)* ';' dseq ')'
              | 'intersect' '(' expr (',' expr)* ')'
    dseq     := INT ('|' INT)*

``&`` is reserved for a future infix intersection and rejected with a
pointer to ``intersect(...)``.  A parenthesized group that reads as a
monomial list is an ideal literal; otherwise it is a parenthesized
expression.  The ambient variable count is the largest index appearing
anywhere in the tree unless a larger one is requested explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .borel import sbt_closure, sbt_principal
from .dfixed import dfixed_from_powers, normalize_spec, principal_d_fixed
from .dseq import DSequence
from .errors import DomainError, ParseError
from .ideals import (
    MonomialIdeal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    with_ambient,
)
from .monomials import Monomial

# a raw monomial: ((variable, exponent), ...) sorted by variable
RawMonomial = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Literal:
    monomials: tuple[RawMonomial, ...]


@dataclass(frozen=True)
class Sum:
    parts: tuple["IdealExpr", ...]


@dataclass(frozen=True)
class Product:
    parts: tuple["IdealExpr", ...]


@dataclass(frozen=True)
class Intersect:
    parts: tuple["IdealExpr", ...]


@dataclass(frozen=True)
class Sbt:
    monomial: RawMonomial


@dataclass(frozen=True)
class SbtClosure:
    monomials: tuple[RawMonomial, ...]


@dataclass(frozen=True)
class DFixedPrincipal:
    variable: int
    exponent: int
    dseq: DSequence


@dataclass(frozen=True)
class DFixedPowers:
    pairs: tuple[tuple[int, int], ...]
    dseq: DSequence


IdealExpr = Union[
    Literal, Sum, Product, Intersect, Sbt, SbtClosure, DFixedPrincipal, DFixedPowers
]

_FUNCS = ("sbtc", "sbt", "dfixp", "dfix", "intersect")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str):
        self.skip_ws()
        if not self.text.startswith(expected, self.pos):
            raise ParseError(f"expected {expected!r}", self.pos)
        self.pos += len(expected)

    def try_take(self, expected: str) -> bool:
        self.skip_ws()
        if self.text.startswith(expected, self.pos):
            self.pos += len(expected)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def word(self) -> str | None:
        self.skip_ws()
        for name in _FUNCS:
            if self.text.startswith(name, self.pos):
                j = self.pos + len(name)
                while j < len(self.text) and self.text[j].isspace():
                    j += 1
                if j < len(self.text) and self.text[j] == "(":
                    self.pos += len(name)
                    return name
        return None


def _merge_pairs(pairs: list[tuple[int, int]]) -> RawMonomial:
    acc: dict[int, int] = {}
    for var, exp in pairs:
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in acc.items() if e > 0))


def _parse_part(sc: _Scanner) -> tuple[int, int]:
    sc.skip_ws()
    if not sc.try_take("x"):
        raise ParseError("expected a variable like x2 or x2^6", sc.pos)
    var = sc.integer()
    if var < 1:
        raise ParseError("variable indices are 1-based", sc.pos)
    exp = 1
    if sc.try_take("^"):
        exp = sc.integer()
    return (var, exp)


def _parse_monomial(sc: _Scanner) -> RawMonomial:
    sc.skip_ws()
    if sc.peek() == "1":
        sc.take("1")
        return ()
    pairs = [_parse_part(sc)]
    while True:
        save = sc.pos
        if not sc.try_take("*"):
            break
        if sc.peek() != "x":
            sc.pos = save
            break
        pairs.append(_parse_part(sc))
    return _merge_pairs(pairs)


def _parse_dseq(sc: _Scanner) -> DSequence:
    entries = [sc.integer()]
    while sc.try_take("|"):
        entries.append(sc.integer())
    try:
        return DSequence(tuple(entries))
    except ValueError as exc:
        raise ParseError(str(exc), sc.pos) from None


def _parse_func(sc: _Scanner, name: str) -> IdealExpr:
    sc.take("(")
    if name == "sbt":
        mon = _parse_monomial(sc)
        sc.take(")")
        if not mon:
            raise ParseError("sbt() of the unit monomial", sc.pos)
        return Sbt(mon)
    if name == "sbtc":
        mons = [_parse_monomial(sc)]
        while sc.try_take(","):
            mons.append(_parse_monomial(sc))
        sc.take(")")
        if any(not m for m in mons):
            raise ParseError("sbtc() of the unit monomial", sc.pos)
        return SbtClosure(tuple(mons))
    if name in ("dfix", "dfixp"):
        pairs = [_parse_part(sc)]
        while sc.try_take(","):
            pairs.append(_parse_part(sc))
        sc.take(";")
        dseq = _parse_dseq(sc)
        sc.take(")")
        if name == "dfixp":
            if len(pairs) != 1:
                raise ParseError("dfixp() takes a single variable power", sc.pos)
            return DFixedPrincipal(pairs[0][0], pairs[0][1], dseq)
        return DFixedPowers(tuple(pairs), dseq)
    if name == "intersect":
        parts = [_parse_expr(sc)]
        while sc.try_take(","):
            parts.append(_parse_expr(sc))
        sc.take(")")
        return Intersect(tuple(parts))
    raise ParseError(f"unknown function {name!r}", sc.pos)


def _parse_atom(sc: _Scanner) -> IdealExpr:
    name = sc.word()
    if name is not None:
        return _parse_func(sc, name)
    if sc.peek() == "&":
        raise ParseError(
            "'&' is reserved; use intersect(a, b) for intersections", sc.pos
        )
    sc.take("(")
    save = sc.pos
    # an ideal literal first; fall back to a parenthesized expression
    try:
        mons = [_parse_monomial(sc)]
        while sc.try_take(","):
            mons.append(_parse_monomial(sc))
        sc.take(")")
        return Literal(tuple(mons))
    except ParseError:
        sc.pos = save
    inner = _parse_expr(sc)
    sc.take(")")
    return inner


def _parse_term(sc: _Scanner) -> IdealExpr:
    parts = [_parse_atom(sc)]
    while sc.try_take("*"):
        parts.append(_parse_atom(sc))
    return parts[0] if len(parts) == 1 else Product(tuple(parts))


def _parse_expr(sc: _Scanner) -> IdealExpr:
    parts = [_parse_term(sc)]
    while sc.try_take("+"):
        parts.append(_parse_term(sc))
    return parts[0] if len(parts) == 1 else Sum(tuple(parts))


def parse(text: str) -> IdealExpr:
    sc = _Scanner(text)
    expr = _parse_expr(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        if sc.peek() == "&":
            raise ParseError(
                "'&' is reserved; use intersect(a, b) for intersections", sc.pos
            )
        raise ParseError("trailing input", sc.pos)
    return expr


def raw_monomial_text(mon: RawMonomial) -> str:
    if not mon:
        return "1"
    return "*".join(
        f"x{var}" if exp == 1 else f"x{var}^{exp}" for var, exp in mon
    )


def print_expr(expr: IdealExpr) -> str:
    """Canonical printer; re-parsing the output reproduces the tree."""
    if isinstance(expr, Literal):
        return "(" + ",".join(raw_monomial_text(m) for m in expr.monomials) + ")"
    if isinstance(expr, Sum):
        return "+".join(
            f"({print_expr(p)})" if isinstance(p, Sum) else print_expr(p)
            for p in expr.parts
        )
    if isinstance(expr, Product):
        return "*".join(
            f"({print_expr(p)})" if isinstance(p, (Sum, Product)) else print_expr(p)
            for p in expr.parts
        )
    if isinstance(expr, Intersect):
        return "intersect(" + ",".join(print_expr(p) for p in expr.parts) + ")"
    if isinstance(expr, Sbt):
        return f"sbt({raw_monomial_text(expr.monomial)})"
    if isinstance(expr, SbtClosure):
        return "sbtc(" + ",".join(raw_monomial_text(m) for m in expr.monomials) + ")"
    if isinstance(expr, DFixedPrincipal):
        power = raw_monomial_text(((expr.variable, expr.exponent),))
        return f"dfixp({power};{expr.dseq})"
    if isinstance(expr, DFixedPowers):
        powers = ",".join(raw_monomial_text((p,)) for p in expr.pairs)
        return f"dfix({powers};{expr.dseq})"
    raise TypeError(f"not an expression node: {expr!r}")


def max_variable(expr: IdealExpr) -> int:
    if isinstance(expr, Literal):
        return max((v for m in expr.monomials for v, _ in m), default=1)
    if isinstance(expr, (Sum, Product, Intersect)):
        return max(max_variable(p) for p in expr.parts)
    if isinstance(expr, Sbt):
        return max(v for v, _ in expr.monomial)
    if isinstance(expr, SbtClosure):
        return max(v for m in expr.monomials for v, _ in m)
    if isinstance(expr, DFixedPrincipal):
        return expr.variable
    if isinstance(expr, DFixedPowers):
        return max(v for v, _ in expr.pairs)
    raise TypeError(f"not an expression node: {expr!r}")


def _raw_to_monomial(mon: RawMonomial, ambient: int) -> Monomial:
    return Monomial.from_powers(ambient, dict(mon))


def evaluate(expr: IdealExpr, ambient: int | None = None) -> MonomialIdeal:
    """Evaluate the tree to a monomial ideal.

    The ambient count defaults to the largest variable index in the tree;
    an explicit larger one embeds the same generators in a bigger ring.
    """
    needed = max_variable(expr)
    if ambient is None:
        ambient = needed
    elif ambient < needed:
        raise DomainError(
            f"expression uses x{needed} but only {ambient} variables requested"
        )
    return _evaluate(expr, ambient)


def _evaluate(expr: IdealExpr, ambient: int) -> MonomialIdeal:
    if isinstance(expr, Literal):
        return MonomialIdeal.from_gens(
            ambient, [_raw_to_monomial(m, ambient) for m in expr.monomials]
        )
    if isinstance(expr, Sum):
        return reduce(ideal_sum, (_evaluate(p, ambient) for p in expr.parts))
    if isinstance(expr, Product):
        return reduce(ideal_product, (_evaluate(p, ambient) for p in expr.parts))
    if isinstance(expr, Intersect):
        return reduce(ideal_intersect, (_evaluate(p, ambient) for p in expr.parts))
    if isinstance(expr, Sbt):
        return sbt_principal(_raw_to_monomial(expr.monomial, ambient))
    if isinstance(expr, SbtClosure):
        return sbt_closure([_raw_to_monomial(m, ambient) for m in expr.monomials])
    if isinstance(expr, DFixedPrincipal):
        return principal_d_fixed(
            expr.variable, expr.exponent, expr.dseq, ambient=ambient
        )
    if isinstance(expr, DFixedPowers):
        spec = normalize_spec(expr.pairs, expr.dseq)
        return with_ambient(dfixed_from_powers(spec), ambient)
    raise TypeError(f"not an expression node: {expr!r}")
