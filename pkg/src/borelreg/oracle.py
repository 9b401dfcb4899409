"""Brute-force ground truth.

Everything in this module is enumerative: socles and top standard degrees
come from breadth-first walks over actual monomials, and the class
membership checks quantify over all monomials of the ideal up to an
explicit degree bound.  Nothing here calls the closed-form code paths in
:mod:`borelreg.borel` or :mod:`borelreg.dfixed`; shared code is limited to
the monomial/ideal primitives, so agreement between an oracle and a
formula is evidence, not circularity.

Scan bounds are explicit and asserted, never silently extended.  These
routines are exponential in variables + degree by design and are meant for
small ambients (n <= 5, degrees in the low tens).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _bulk
from .dseq import DSequence, dominated_values
from .errors import BoundExceededError, DomainError
from .ideals import (
    MonomialIdeal,
    contains,
    contains_each,
    deg_ideal,
    graded_slice,
    irrelevant_ideal,
    is_artinian,
    m_ideal,
    saturate_ideal,
    saturate_variable,
    with_ambient,
)
from .monomials import Monomial


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SocleReport:
    """Monomials of ``(I : m) \\ I`` and the induced degree data.

    ``reg`` is only populated for artinian ideals, where the regularity
    equals the maximal socle degree plus one.
    """

    socle_monomials: tuple[Monomial, ...]
    max_degree: int | None
    reg: int | None


def _taylor_bound(I: MonomialIdeal) -> int:
    return sum(g.degree for g in I.generators)


def socle_oracle(I: MonomialIdeal) -> SocleReport:
    """Enumerate the socle of S/I.

    Walks the standard monomials degree by degree (every standard monomial
    of degree e+1 is a variable times a standard monomial of degree e) and
    keeps those annihilated by every variable.  The walk stops when a layer
    is empty; for non-artinian ideals it stops at the sum of the generator
    degrees, beyond which no socle element can live.
    """
    if not I.is_proper:
        raise DomainError("socle requires a proper nonzero ideal")
    artinian = is_artinian(I)
    bound = _taylor_bound(I)
    n = I.ambient
    layer = np.zeros((1, n), dtype=_bulk.DTYPE)
    socle_rows: list[tuple[int, np.ndarray]] = []
    e = 0
    while len(layer):
        if e > bound:
            if artinian:
                raise BoundExceededError(
                    f"standard monomials persist past degree {bound} "
                    "for an artinian ideal"
                )
            break
        children = _bulk.expand_by_variables(layer)
        in_ideal = contains_each(I, children).reshape(len(layer), n)
        corner = in_ideal.all(axis=1)
        if corner.any():
            socle_rows.append((e, layer[corner]))
        survivors = children[~in_ideal.reshape(-1)]
        layer = (
            np.unique(survivors, axis=0)
            if len(survivors)
            else survivors.reshape(0, n)
        )
        e += 1
    monomials = tuple(
        Monomial(n, tuple(int(x) for x in row))
        for deg, rows in socle_rows
        for row in rows
    )
    max_degree = max((deg for deg, _ in socle_rows), default=None)
    reg = max_degree + 1 if (artinian and max_degree is not None) else None
    return SocleReport(monomials, max_degree, reg)


def top_standard_degree(I: MonomialIdeal) -> int:
    """Largest degree carrying a monomial outside I (artinian only)."""
    if not I.is_proper:
        raise DomainError("top standard degree requires a proper nonzero ideal")
    if not is_artinian(I):
        raise DomainError("top standard degree requires an artinian ideal")
    bound = _taylor_bound(I)
    n = I.ambient
    layer = np.zeros((1, n), dtype=_bulk.DTYPE)
    top = 0
    e = 0
    while len(layer):
        top = e
        if e > bound:
            raise BoundExceededError(
                f"standard monomials persist past degree {bound}"
            )
        children = _bulk.expand_by_variables(layer)
        keep = ~contains_each(I, children)
        survivors = children[keep]
        layer = (
            np.unique(survivors, axis=0)
            if len(survivors)
            else survivors.reshape(0, n)
        )
        e += 1
    return top


def quotient_top_degree(Jsat: MonomialIdeal, J: MonomialIdeal) -> int | None:
    """Top degree of ``Jsat / J`` by frontier expansion.

    Starts from the generators of ``Jsat`` that avoid ``J`` and multiplies
    by variables, discarding products that fall into ``J``.  This is the
    enumerative twin of :func:`borelreg.ideals.s_quotient`, which scans
    whole graded slices instead; the two must agree and a property test
    pins that.
    """
    if Jsat.ambient != J.ambient:
        raise DomainError("ambient mismatch")
    if Jsat == J:
        return None
    for g in J.generators:
        if not contains(Jsat, g):
            raise DomainError("J is not contained in Jsat")
    n = Jsat.ambient
    top_gen = deg_ideal(Jsat)
    guard = max(sum(g.degree for g in J.generators), top_gen) + 1
    inject: dict[int, list[tuple[int, ...]]] = {}
    for g in Jsat.generators:
        if not contains(J, g):
            inject.setdefault(g.degree, []).append(g.exponents)
    frontier = np.zeros((0, n), dtype=_bulk.DTYPE)
    last: int | None = None
    for e in range(guard + 1):
        rows = [r for r in (frontier,) if len(r)]
        if e in inject:
            rows.append(_bulk.matrix(inject[e], n))
        frontier = np.unique(np.vstack(rows), axis=0) if rows else frontier[:0]
        if len(frontier):
            last = e
            if e == guard:
                raise BoundExceededError(
                    f"quotient still nonzero at degree {guard}; "
                    "Jsat/J does not have finite length"
                )
        elif e >= top_gen:
            return last
        children = _bulk.expand_by_variables(frontier)
        if len(children):
            children = children[~contains_each(J, children)]
            frontier = (
                np.unique(children, axis=0)
                if len(children)
                else children.reshape(0, n)
            )
        else:
            frontier = frontier[:0]
    return last


def difference_monomials(
    A: MonomialIdeal, B: MonomialIdeal, max_degree: int
) -> dict[int, set[Monomial]]:
    """All monomials of ``A`` outside ``B`` with degree at most
    ``max_degree``, grouped by degree.

    Frontier expansion from the generators of A: every element of the
    difference above the generator degrees is a variable multiple of a
    lower one, so the walk is complete.
    """
    if A.ambient != B.ambient:
        raise DomainError("ambient mismatch")
    n = A.ambient
    inject: dict[int, list[tuple[int, ...]]] = {}
    for g in A.generators:
        if g.degree <= max_degree and not contains(B, g):
            inject.setdefault(g.degree, []).append(g.exponents)
    out: dict[int, set[Monomial]] = {}
    frontier = np.zeros((0, n), dtype=_bulk.DTYPE)
    for e in range(max_degree + 1):
        rows = [r for r in (frontier,) if len(r)]
        if e in inject:
            rows.append(_bulk.matrix(inject[e], n))
        frontier = np.unique(np.vstack(rows), axis=0) if rows else frontier[:0]
        if len(frontier):
            out[e] = {
                Monomial(n, tuple(int(x) for x in row)) for row in frontier
            }
        if e == max_degree:
            break
        children = _bulk.expand_by_variables(frontier)
        if len(children):
            children = children[~contains_each(B, children)]
            frontier = (
                np.unique(children, axis=0)
                if len(children)
                else children.reshape(0, n)
            )
        else:
            frontier = frontier[:0]
    return out


def reg_enumerative(I: MonomialIdeal) -> int:
    """Regularity by enumeration only.

    Artinian ideals: maximal socle degree plus one.  Otherwise the
    saturation chain is rebuilt here from the ideal primitives (saturate at
    the largest occurring variable, restrict, repeat) and the top degree of
    every section quotient is enumerated; the maximum plus one is the
    regularity for any Borel-type ideal.  Callers are responsible for the
    Borel-type hypothesis in the non-artinian case.
    """
    if not I.is_proper:
        raise DomainError("regularity requires a proper nonzero ideal")
    if is_artinian(I):
        report = socle_oracle(I)
        assert report.reg is not None
        return report.reg
    tops: list[int] = []
    current = I
    while not current.is_unit:
        n_ell = m_ideal(current)
        section = with_ambient(current, n_ell)
        section_sat = saturate_ideal(section, irrelevant_ideal(n_ell))
        s = quotient_top_degree(section_sat, section)
        if s is not None:
            tops.append(s)
        current = saturate_variable(current, n_ell)
    if not tops:
        raise DomainError("every chain section was saturated; no top degree")
    return max(tops) + 1


def _monomials_of_ideal_upto(I: MonomialIdeal, bound: int):
    for e in range(bound + 1):
        for u in graded_slice(I, e).inside:
            yield u


def exhaustive_sbt_check(I: MonomialIdeal, max_extra_degree: int) -> CheckResult:
    """Strong-Borel-type condition quantified over ALL monomials of I up to
    ``deg(I) + max_extra_degree``: for every u in I and j < i with
    ``nu_i(u) > 0`` some ``t <= nu_i(u)`` has ``x_j^t * u / x_i^nu_i(u)``
    in I."""
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    bound = deg_ideal(I) + max_extra_degree
    for u in _monomials_of_ideal_upto(I, bound):
        for i in range(2, I.ambient + 1):
            nu = u.nu(i)
            if nu == 0:
                continue
            base = u.quotient(Monomial.variable(i, I.ambient, nu))
            for j in range(1, i):
                if not any(
                    contains(I, base * Monomial.variable(j, I.ambient, t))
                    for t in range(nu + 1)
                ):
                    return CheckResult(False, f"u={u}, j={j}, i={i}")
    return CheckResult(True)


def exhaustive_dfixed_check(
    I: MonomialIdeal, d: DSequence, max_extra_degree: int
) -> CheckResult:
    """d-fixed condition over ALL monomials of I up to the bound: for every
    u in I, j < i and every ``t <=_d nu_i(u)``, ``u * x_j^t / x_i^t`` stays
    in I."""
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    bound = deg_ideal(I) + max_extra_degree
    for u in _monomials_of_ideal_upto(I, bound):
        for i in range(2, I.ambient + 1):
            nu = u.nu(i)
            if nu == 0:
                continue
            for j in range(1, i):
                for t in dominated_values(nu, d):
                    if t == 0:
                        continue
                    swapped = u.quotient(
                        Monomial.variable(i, I.ambient, t)
                    ) * Monomial.variable(j, I.ambient, t)
                    if not contains(I, swapped):
                        return CheckResult(False, f"u={u}, j={j}, i={i}, t={t}")
    return CheckResult(True)


def exhaustive_stable_check(I: MonomialIdeal, max_extra_degree: int) -> CheckResult:
    """Stability over ALL monomials of I up to the bound: for every u in I
    and j < m(u), ``x_j * u / x_{m(u)}`` stays in I."""
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    bound = deg_ideal(I) + max_extra_degree
    for u in _monomials_of_ideal_upto(I, bound):
        m = u.max_support()
        if m is None:
            continue
        base = u.quotient(Monomial.variable(m, I.ambient))
        for j in range(1, m):
            if not contains(I, base * Monomial.variable(j, I.ambient)):
                return CheckResult(False, f"u={u}, j={j}")
    return CheckResult(True)


def borel_witness_check(I: MonomialIdeal, max_extra_degree: int = 2) -> CheckResult:
    """Borel-type condition through its witness characterization: for every
    monomial u of I and j < i with ``nu_i(u) > 0`` there is some t > 0 with
    ``x_j^t * u / x_i^nu_i(u)`` in I.  Existence of t is decided exactly by
    membership of ``u / x_i^nu_i(u)`` in the x_j-saturation."""
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    bound = deg_ideal(I) + max_extra_degree
    saturations = {
        j: saturate_variable(I, j) for j in range(1, I.ambient)
    }
    for u in _monomials_of_ideal_upto(I, bound):
        for i in range(2, I.ambient + 1):
            nu = u.nu(i)
            if nu == 0:
                continue
            base = u.quotient(Monomial.variable(i, I.ambient, nu))
            for j in range(1, i):
                if not contains(saturations[j], base):
                    return CheckResult(False, f"u={u}, j={j}, i={i}")
    return CheckResult(True)
