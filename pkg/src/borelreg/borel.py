"""Borel-type and strong-Borel-type monomial ideals.

A monomial ideal I is of Borel type when ``(I : x_j^inf)`` equals
``(I : (x_1,...,x_j)^inf)`` for every j.  It is of strong Borel type (SBT)
when for every monomial u in I and every pair j < i with ``nu_i(u) > 0``
there is some ``t <= nu_i(u)`` with ``x_j^t * u / x_i^nu_i(u)`` in I.

Three regularity paths live here:

* the sequential chain: saturate at the largest occurring variable,
  restrict, repeat; the regularity is the maximum of the section quotient
  top degrees plus one;
* stable truncation: the smallest ``e >= deg(I)`` with ``I_{>=e}`` stable;
* the chi table for principal SBT ideals, a closed form evaluated exactly
  as published.  The published worked example for it is internally
  inconsistent (its own arithmetic does not reproduce its printed value),
  so this path is labeled "as printed" everywhere and the chain and
  truncation paths stay authoritative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceededError, DomainError
from .ideals import (
    MonomialIdeal,
    contains,
    deg_ideal,
    ideal_product,
    irrelevant_ideal,
    is_stable,
    m_ideal,
    minimalize,
    row_ideal,
    s_quotient,
    saturate_ideal,
    saturate_variable,
    truncate,
    with_ambient,
)
from .monomials import Monomial


def blocks_of(u: Monomial) -> tuple[tuple[int, int], ...]:
    """The ``(i_q, alpha_q)`` pairs of ``u = prod x_{i_q}^{alpha_q}`` with
    ``i_1 < ... < i_r`` and positive exponents."""
    if u.is_unit:
        raise DomainError("the unit monomial has no blocks")
    return tuple(
        (i, u.nu(i)) for i in range(1, u.ambient + 1) if u.nu(i) > 0
    )


def sbt_principal(u: Monomial) -> MonomialIdeal:
    """Smallest SBT ideal containing ``u``: the product over the blocks of
    ``u`` of the row ideals ``(x_1^{alpha_q}, ..., x_{i_q}^{alpha_q})``."""
    result = MonomialIdeal.unit(u.ambient)
    for i_q, alpha_q in blocks_of(u):
        result = ideal_product(result, row_ideal(u.ambient, i_q, alpha_q))
    return result


def sbt_violation(I: MonomialIdeal) -> tuple[Monomial, int, int] | None:
    """First (u, j, i) among the minimal generators with no exchange
    witness ``t <= nu_i(u)``, or None when the ideal is SBT.

    The generator-level check suffices: for v = u*w with u a generator, a
    witness t for u transfers to v because
    x_j^t * v / x_i^{nu_i(v)} = (x_j^t * u / x_i^{nu_i(u)}) * (w / x_i^{nu_i(w)})
    is a multiple of a member of I.  The all-monomials checker in the
    oracle module cross-checks this in the property suite.
    """
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    for u in I.generators:
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
                    return (u, j, i)
    return None


def is_sbt(I: MonomialIdeal) -> bool:
    return sbt_violation(I) is None


def borel_violation(I: MonomialIdeal) -> int | None:
    """Smallest j at which the two saturations differ, None for Borel type."""
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    for j in range(1, I.ambient + 1):
        by_variable = saturate_variable(I, j)
        by_prefix = saturate_ideal(I, irrelevant_ideal(I.ambient, j))
        if by_variable != by_prefix:
            return j
    return None


def is_borel_type(I: MonomialIdeal) -> bool:
    return borel_violation(I) is None


def sbt_closure(monomials: tuple[Monomial, ...] | list[Monomial]) -> MonomialIdeal:
    """Smallest SBT ideal containing the given monomials.

    Fixed point iteration: whenever a generator u lacks an exchange witness
    for a pair j < i, the full swap ``x_j^{nu_i(u)} * u / x_i^{nu_i(u)}``
    is added.  Any SBT ideal containing u contains the full swap (it is a
    multiple of the witnessed exchange), so each addition is forced and the
    fixed point is the smallest SBT ideal.  Added monomials keep the degree
    of u, so the iteration stabilizes.
    """
    monomials = list(monomials)
    if not monomials:
        raise DomainError("closure of an empty monomial set")
    if any(u.is_unit for u in monomials):
        raise DomainError("closure of a set containing the unit monomial")
    ambient = monomials[0].ambient
    current = minimalize(ambient, monomials)
    while True:
        added: list[Monomial] = []
        for u in current.generators:
            for i in range(2, ambient + 1):
                nu = u.nu(i)
                if nu == 0:
                    continue
                base = u.quotient(Monomial.variable(i, ambient, nu))
                for j in range(1, i):
                    if not any(
                        contains(current, base * Monomial.variable(j, ambient, t))
                        for t in range(nu + 1)
                    ):
                        added.append(base * Monomial.variable(j, ambient, nu))
        if not added:
            return current
        current = minimalize(ambient, list(current.generators) + added)


@dataclass(frozen=True)
class ChainStep:
    """One step of the sequential chain.

    ``ideal`` is I_l in the full ambient ring, ``top_variable`` is
    n_l = m(I_l), ``section`` is the ideal generated by G(I_l) inside
    K[x_1..x_{n_l}], ``section_saturation`` its saturation there, and
    ``top_degree`` the top nonzero degree of section_saturation / section
    (None when the section is already saturated).
    """

    ideal: MonomialIdeal
    top_variable: int
    section: MonomialIdeal
    section_saturation: MonomialIdeal
    top_degree: int | None


@dataclass(frozen=True)
class SequentialChain:
    ambient: int
    steps: tuple[ChainStep, ...]

    @property
    def top_degrees(self) -> tuple[int | None, ...]:
        return tuple(step.top_degree for step in self.steps)


def sequential_chain(I: MonomialIdeal) -> SequentialChain:
    """The ascending chain I = I_0 < I_1 < ... < (1) obtained by saturating
    at the largest occurring variable, with the per-step section data."""
    if I.is_zero:
        raise DomainError("sequential chain of the zero ideal")
    if not is_borel_type(I):
        raise DomainError("sequential chain requires a Borel-type ideal")
    steps: list[ChainStep] = []
    current = I
    previous_top = I.ambient + 1
    while not current.is_unit:
        n_ell = m_ideal(current)
        if n_ell >= previous_top:
            raise AssertionError("chain top variables must strictly decrease")
        previous_top = n_ell
        section = with_ambient(current, n_ell)
        section_sat = saturate_ideal(section, irrelevant_ideal(n_ell))
        bound = None
        if section.is_proper:
            # Borel-type sections obey the n*(deg - 1) regularity bound
            bound = n_ell * (deg_ideal(section) - 1)
        s = s_quotient(section_sat, section, assert_bound=bound)
        steps.append(ChainStep(current, n_ell, section, section_sat, s))
        current = saturate_variable(current, n_ell)
    return SequentialChain(I.ambient, tuple(steps))


def reg_sequential(I: MonomialIdeal) -> int:
    """Regularity from the sequential chain: max of the section quotient
    top degrees, plus one."""
    if not I.is_proper:
        raise DomainError("regularity requires a proper nonzero ideal")
    chain = sequential_chain(I)
    tops = [s for s in chain.top_degrees if s is not None]
    if not tops:
        # cannot happen for a proper Borel-type ideal: the top variable of
        # each section divides a minimal generator, so its section is never
        # saturated; guard instead of fabricating a value
        raise DomainError("every chain section was saturated; no top degree")
    return max(tops) + 1


@dataclass(frozen=True)
class ChiRow:
    """One row of the chi table: block q audited against reference block f."""

    q: int
    f: int
    entries: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class SbtChiTable:
    """The closed-form table for a principal SBT ideal, as printed.

    For blocks (i_q, alpha_q) of u and each admissible reference f <= q
    (those with alpha_f <= alpha_q), entry j in 1..i_q is
    ``alpha_j + alpha_q - 1`` when j < q and ``alpha_j >= alpha_f``, and
    ``alpha_f - 1`` otherwise.  chi_q is the maximum row total over
    admissible f, and the predicted regularity is ``max_q chi_q + 1``.
    """

    blocks: tuple[tuple[int, int], ...]
    rows: tuple[ChiRow, ...]
    chi: tuple[int, ...]
    regularity: int

    def row(self, q: int, f: int) -> ChiRow:
        for r in self.rows:
            if r.q == q and r.f == f:
                return r
        raise KeyError(f"no chi row for q={q}, f={f}")


def chi_table(u: Monomial) -> SbtChiTable:
    blocks = blocks_of(u)
    alphas = [alpha for _, alpha in blocks]
    rows: list[ChiRow] = []
    chi: list[int] = []
    for q, (i_q, alpha_q) in enumerate(blocks, start=1):
        best: int | None = None
        for f, alpha_f in enumerate(alphas[:q], start=1):
            if alpha_f > alpha_q:
                continue
            entries = []
            for j in range(1, i_q + 1):
                if j < q and alphas[j - 1] >= alpha_f:
                    entries.append(alphas[j - 1] + alpha_q - 1)
                else:
                    entries.append(alpha_f - 1)
            total = sum(entries)
            rows.append(ChiRow(q, f, tuple(entries), total))
            best = total if best is None else max(best, total)
        assert best is not None  # f = q is always admissible
        chi.append(best)
    return SbtChiTable(blocks, tuple(rows), tuple(chi), max(chi) + 1)


def reg_sbt_formula(u: Monomial) -> int:
    """Regularity of SBT(u) by the printed chi table (see chi_table)."""
    return chi_table(u).regularity


def reg_upper_bound(I: MonomialIdeal) -> int:
    """The general bound n*(deg(I) - 1) + 1 for Borel-type ideals."""
    return I.ambient * (deg_ideal(I) - 1) + 1


def reg_truncation(I: MonomialIdeal) -> int:
    """Regularity as the smallest ``e >= deg(I)`` with ``I_{>=e}`` stable.

    The scan stops at the n*(deg(I) - 1) + 1 bound and reports instead of
    extending past it.
    """
    if not I.is_proper:
        raise DomainError("regularity requires a proper nonzero ideal")
    if not is_borel_type(I):
        raise DomainError("stable truncation requires a Borel-type ideal")
    lowest = deg_ideal(I)
    bound = reg_upper_bound(I)
    for e in range(lowest, bound + 1):
        if is_stable(truncate(I, e)):
            return e
    raise BoundExceededError(
        f"no stable truncation up to the bound {bound}"
    )
