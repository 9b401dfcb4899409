"""Monomial ideals as minimal generator sets, with the arithmetic used
throughout: sum, product, intersection, colon, saturation, graded slices,
truncation, the stability test and finite-length top degrees.

An ideal is stored in canonical form: the unique minimal generating set (a
divisibility antichain), sorted by (degree, exponent sequence).  Two ideals
are equal exactly when their canonical forms coincide.  The zero ideal has
no generators; the unit ideal is generated by 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _bulk
from .errors import AmbientMismatchError, BoundExceededError, DomainError
from .monomials import Monomial

# Below this many candidate/generator pairs the plain Python path is used.
_BULK_THRESHOLD = 4096


def iter_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of length ``parts`` summing to ``total``,
    in ascending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in iter_compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: int
    generators: tuple[Monomial, ...]

    @classmethod
    def zero(cls, ambient: int) -> MonomialIdeal:
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: int) -> MonomialIdeal:
        return cls(ambient, (Monomial.unit(ambient),))

    @classmethod
    def from_gens(cls, ambient: int, gens: Iterable[Monomial]) -> MonomialIdeal:
        return minimalize(ambient, gens)

    @classmethod
    def principal(cls, u: Monomial) -> MonomialIdeal:
        return cls(u.ambient, (u,))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    @cached_property
    def _by_degree(self) -> dict[int, set[tuple[int, ...]]]:
        buckets: dict[int, set[tuple[int, ...]]] = {}
        for g in self.generators:
            buckets.setdefault(g.degree, set()).add(g.exponents)
        return buckets

    @cached_property
    def _matrix(self) -> np.ndarray:
        return _bulk.matrix([g.exponents for g in self.generators], self.ambient)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_product(self, other)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ",".join(str(g) for g in self.generators) + ")"


def _check_same_ambient(*ideals: MonomialIdeal):
    ambients = {i.ambient for i in ideals}
    if len(ambients) > 1:
        raise AmbientMismatchError(f"ambient mismatch: {sorted(ambients)}")


def minimalize(ambient: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """The divisibility antichain generating the same ideal."""
    exps = set()
    for g in gens:
        if g.ambient != ambient:
            raise AmbientMismatchError(
                f"generator ambient {g.ambient} differs from {ambient}"
            )
        exps.add(g.exponents)
    if not exps:
        return MonomialIdeal.zero(ambient)
    if (0,) * ambient in exps:
        return MonomialIdeal.unit(ambient)
    return _from_exponents(ambient, _antichain_exponents(ambient, exps))


def _antichain_exponents(
    ambient: int, exps: set[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    ordered = sorted(exps, key=lambda e: (sum(e), e))
    if len(ordered) ** 2 > _BULK_THRESHOLD * 8:
        arr = _bulk.antichain(_bulk.matrix(ordered, ambient))
        return [tuple(int(x) for x in row) for row in arr]
    kept: list[tuple[int, ...]] = []
    kept_deg: list[int] = []
    for e in ordered:
        d = sum(e)
        divisible = False
        for ke, kd in zip(kept, kept_deg):
            # equal-degree distinct tuples never divide one another
            if kd < d and all(a <= b for a, b in zip(ke, e)):
                divisible = True
                break
        if not divisible:
            kept.append(e)
            kept_deg.append(d)
    return kept


def _from_exponents(ambient: int, exps: Sequence[tuple[int, ...]]) -> MonomialIdeal:
    gens = tuple(
        Monomial(ambient, e) for e in sorted(exps, key=lambda e: (sum(e), e))
    )
    return MonomialIdeal(ambient, gens)


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Membership: some minimal generator divides ``u``."""
    if I.ambient != u.ambient:
        raise AmbientMismatchError(f"ambient mismatch: {I.ambient} vs {u.ambient}")
    d = u.degree
    for gd, bucket in I._by_degree.items():
        if gd > d:
            continue
        if gd == d:
            if u.exponents in bucket:
                return True
            continue
        for e in bucket:
            if all(a <= b for a, b in zip(e, u.exponents)):
                return True
    return False


def contains_each(I: MonomialIdeal, exps: np.ndarray) -> np.ndarray:
    """Vectorized membership for a matrix of exponent rows."""
    return _bulk.divisible_any(exps, I._matrix)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ambient(I, J)
    return minimalize(I.ambient, I.generators + J.generators)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ambient(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.ambient)
    return minimalize(I.ambient, (g * h for g in I.generators for h in J.generators))


def ideal_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative ideal power")
    result = MonomialIdeal.unit(I.ambient)
    for _ in range(k):
        result = ideal_product(result, I)
    return result


def ideal_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of the generators."""
    _check_same_ambient(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.ambient)
    if len(I.generators) * len(J.generators) > _BULK_THRESHOLD:
        lcms = _bulk.pairwise_lcm(I._matrix, J._matrix)
        arr = _bulk.antichain(lcms)
        return _from_exponents(I.ambient, [tuple(int(x) for x in r) for r in arr])
    return minimalize(
        I.ambient, (g.lcm(h) for g in I.generators for h in J.generators)
    )


def colon_monomial(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """``(I : v)``, generated by ``u / gcd(u, v)`` over the generators."""
    if I.ambient != v.ambient:
        raise AmbientMismatchError(f"ambient mismatch: {I.ambient} vs {v.ambient}")
    return minimalize(I.ambient, (g.quotient(g.gcd(v)) for g in I.generators))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J)`` as the intersection of ``(I : v)`` over ``v`` in G(J)."""
    _check_same_ambient(I, J)
    if J.is_zero:
        raise DomainError("colon by the zero ideal")
    return reduce(
        ideal_intersect, (colon_monomial(I, v) for v in J.generators)
    )


def saturate_variable(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """``(I : x_j^infinity)``: zero the j-th exponent of every generator."""
    if not 1 <= j <= I.ambient:
        raise ValueError(f"variable index {j} out of range 1..{I.ambient}")
    out = []
    for g in I.generators:
        exps = list(g.exponents)
        exps[j - 1] = 0
        out.append(Monomial(I.ambient, tuple(exps)))
    return minimalize(I.ambient, out)


def saturate_ideal(I: MonomialIdeal, P: MonomialIdeal) -> MonomialIdeal:
    """``(I : P^infinity)``: the stable value of iterated colon by ``P``.

    Termination: the colon iteration is an ascending chain of monomial
    ideals in a noetherian ring.  When ``P`` is generated by single
    variables the fixed point equals the intersection of the individual
    variable saturations, which is much cheaper; the equivalence of the two
    routes is covered by a property test.
    """
    _check_same_ambient(I, P)
    if P.is_zero:
        raise DomainError("saturation by the zero ideal")
    if not P.is_unit and all(g.degree == 1 for g in P.generators):
        variables = [g.max_support() for g in P.generators]
        parts = [saturate_variable(I, j) for j in variables]
        return reduce(ideal_intersect, parts)
    current = I
    while True:
        nxt = colon_ideal(current, P)
        if nxt == current:
            return current
        current = nxt


def irrelevant_ideal(ambient: int, upto: int | None = None) -> MonomialIdeal:
    """``(x_1, ..., x_j)`` inside the ``ambient``-variable ring."""
    j = ambient if upto is None else upto
    if not 1 <= j <= ambient:
        raise ValueError(f"prefix length {j} out of range 1..{ambient}")
    return segment_ideal(ambient, 1, j, 1)


def row_ideal(ambient: int, upto: int, power: int) -> MonomialIdeal:
    """``(x_1^power, ..., x_upto^power)`` inside the ambient ring."""
    return segment_ideal(ambient, 1, upto, power)


def segment_ideal(ambient: int, lo: int, hi: int, power: int) -> MonomialIdeal:
    """``(x_lo^power, ..., x_hi^power)`` inside the ambient ring."""
    if not 1 <= lo <= hi <= ambient:
        raise ValueError(f"bad variable segment {lo}..{hi} in ambient {ambient}")
    if power < 1:
        raise ValueError("power must be positive")
    # pure powers of distinct variables form an antichain; only the
    # canonical (degree, lex) generator order needs arranging
    return _from_exponents(
        ambient,
        [Monomial.variable(i, ambient, power).exponents for i in range(lo, hi + 1)],
    )


def with_ambient(I: MonomialIdeal, ambient: int) -> MonomialIdeal:
    """Reinterpret the same generators in an ``ambient``-variable ring."""
    if ambient == I.ambient:
        return I
    gens = tuple(g.with_ambient(ambient) for g in I.generators)
    return MonomialIdeal(ambient, gens)


@dataclass(frozen=True)
class GradedSlice:
    """All monomials of one degree, split into the ideal and its complement."""

    degree: int
    inside: tuple[Monomial, ...]
    outside: tuple[Monomial, ...]


def graded_slice(I: MonomialIdeal, e: int) -> GradedSlice:
    """Split the full degree-``e`` slice of the ring by membership in I."""
    if e < 0:
        raise ValueError("negative degree")
    all_exps = list(iter_compositions(e, I.ambient))
    if len(all_exps) * max(1, len(I.generators)) > _BULK_THRESHOLD:
        mask = contains_each(I, _bulk.matrix(all_exps, I.ambient))
        flags = (bool(b) for b in mask)
    else:
        flags = (
            contains(I, Monomial(I.ambient, exps)) for exps in all_exps
        )
    inside, outside = [], []
    for exps, flag in zip(all_exps, flags):
        (inside if flag else outside).append(Monomial(I.ambient, exps))
    return GradedSlice(e, tuple(inside), tuple(outside))


def deg_ideal(I: MonomialIdeal) -> int:
    """Maximal degree of a minimal generator."""
    if I.is_zero:
        raise DomainError("deg of the zero ideal")
    return max(g.degree for g in I.generators)


def m_ideal(I: MonomialIdeal) -> int:
    """Largest variable index occurring in a minimal generator."""
    if I.is_zero:
        raise DomainError("m() of the zero ideal")
    supports = [g.max_support() for g in I.generators]
    supports = [s for s in supports if s is not None]
    if not supports:
        raise DomainError("m() of the unit ideal")
    return max(supports)


def truncate(I: MonomialIdeal, e: int) -> MonomialIdeal:
    """The ideal generated by the degree-``e`` part of I.

    For ``e >= deg(I)`` this is the truncation I_{>=e}.
    """
    if e < deg_ideal(I):
        raise DomainError(f"truncation degree {e} below generator degree")
    exps = set()
    for g in I.generators:
        for extra in iter_compositions(e - g.degree, I.ambient):
            exps.add(tuple(a + b for a, b in zip(g.exponents, extra)))
    # same-degree monomials form an antichain already
    return _from_exponents(I.ambient, sorted(exps))


def is_stable(I: MonomialIdeal) -> bool:
    """Stability check on the minimal generators: for every generator u
    and every j < m(u), ``x_j * u / x_{m(u)}`` stays in the ideal.

    Checking generators suffices: for v = u*w with u a generator, the
    exchanged monomial x_j*v/x_{m(v)} is a multiple of either u or of
    x_j*u/x_{m(u)}.  The exhaustive all-monomials checker lives in
    :mod:`borelreg.oracle` and a property test keeps the two in agreement.
    """
    for u in I.generators:
        m = u.max_support()
        if m is None:
            continue
        base = u.quotient(Monomial.variable(m, I.ambient))
        for j in range(1, m):
            if not contains(I, base * Monomial.variable(j, I.ambient)):
                return False
    return True


def is_artinian(I: MonomialIdeal) -> bool:
    """Whether the ideal contains a power of every variable."""
    if I.is_zero:
        return False
    if I.is_unit:
        return True
    pure = set()
    for g in I.generators:
        support = [i for i in range(1, I.ambient + 1) if g.nu(i) > 0]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == I.ambient


def s_quotient(
    Jsat: MonomialIdeal, J: MonomialIdeal, assert_bound: int | None = None
) -> int | None:
    """Top nonzero degree of the finite-length quotient ``Jsat / J``.

    Scans degrees upward, comparing the degree-e slice of ``Jsat`` with the
    one of ``J``.  The scan is self-auditing: once the slices agree at some
    degree at or above deg(Jsat) they agree forever after, and a hard guard
    at ``max(sum of generator degrees of J, deg(Jsat)) + 1`` turns a
    violated finite-length assumption into an error instead of a lie.

    Returns None when the two ideals are equal.
    """
    _check_same_ambient(Jsat, J)
    if Jsat == J:
        return None
    for g in J.generators:
        if not contains(Jsat, g):
            raise DomainError("J is not contained in Jsat")
    taylor = sum(g.degree for g in J.generators)
    top_gen = deg_ideal(Jsat) if not Jsat.is_zero else 0
    guard = max(taylor, top_gen) + 1
    last_nonempty: int | None = None
    for e in range(guard + 1):
        if _slice_difference_nonempty(Jsat, J, e):
            last_nonempty = e
            if e == guard:
                raise BoundExceededError(
                    f"quotient still nonzero at degree {guard}; "
                    "Jsat/J does not have finite length"
                )
        elif e >= top_gen:
            break
    else:
        raise BoundExceededError(
            f"no certificate of vanishing up to degree {guard}"
        )
    if assert_bound is not None and last_nonempty is not None:
        if last_nonempty > assert_bound:
            raise BoundExceededError(
                f"top degree {last_nonempty} exceeds the asserted bound {assert_bound}"
            )
    return last_nonempty


def _slice_difference_nonempty(Jsat: MonomialIdeal, J: MonomialIdeal, e: int) -> bool:
    all_exps = list(iter_compositions(e, Jsat.ambient))
    if len(all_exps) * max(1, len(Jsat.generators)) > _BULK_THRESHOLD:
        arr = _bulk.matrix(all_exps, Jsat.ambient)
        in_sat = contains_each(Jsat, arr)
        if not in_sat.any():
            return False
        sub = arr[in_sat]
        return bool((~contains_each(J, sub)).any())
    for exps in all_exps:
        u = Monomial(Jsat.ambient, exps)
        if contains(Jsat, u) and not contains(J, u):
            return True
    return False
