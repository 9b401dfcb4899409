"""Catalog of published worked examples whose printed values disagree with
the enumeration, plus the note machinery the reports use.

Every entry records the input, the printed claims and the values this
package computes; reports for a matching input carry the notes verbatim so
no disagreement between a published number and the oracle ever passes
silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .borel import sbt_principal
from .dfixed import (
    DSequence,
    block_structure,
    dfixed_from_powers,
    normalize_spec,
    reg_principal_d_fixed,
)
from .ideals import MonomialIdeal
from .monomials import Monomial


@dataclass(frozen=True)
class KnownDiscrepancy:
    label: str
    notes: tuple[str, ...]

    def ideal(self) -> MonomialIdeal:
        return _ideal_for(self.label)


_CATALOG: tuple[KnownDiscrepancy, ...] = (
    KnownDiscrepancy(
        "sbt(x2^6*x3^7)",
        (
            "published chi table for sbt(x2^6*x3^7) prints"
            " chi_2^(1) = (6+7-1) + 2*5 = 23, but the printed case rule"
            " evaluates to 22; the enumerated section quotient top degree"
            " is 23 (witness x1^12*x2^5*x3^6) and reg = 24, so the"
            " chi-formula value 23 here is off by one",
        ),
    ),
    KnownDiscrepancy(
        "dfix(x2^7,x3^10,x5^17;1|2|6|12)",
        (
            "published value reg = 27 for dfix(x2^7,x3^10,x5^17;1|2|6|12)"
            " is inconsistent with its own chi values (15, 22) and its own"
            " socle witness x1^5*x2^5*x3^5*x4^11*x5^11 of degree 37;"
            " enumeration confirms max socle degree 37 and reg = 38",
        ),
    ),
    KnownDiscrepancy(
        "dfix(x1^2,x2^7,x3^16;1|4|12)",
        (
            "published values chi_3 = 19 and reg = 23 for"
            " dfix(x1^2,x2^7,x3^16;1|4|12) disagree with the printed"
            " recursion and with enumeration, which give chi = (1, 3, 15),"
            " max socle degree 19 and reg = 20",
            "published socle witness x1*x2^3*x3^19 for"
            " dfix(x1^2,x2^7,x3^16;1|4|12) is divisible by x3^16 and lies"
            " in the ideal; a maximal socle element is x1*x2^3*x3^15",
        ),
    ),
)


@lru_cache(maxsize=None)
def _ideal_for(label: str) -> MonomialIdeal:
    if label == "sbt(x2^6*x3^7)":
        return sbt_principal(Monomial.from_powers(3, {2: 6, 3: 7}))
    if label == "dfix(x2^7,x3^10,x5^17;1|2|6|12)":
        spec = normalize_spec(
            [(2, 7), (3, 10), (5, 17)], DSequence.parse("1|2|6|12")
        )
        return dfixed_from_powers(spec)
    if label == "dfix(x1^2,x2^7,x3^16;1|4|12)":
        spec = normalize_spec(
            [(1, 2), (2, 7), (3, 16)], DSequence.parse("1|4|12")
        )
        return dfixed_from_powers(spec)
    raise KeyError(label)


def known_notes(ideal: MonomialIdeal) -> list[str]:
    """Catalog notes whose input evaluates to exactly this ideal."""
    notes: list[str] = []
    for entry in _CATALOG:
        if entry.ideal().ambient == ideal.ambient and entry.ideal() == ideal:
            notes.extend(entry.notes)
    return notes


def powers_equality_note(
    pairs: tuple[tuple[int, int], ...], d: DSequence
) -> str | None:
    """Note for inputs contradicting the published claim that the summed
    ideal and its largest principal part share a regularity only when all
    top digit positions coincide (k = 1)."""
    spec = normalize_spec(pairs, d)
    structure = block_structure(spec)
    if structure.k == 1:
        return None
    reg_sum = sum(structure.chi) + 1
    reg_last = reg_principal_d_fixed(spec.ambient, spec.pairs[-1][1], d)
    if reg_sum != reg_last:
        return None
    return (
        f"published claim 'reg(I) = reg(I_r) only when k = 1' fails on this"
        f" input: k = {structure.k} yet both regularities equal {reg_sum}"
    )
