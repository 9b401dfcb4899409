"""Divisibility sequences and mixed-radix integer decompositions.

A d-sequence is a chain ``1 = d_0 | d_1 | ... | d_s`` of strictly
increasing positive integers in which each entry divides the next.  Every
nonnegative integer ``a`` has a unique expansion ``a = sum a_t * d_t`` with
``0 <= a_t < d_{t+1}/d_t`` for ``t < s`` (the top coefficient is
unbounded).  For ``d_t = p^t`` this is the p-adic expansion, and the
componentwise dominance order on coefficients recovers the Lucas
divisibility pattern of binomial coefficients mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator


@dataclass(frozen=True)
class DSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        d = self.entries
        if not d or d[0] != 1:
            raise ValueError("d-sequence must start with 1")
        for a, b in zip(d, d[1:]):
            if b <= a:
                raise ValueError(f"d-sequence not strictly increasing: {d}")
            if b % a != 0:
                raise ValueError(f"{a} does not divide {b} in d-sequence {d}")

    @classmethod
    def parse(cls, text: str) -> DSequence:
        """Parse a ``1|2|4|12`` style literal."""
        try:
            entries = tuple(int(part) for part in text.split("|"))
        except ValueError:
            raise ValueError(f"bad d-sequence literal: {text!r}") from None
        return cls(entries)

    @property
    def top_index(self) -> int:
        return len(self.entries) - 1

    def __str__(self) -> str:
        return "|".join(str(d) for d in self.entries)


@dataclass(frozen=True)
class DDecomposition:
    """Coefficients of the unique bounded expansion of ``value``."""

    value: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("negative value")

    @property
    def top_nonzero(self) -> int | None:
        """Largest index with a nonzero coefficient, or None for 0."""
        for t in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[t]:
                return t
        return None


def d_decompose(a: int, d: DSequence) -> DDecomposition:
    """Greedy expansion from the top entry down; the remainders force the
    bounded-coefficient constraints, so the result is the unique one."""
    if a < 0:
        raise ValueError("cannot decompose a negative integer")
    coeffs = [0] * len(d.entries)
    rest = a
    for t in range(len(d.entries) - 1, -1, -1):
        coeffs[t], rest = divmod(rest, d.entries[t])
    return DDecomposition(a, tuple(coeffs))


def recompose(coefficients: tuple[int, ...], d: DSequence) -> int:
    return sum(c * dt for c, dt in zip(coefficients, d.entries))


def leq_d(a: int, b: int, d: DSequence) -> bool:
    """Componentwise dominance of the d-decomposition coefficients."""
    ca = d_decompose(a, d).coefficients
    cb = d_decompose(b, d).coefficients
    return all(x <= y for x, y in zip(ca, cb))


def lt_d(a: int, b: int, d: DSequence) -> bool:
    return a != b and leq_d(a, b, d)


def dominated_values(b: int, d: DSequence) -> Iterator[int]:
    """All integers ``t`` with ``t <=_d b``, in increasing order.

    The coefficient boxes are independent, so dominated values are exactly
    the recompositions of componentwise-smaller coefficient vectors.
    """
    cb = d_decompose(b, d).coefficients
    values = sorted(
        recompose(choice, d)
        for choice in product(*(range(c + 1) for c in cb))
    )
    return iter(values)
