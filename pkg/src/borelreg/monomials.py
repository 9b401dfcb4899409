"""Monomials as immutable exponent vectors.

A monomial in ``S = K[x1, ..., xn]`` is stored as its exponent tuple of
length ``ambient = n``.  Variables are 1-based in all user-facing text
(``x1 .. xn``) and 0-based in the exponent tuple; the translation happens
only at the parser/printer boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import AmbientMismatchError

# Exponents are bounded machine integers; growing past this on multiply is
# a checked error, never a silent wrap.
EXPONENT_LIMIT = 2**63 - 1


@dataclass(frozen=True)
class Monomial:
    """A monomial in ``ambient`` variables.

    The unit monomial 1 is the all-zero exponent vector and is a valid
    value everywhere.
    """

    ambient: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.ambient < 1:
            raise ValueError(f"ambient must be positive, got {self.ambient}")
        if len(self.exponents) != self.ambient:
            raise ValueError(
                f"expected {self.ambient} exponents, got {len(self.exponents)}"
            )
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def unit(cls, ambient: int) -> Monomial:
        return cls(ambient, (0,) * ambient)

    @classmethod
    def variable(cls, i: int, ambient: int, power: int = 1) -> Monomial:
        """The monomial ``x_i^power`` (``i`` is 1-based)."""
        if not 1 <= i <= ambient:
            raise ValueError(f"variable index {i} out of range 1..{ambient}")
        exps = [0] * ambient
        exps[i - 1] = power
        return cls(ambient, tuple(exps))

    @classmethod
    def from_powers(cls, ambient: int, powers: Mapping[int, int]) -> Monomial:
        """Build from a ``{variable index: exponent}`` mapping (1-based)."""
        exps = [0] * ambient
        for i, e in powers.items():
            if not 1 <= i <= ambient:
                raise ValueError(f"variable index {i} out of range 1..{ambient}")
            exps[i - 1] += e
        return cls(ambient, tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    def nu(self, i: int) -> int:
        """Exponent of ``x_i`` (1-based index)."""
        if not 1 <= i <= self.ambient:
            raise ValueError(f"variable index {i} out of range 1..{self.ambient}")
        return self.exponents[i - 1]

    def max_support(self) -> int | None:
        """Largest ``i`` with ``x_i`` dividing the monomial, or None for 1."""
        for i in range(self.ambient, 0, -1):
            if self.exponents[i - 1] > 0:
                return i
        return None

    def _check_ambient(self, other: Monomial):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}"
            )

    def divides(self, other: Monomial) -> bool:
        self._check_ambient(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        self._check_ambient(other)
        return Monomial(
            self.ambient,
            tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)),
        )

    def gcd(self, other: Monomial) -> Monomial:
        self._check_ambient(other)
        return Monomial(
            self.ambient,
            tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)),
        )

    def __mul__(self, other: Monomial) -> Monomial:
        self._check_ambient(other)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        if any(e > EXPONENT_LIMIT for e in exps):
            raise OverflowError("exponent overflow in monomial product")
        return Monomial(self.ambient, exps)

    def quotient(self, other: Monomial) -> Monomial:
        """``self / other``; requires ``other`` to divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(
            self.ambient,
            tuple(a - b for a, b in zip(self.exponents, other.exponents)),
        )

    def with_ambient(self, ambient: int) -> Monomial:
        """Reinterpret in a ring with ``ambient`` variables.

        Shrinking requires the dropped variables to be absent.
        """
        if ambient == self.ambient:
            return self
        if ambient > self.ambient:
            return Monomial(ambient, self.exponents + (0,) * (ambient - self.ambient))
        if any(self.exponents[ambient:]):
            raise ValueError(
                f"{self} uses variables beyond x{ambient}, cannot restrict"
            )
        return Monomial(ambient, self.exponents[:ambient])

    def order_key(self) -> tuple:
        # graded-lex: degree first, then the exponent sequence
        return (self.degree, self.exponents)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)
