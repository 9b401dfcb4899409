"""Shared builders for the test suite."""

from __future__ import annotations

import random

from borelreg.borel import sbt_principal
from borelreg.dfixed import DSequence, normalize_spec
from borelreg.ideals import (
    MonomialIdeal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
)
from borelreg.monomials import Monomial


def mono(ambient: int, powers: dict[int, int] | None = None) -> Monomial:
    return Monomial.from_powers(ambient, powers or {})


def ideal(ambient: int, *gens: dict[int, int]) -> MonomialIdeal:
    return MonomialIdeal.from_gens(
        ambient, [Monomial.from_powers(ambient, g) for g in gens]
    )


def random_monomial(rng: random.Random, ambient: int, max_exp: int = 5) -> Monomial:
    support = sorted(
        rng.sample(range(1, ambient + 1), rng.randint(1, ambient))
    )
    return Monomial.from_powers(
        ambient, {i: rng.randint(1, max_exp) for i in support}
    )


def random_sbt_ideal(rng: random.Random, ambient: int) -> MonomialIdeal:
    """A member of the closure family: sums, products and intersections of
    principal strong-Borel-type ideals."""
    first = sbt_principal(random_monomial(rng, ambient))
    if rng.random() < 0.4:
        return first
    second = sbt_principal(random_monomial(rng, ambient))
    op = rng.choice((ideal_sum, ideal_product, ideal_intersect))
    return op(first, second)


STANDARD_DSEQS = tuple(
    DSequence.parse(text) for text in ("1|2", "1|4", "1|2|4", "1|2|6")
)


def random_power_spec(
    rng: random.Random,
    max_ambient: int = 4,
    min_alpha: int = 1,
    max_alpha: int = 20,
    dseqs=STANDARD_DSEQS,
):
    """A random normalized variable-power input (the last index is the
    ambient count, both indices and exponents strictly increase)."""
    while True:
        d = rng.choice(dseqs)
        n = rng.randint(2, max_ambient)
        r = rng.randint(1, min(3, n))
        indices = sorted(set(rng.sample(range(1, n + 1), r)) | {n})
        try:
            alphas = sorted(
                rng.sample(range(min_alpha, max_alpha + 1), len(indices))
            )
        except ValueError:
            continue
        spec = normalize_spec(list(zip(indices, alphas)), d)
        if spec.ambient == n:
            return spec
