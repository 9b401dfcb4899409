import random

import pytest

from borelreg.errors import AmbientMismatchError, BoundExceededError, DomainError
from borelreg.ideals import (
    MonomialIdeal,
    colon_ideal,
    colon_monomial,
    contains,
    deg_ideal,
    graded_slice,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    irrelevant_ideal,
    is_artinian,
    is_stable,
    iter_compositions,
    m_ideal,
    s_quotient,
    saturate_ideal,
    saturate_variable,
    truncate,
)
from borelreg.monomials import Monomial
from borelreg.oracle import exhaustive_stable_check

from conftest import ideal, mono, random_monomial


def sbt_example():
    # (x1^6,x2^6)(x1^7,x2^7,x3^7), the running 3-variable example
    return ideal_product(
        ideal(3, {1: 6}, {2: 6}), ideal(3, {1: 7}, {2: 7}, {3: 7})
    )


SBT_GENS = [
    {1: 13},
    {1: 6, 2: 7},
    {1: 7, 2: 6},
    {2: 13},
    {1: 6, 3: 7},
    {2: 6, 3: 7},
]


def test_minimalize():
    assert ideal(1, {1: 6}, {1: 13}) == ideal(1, {1: 6})
    assert ideal(2, {}, {1: 1}) == MonomialIdeal.unit(2)
    assert sbt_example() == ideal(3, *SBT_GENS)
    assert len(sbt_example().generators) == 6


def test_minimalize_membership_cross_check():
    # the minimalized product generates exactly the same degree-13 slice as
    # the raw pairwise products
    I = sbt_example()
    raw_products = [
        u * v
        for u in (mono(3, {1: 6}), mono(3, {2: 6}))
        for v in (mono(3, {1: 7}), mono(3, {2: 7}), mono(3, {3: 7}))
    ]
    for exps in iter_compositions(13, 3):
        u = Monomial(3, exps)
        assert contains(I, u) == any(g.divides(u) for g in raw_products)


def test_contains():
    assert contains(ideal(2, {1: 3}, {2: 2}), mono(2, {1: 2, 2: 2}))
    assert not contains(sbt_example(), mono(3, {1: 12, 2: 5, 3: 6}))
    assert not contains(MonomialIdeal.zero(2), mono(2, {1: 1}))


def test_sum_product_intersect():
    assert ideal_product(
        ideal(3, {1: 6}, {2: 6}), ideal(3, {1: 7}, {2: 7}, {3: 7})
    ) == ideal(3, *SBT_GENS)
    assert ideal_intersect(ideal(2, {1: 1}), ideal(2, {2: 1})) == ideal(
        2, {1: 1, 2: 1}
    )
    I = ideal(2, {1: 3}, {2: 2})
    assert ideal_sum(I, MonomialIdeal.zero(2)) == I
    with pytest.raises(AmbientMismatchError):
        ideal_sum(I, ideal(3, {1: 1}))


def test_colon_monomial():
    assert colon_monomial(ideal(2, {1: 3}, {2: 2}), mono(2, {2: 1})) == ideal(
        2, {1: 3}, {2: 1}
    )
    assert colon_monomial(ideal(2, {1: 6, 2: 7}), mono(2, {2: 7})) == ideal(
        2, {1: 6}
    )
    I = ideal(2, {1: 3}, {2: 2})
    assert colon_monomial(I, mono(2)) == I


def test_colon_ideal():
    assert colon_ideal(ideal(2, {1: 2}), irrelevant_ideal(2)) == ideal(2, {1: 2})
    assert colon_ideal(ideal(2, {1: 3}, {2: 2}), irrelevant_ideal(2)) == ideal(
        2, {1: 2, 2: 1}, {1: 3}, {2: 2}
    )
    unit = MonomialIdeal.unit(2)
    assert colon_ideal(unit, ideal(2, {1: 1})) == unit
    with pytest.raises(DomainError):
        colon_ideal(unit, MonomialIdeal.zero(2))


def test_saturate_variable():
    assert saturate_variable(sbt_example(), 3) == ideal(3, {1: 6}, {2: 6})
    assert saturate_variable(ideal(2, {1: 6}, {2: 6}), 2) == MonomialIdeal.unit(2)
    assert saturate_variable(ideal(2, {1: 3}), 2) == ideal(2, {1: 3})


def test_saturate_ideal():
    assert saturate_ideal(
        ideal(2, {1: 3}, {2: 2}), irrelevant_ideal(2)
    ) == MonomialIdeal.unit(2)
    assert saturate_ideal(
        ideal(2, {1: 6}, {2: 6}), irrelevant_ideal(2)
    ) == MonomialIdeal.unit(2)
    assert saturate_ideal(sbt_example(), irrelevant_ideal(3)) == ideal(
        3, {1: 6}, {2: 6}
    )
    with pytest.raises(DomainError):
        saturate_ideal(sbt_example(), MonomialIdeal.zero(3))


def test_saturate_ideal_fast_path_matches_iteration():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(2, 3)
        I = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n, 4) for _ in range(rng.randint(1, 4))]
        )
        for j in range(1, n + 1):
            P = irrelevant_ideal(n, j)
            current = I
            while True:
                nxt = colon_ideal(current, P)
                if nxt == current:
                    break
                current = nxt
            assert saturate_ideal(I, P) == current


def test_graded_slice():
    sl = graded_slice(ideal(2, {1: 1}), 1)
    assert sl.inside == (mono(2, {1: 1}),)
    assert sl.outside == (mono(2, {2: 1}),)
    sl = graded_slice(ideal(2, {1: 3}, {2: 2}), 3)
    assert set(sl.inside) == {mono(2, {1: 3}), mono(2, {1: 1, 2: 2}), mono(2, {2: 3})}
    assert set(sl.outside) == {mono(2, {1: 2, 2: 1})}
    assert graded_slice(MonomialIdeal.zero(2), 2).inside == ()


def test_truncate():
    assert truncate(ideal(2, {1: 1}), 2) == ideal(2, {1: 2}, {1: 1, 2: 1})
    assert truncate(ideal(2, {1: 3}, {2: 2}), 3) == ideal(
        2, {1: 3}, {1: 1, 2: 2}, {2: 3}
    )
    unit = MonomialIdeal.unit(2)
    assert truncate(unit, 0) == unit
    with pytest.raises(DomainError):
        truncate(ideal(2, {1: 3}), 2)


def test_is_stable():
    assert not is_stable(ideal(2, {1: 3}, {2: 2}))
    for k in range(1, 5):
        assert is_stable(ideal_power(irrelevant_ideal(3), k))
    assert is_stable(ideal(2, {1: 1}))


def test_constructors_are_canonical():
    from borelreg.ideals import row_ideal, segment_ideal

    assert irrelevant_ideal(3) == ideal(3, {1: 1}, {2: 1}, {3: 1})
    assert row_ideal(3, 2, 5) == ideal(3, {1: 5}, {2: 5})
    assert segment_ideal(4, 2, 3, 2) == ideal(4, {2: 2}, {3: 2})
    u = mono(2, {1: 2})
    assert MonomialIdeal.principal(u) == ideal(2, {1: 2})


def test_deg_and_m():
    assert deg_ideal(sbt_example()) == 13
    assert m_ideal(ideal(3, {1: 6}, {2: 6})) == 2
    assert m_ideal(sbt_example()) == 3
    with pytest.raises(DomainError):
        deg_ideal(MonomialIdeal.zero(2))
    with pytest.raises(DomainError):
        m_ideal(MonomialIdeal.unit(2))


def test_is_artinian():
    assert is_artinian(ideal(2, {1: 3}, {2: 2}))
    assert not is_artinian(ideal(3, {1: 6}, {2: 6}))
    assert not is_artinian(sbt_example())
    assert is_artinian(MonomialIdeal.unit(2))
    assert not is_artinian(MonomialIdeal.zero(2))


def test_s_quotient():
    J = ideal(2, {1: 6}, {2: 6})
    assert s_quotient(MonomialIdeal.unit(2), J) == 10
    I = sbt_example()
    Jsat = ideal(3, {1: 6}, {2: 6})
    assert s_quotient(Jsat, I) == 23
    # the top element is witnessed and the next degree is clean
    witness = mono(3, {1: 12, 2: 5, 3: 6})
    assert contains(Jsat, witness) and not contains(I, witness)
    assert s_quotient(J, J) is None


def test_s_quotient_requires_containment():
    with pytest.raises(DomainError):
        s_quotient(ideal(2, {1: 2}), ideal(2, {2: 1}))


def test_s_quotient_detects_infinite_length():
    # (x1, x2^10) / (x1) has x2^k for every k >= 10
    with pytest.raises(BoundExceededError):
        s_quotient(ideal(2, {1: 1}, {2: 10}), ideal(2, {1: 1}))


def test_minimalize_matches_divisibility_oracle():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(2, 4)
        gens = [random_monomial(rng, n) for _ in range(rng.randint(1, 6))]
        I = MonomialIdeal.from_gens(n, gens)
        bound = max(g.degree for g in gens) + 2
        for _ in range(40):
            exps = tuple(rng.randint(0, bound // n + 1) for _ in range(n))
            u = Monomial(n, exps)
            assert contains(I, u) == any(g.divides(u) for g in gens)


def test_colon_composition_property():
    rng = random.Random(8)
    for _ in range(25):
        n = rng.randint(2, 4)
        I = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n) for _ in range(rng.randint(1, 5))]
        )
        v, w = random_monomial(rng, n, 3), random_monomial(rng, n, 3)
        Iv = colon_monomial(I, v)
        assert all(contains(Iv, g) for g in I.generators)
        assert colon_monomial(Iv, w) == colon_monomial(I, v * w)


def test_saturate_variable_is_colon_fixed_point():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(2, 4)
        I = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n) for _ in range(rng.randint(1, 5))]
        )
        j = rng.randint(1, n)
        x_j = Monomial.variable(j, n)
        current = I
        while True:
            nxt = colon_monomial(current, x_j)
            if nxt == current:
                break
            current = nxt
        assert saturate_variable(I, j) == current


def test_product_intersect_sum_lattice():
    rng = random.Random(10)
    for _ in range(20):
        n = rng.randint(2, 3)
        I = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n, 4) for _ in range(rng.randint(1, 4))]
        )
        J = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n, 4) for _ in range(rng.randint(1, 4))]
        )
        P, X, S = ideal_product(I, J), ideal_intersect(I, J), ideal_sum(I, J)
        for g in P.generators:
            assert contains(X, g)
        for g in X.generators:
            assert contains(I, g) and contains(J, g)
        for _ in range(20):
            u = random_monomial(rng, n, 6)
            assert contains(S, u) == (contains(I, u) or contains(J, u))


def test_generator_stability_matches_exhaustive():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 3)
        I = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n, 4) for _ in range(rng.randint(1, 4))]
        )
        assert is_stable(I) == exhaustive_stable_check(I, 2).ok


def test_truncation_preserves_slices():
    rng = random.Random(12)
    for _ in range(15):
        n = rng.randint(2, 3)
        I = MonomialIdeal.from_gens(
            n, [random_monomial(rng, n, 4) for _ in range(rng.randint(1, 4))]
        )
        e = deg_ideal(I) + rng.randint(0, 2)
        assert set(graded_slice(truncate(I, e), e).inside) == set(
            graded_slice(I, e).inside
        )
