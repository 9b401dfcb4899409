from math import comb

import pytest

from borelreg.dseq import (
    DSequence,
    d_decompose,
    dominated_values,
    leq_d,
    lt_d,
    recompose,
)


def test_decompose_examples():
    d = DSequence.parse("1|2|4|12")
    assert d_decompose(7, d).coefficients == (1, 1, 1, 0)
    assert d_decompose(17, d).coefficients == (1, 0, 1, 1)
    assert d_decompose(0, d).coefficients == (0, 0, 0, 0)
    assert d_decompose(10, d).coefficients == (0, 1, 2, 0)


def test_coefficient_bounds_hold():
    for text in ("1|2", "1|3|9", "1|2|4|12", "1|5|10"):
        d = DSequence.parse(text)
        ratios = [
            b // a for a, b in zip(d.entries, d.entries[1:])
        ]
        for a in range(201):
            coeffs = d_decompose(a, d).coefficients
            assert recompose(coeffs, d) == a
            for t, bound in enumerate(ratios):
                assert 0 <= coeffs[t] < bound


def test_validation():
    with pytest.raises(ValueError):
        DSequence((2, 4))
    with pytest.raises(ValueError):
        DSequence((1, 3, 5))
    with pytest.raises(ValueError):
        DSequence((1, 2, 2))
    with pytest.raises(ValueError):
        DSequence.parse("1|x")


def test_dominance_examples():
    d = DSequence.parse("1|2|4|12")
    assert leq_d(2, 10, d)
    assert leq_d(5, 5, d)
    assert not leq_d(3, 4, DSequence.parse("1|4"))


def test_dominance_partial_order():
    seqs = [DSequence.parse(t) for t in ("1|2|4", "1|3|6", "1|2|6|12")]
    for d in seqs:
        for a in range(61):
            for b in range(61):
                if leq_d(a, b, d) and leq_d(b, a, d):
                    assert a == b
        # transitivity on a thinned triple grid
        for a in range(0, 61, 3):
            for b in range(0, 61, 2):
                if not leq_d(a, b, d):
                    continue
                for c in range(b, 61):
                    if leq_d(b, c, d):
                        assert leq_d(a, c, d)


def test_lucas_correspondence():
    # digit dominance for d_t = p^t matches binomial nonvanishing mod p
    for p, text in ((2, "1|2|4|8|16|32|64|128"), (3, "1|3|9|27|81")):
        d = DSequence.parse(text)
        for b in range(65):
            for a in range(b + 1):
                assert leq_d(a, b, d) == (comb(b, a) % p != 0)


def test_dominated_values():
    d = DSequence.parse("1|2|4|12")
    values = list(dominated_values(10, d))
    assert values == [0, 2, 4, 6, 8, 10]
    assert values == sorted(t for t in range(11) if leq_d(t, 10, d))
    assert lt_d(2, 10, d) and not lt_d(10, 10, d)
