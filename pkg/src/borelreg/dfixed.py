"""d-fixed monomial ideals generated by powers of variables.

A monomial ideal I is d-fixed for a d-sequence d when for every monomial
u in I, every pair j < i and every ``t <=_d nu_i(u)`` the exchange
``u * x_j^t / x_i^t`` stays in I.  The smallest d-fixed ideal containing
``x_i^alpha`` has the closed form ``prod_t (x_1^{d_t},..,x_i^{d_t})^{a_t}``
over the d-decomposition ``alpha = sum a_t d_t``.

For an ideal generated by several variable powers ``x_{i_q}^{alpha_q}``
(normalized so both the indices and the exponents strictly increase), the
generators decompose block by block into gamma families, the socle top
degree is the sum of per-block chi values, and the regularity is that sum
plus one.  The chi recursion has two published variants of its branch
condition; both are implemented behind a switch and the enumeration oracle
adjudicates them in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterable, Literal

from .dseq import (
    DDecomposition,
    DSequence,
    d_decompose,
    dominated_values,
    leq_d,
    lt_d,
    recompose,
)
from .errors import DomainError
from .ideals import (
    MonomialIdeal,
    colon_ideal,
    contains,
    deg_ideal,
    ideal_power,
    ideal_product,
    ideal_sum,
    irrelevant_ideal,
    row_ideal,
    segment_ideal,
)
from .monomials import Monomial

__all__ = [
    "DSequence",
    "DDecomposition",
    "d_decompose",
    "leq_d",
    "lt_d",
    "VariablePowerSpec",
    "GammaFamily",
    "BlockStructure",
    "SocleWitnessReport",
    "is_d_fixed",
    "d_fixed_violation",
    "principal_d_fixed",
    "reg_principal_d_fixed",
    "socle_principal_d_fixed",
    "normalize_spec",
    "dfixed_from_powers",
    "gamma_families",
    "gamma_tuple_is_additive",
    "dfixed_decomposition",
    "dfixed_decomposition_pieces",
    "block_structure",
    "chi_sequence",
    "max_socle_degree",
    "reg_dfixed_powers",
    "socle_witness_ideal",
    "socle_witness_report",
]

# The chi recursion's branch condition compares the predecessor's top
# d-digit against a digit of the current generator.  The two published
# forms disagree about WHICH digit: "aligned" reads the current generator's
# digit at the predecessor's top position, "top" reads its own top digit.
# The enumeration oracle confirms "aligned" and refutes "top" (powers
# x1^8, x2^20 over the d-sequence 1|4|12 have socle top degree 22, while
# the "top" form predicts 18), so "aligned" is the default; "top" stays
# available so the audit grid can keep recording its failures.
BranchVariant = Literal["aligned", "top"]


def d_fixed_violation(
    I: MonomialIdeal, d: DSequence
) -> tuple[Monomial, int, int, int] | None:
    """First (u, j, i, t) among the minimal generators violating the
    d-fixed exchange condition, or None.  Generator-level checking
    suffices; the all-monomials checker in the oracle module guards the
    reduction in the property suite."""
    if I.is_zero:
        raise DomainError("classification of the zero ideal")
    for u in I.generators:
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
                        return (u, j, i, t)
    return None


def is_d_fixed(I: MonomialIdeal, d: DSequence) -> bool:
    return d_fixed_violation(I, d) is None


def principal_d_fixed(
    i: int, alpha: int, d: DSequence, ambient: int | None = None
) -> MonomialIdeal:
    """Smallest d-fixed ideal containing ``x_i^alpha``:
    ``prod_t (x_1^{d_t}, ..., x_i^{d_t})^{a_t}`` for the d-decomposition
    ``alpha = sum a_t d_t``."""
    if alpha <= 0:
        raise DomainError("exponent must be positive")
    n = i if ambient is None else ambient
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    coeffs = d_decompose(alpha, d).coefficients
    result = MonomialIdeal.unit(n)
    for t, a_t in enumerate(coeffs):
        if a_t:
            result = ideal_product(
                result, ideal_power(row_ideal(n, i, d.entries[t]), a_t)
            )
    return result


def reg_principal_d_fixed(n: int, alpha: int, d: DSequence) -> int:
    """Regularity of the principal d-fixed ideal of ``x_n^alpha`` in n
    variables.

    For n >= 2 the closed form is ``a_s * d_s + (n - 1)(d_s - 1)`` with s
    the top nonzero position of the d-decomposition.  The closed form does
    not specialize to one variable (there ``(x_1^alpha)`` plainly has
    regularity alpha but the formula collapses to ``a_s * d_s``), so n = 1
    is returned directly; the calibration grid in the test suite pins both
    branches against the socle enumeration.
    """
    if alpha <= 0:
        raise DomainError("exponent must be positive")
    if n == 1:
        return alpha
    dec = d_decompose(alpha, d)
    s = dec.top_nonzero
    assert s is not None
    return dec.coefficients[s] * d.entries[s] + (n - 1) * (d.entries[s] - 1)


def socle_principal_d_fixed(n: int, alpha: int, d: DSequence) -> MonomialIdeal:
    """The ideal J with ``Soc(S/I) = (J + I)/I`` for the principal d-fixed
    ideal I of ``x_n^alpha``:

        J = sum over t with a_t > 0 of
            (x_1 ... x_n)^{d_t - 1} (m^[d_t])^{a_t - 1} prod_{j>t} (m^[d_j])^{a_j}

    Summands with ``a_t = 0`` are omitted (their printed exponent a_t - 1
    would be negative).  As with the regularity closed form this requires
    n >= 2; for one variable the socle ideal is ``(x_1^{alpha - 1})``.
    """
    if alpha <= 0:
        raise DomainError("exponent must be positive")
    if n == 1:
        if alpha == 1:
            return MonomialIdeal.unit(1)
        return MonomialIdeal.principal(Monomial.variable(1, 1, alpha - 1))
    coeffs = d_decompose(alpha, d).coefficients
    terms: list[MonomialIdeal] = []
    for t, a_t in enumerate(coeffs):
        if a_t == 0:
            continue
        staircase = Monomial(n, (d.entries[t] - 1,) * n)
        term = ideal_product(
            MonomialIdeal.principal(staircase),
            ideal_power(row_ideal(n, n, d.entries[t]), a_t - 1),
        )
        for j in range(t + 1, len(coeffs)):
            if coeffs[j]:
                term = ideal_product(
                    term, ideal_power(row_ideal(n, n, d.entries[j]), coeffs[j])
                )
        terms.append(term)
    return reduce(ideal_sum, terms)


@dataclass(frozen=True)
class VariablePowerSpec:
    """Normalized input ``x_{i_1}^{alpha_1}, ..., x_{i_r}^{alpha_r}`` with
    ``i_1 < ... < i_r`` and ``alpha_1 < ... < alpha_r``, together with the
    d-decomposition of every exponent.  The ambient ring has ``i_r``
    variables."""

    ambient: int
    dseq: DSequence
    pairs: tuple[tuple[int, int], ...]
    coefficients: tuple[tuple[int, ...], ...]
    top_indices: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.pairs)

    def index(self, q: int) -> int:
        """i_q (1-based q; i_0 = 0)."""
        return 0 if q == 0 else self.pairs[q - 1][0]

    def exponent(self, q: int) -> int:
        return self.pairs[q - 1][1]

    def digits(self, q: int) -> tuple[int, ...]:
        return self.coefficients[q - 1]

    def top_index(self, q: int) -> int:
        return self.top_indices[q - 1]


def normalize_spec(pairs: Iterable[tuple[int, int]], d: DSequence) -> VariablePowerSpec:
    """Drop pairs made redundant by containment: ``x_j^alpha`` generates
    nothing new when some other pair (j', beta) has ``j <= j'`` and
    ``alpha >= beta``.  On exponent ties the pair with the larger variable
    index survives."""
    unique = sorted(set(pairs))
    for i, alpha in unique:
        if i < 1:
            raise ValueError(f"variable index {i} must be positive")
        if alpha < 1:
            raise DomainError(f"exponent {alpha} must be positive")
    kept = [
        (i, alpha)
        for i, alpha in unique
        if not any(
            (i2, a2) != (i, alpha) and i2 >= i and a2 <= alpha
            for i2, a2 in unique
        )
    ]
    if not kept:
        raise DomainError("no generators left after normalization")
    kept.sort()
    ambient = kept[-1][0]
    coefficients = tuple(d_decompose(alpha, d).coefficients for _, alpha in kept)
    tops = []
    for coeffs in coefficients:
        top = max((t for t, c in enumerate(coeffs) if c), default=None)
        assert top is not None
        tops.append(top)
    if any(a > b for a, b in zip(tops, tops[1:])):
        raise AssertionError("top indices must be nondecreasing")
    return VariablePowerSpec(
        ambient, d, tuple(kept), coefficients, tuple(tops)
    )


def dfixed_from_powers(spec: VariablePowerSpec) -> MonomialIdeal:
    """Smallest d-fixed ideal containing the normalized variable powers:
    the sum of the principal closed forms."""
    parts = [
        principal_d_fixed(i, alpha, spec.dseq, ambient=spec.ambient)
        for i, alpha in spec.pairs
    ]
    return reduce(ideal_sum, parts)


@dataclass(frozen=True)
class GammaFamily:
    """All tuples (gamma_1, ..., gamma_q) splitting alpha_q across the
    variable blocks: every gamma_e dominated by alpha_q, prefix sums below
    alpha_i for i < q and strictly dominated by alpha_q, total exactly
    alpha_q."""

    q: int
    tuples: tuple[tuple[int, ...], ...]


def gamma_families(spec: VariablePowerSpec, q: int) -> GammaFamily:
    if not 1 <= q <= spec.r:
        raise ValueError(f"block index {q} out of range 1..{spec.r}")
    d = spec.dseq
    alpha_q = spec.exponent(q)
    candidates = list(dominated_values(alpha_q, d))
    candidate_set = set(candidates)
    found: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], total: int):
        e = len(prefix)
        if e == q - 1:
            last = alpha_q - total
            if last >= 0 and last in candidate_set:
                found.append(prefix + (last,))
            return
        for gamma in candidates:
            nt = total + gamma
            if nt >= spec.exponent(e + 1):
                continue
            if not lt_d(nt, alpha_q, d):
                continue
            extend(prefix + (gamma,), nt)

    extend((), 0)
    return GammaFamily(q, tuple(sorted(found)))


def gamma_tuple_is_additive(
    spec: VariablePowerSpec, q: int, gammas: tuple[int, ...]
) -> bool:
    """Whether the blockwise d-digits of the tuple sum to the digits of
    alpha_q without carrying.  Generators of the ideal carry exactly as
    much digit-t mass as alpha_q does, so only additive tuples describe
    actual generators; the published splitting conditions also admit
    carrying tuples (for instance gamma = (1, 1, 7) for exponents 3, 8, 9
    over the d-sequence 1|2|6) whose block monomials fall outside the
    ideal."""
    d = spec.dseq
    sums = [0] * len(d.entries)
    for gamma in gammas:
        for t, c in enumerate(d_decompose(gamma, d).coefficients):
            sums[t] += c
    return tuple(sums) == spec.digits(q)


def _digit_splits(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _digit_splits(total - first, parts - 1):
            yield (first,) + rest


def _additive_matrices(spec: VariablePowerSpec, q: int):
    """Blockwise digit matrices: row e holds the d-digit masses of block e,
    columns sum to the digits of alpha_q, and every proper prefix of the
    block values stays below the matching earlier exponent."""
    d = spec.dseq
    digits = spec.digits(q)
    for combo in product(*(_digit_splits(a, q) for a in digits)):
        matrix = tuple(
            tuple(combo[t][e] for t in range(len(digits))) for e in range(q)
        )
        ok = True
        prefix = 0
        for i in range(1, q):
            prefix += recompose(matrix[i - 1], d)
            if prefix >= spec.exponent(i):
                ok = False
                break
        if ok:
            yield matrix


def _matrix_piece(
    spec: VariablePowerSpec, matrix: tuple[tuple[int, ...], ...]
) -> MonomialIdeal:
    d = spec.dseq
    result = MonomialIdeal.unit(spec.ambient)
    for e, row in enumerate(matrix, start=1):
        lo = spec.index(e - 1) + 1
        hi = spec.index(e)
        for t, mass in enumerate(row):
            if mass:
                result = ideal_product(
                    result,
                    ideal_power(
                        segment_ideal(spec.ambient, lo, hi, d.entries[t]), mass
                    ),
                )
    return result


def dfixed_decomposition_pieces(spec: VariablePowerSpec) -> list[MonomialIdeal]:
    """Per-q sums of blockwise splitting products.

    The splits are the digit-additive ones (see
    :func:`gamma_tuple_is_additive`): every digit of alpha_q is distributed
    across the variable blocks and prefixes are pruned when they reach an
    earlier exponent.  On inputs where the published splitting conditions
    only produce additive tuples, such as the worked five-variable example,
    this family coincides with :func:`gamma_families`.
    """
    pieces = []
    for q in range(1, spec.r + 1):
        piece = MonomialIdeal.zero(spec.ambient)
        for matrix in _additive_matrices(spec, q):
            piece = ideal_sum(piece, _matrix_piece(spec, matrix))
        pieces.append(piece)
    return pieces


def dfixed_decomposition(spec: VariablePowerSpec) -> MonomialIdeal:
    """The same ideal as :func:`dfixed_from_powers`, assembled from the
    blockwise splittings; canonical-form equality of the two routes is
    asserted by the test suite."""
    return reduce(ideal_sum, dfixed_decomposition_pieces(spec))


@dataclass(frozen=True)
class BlockStructure:
    """Grouping of the generators by equal top d-digit position.

    ``boundaries`` holds the last generator index q_j of every group,
    ``gaps`` the variable-count differences i_{q_j} - i_{q_{j-1}} (with
    i_{q_0} = 0), ``tags`` whether the chi value comes from the direct
    closed form (gap >= 2) or the consecutive-singleton recursion, and
    ``chi`` the per-group values themselves."""

    boundaries: tuple[int, ...]
    gaps: tuple[int, ...]
    tags: tuple[str, ...]
    chi: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.boundaries)


def _chi_direct(spec: VariablePowerSpec, q_j: int, q_prev: int) -> int:
    s = spec.top_index(q_j)
    d_s = spec.dseq.entries[s]
    width = spec.index(q_j) - spec.index(q_prev)
    return (d_s - 1) * width + d_s * (spec.digits(q_j)[s] - 1)


def _chi_run(
    spec: VariablePowerSpec,
    generators: list[int],
    chi_out: dict[int, int],
    variant: BranchVariant,
):
    """Assign chi for a maximal run of consecutive singleton blocks.

    ``generators`` are the 1-based generator indices of the run; the
    predecessor of the first one (a real generator, or a virtual zero-th
    with no digits at all) feeds the recursion.  Descends from the top of
    the run: when the predecessor's top digit exceeds the current
    generator's comparison digit the current block alone is assigned and
    the recursion steps down by one; otherwise the current and previous
    blocks are assigned together and it steps down by two.
    """
    d = spec.dseq
    q0 = generators[0]
    m = len(generators)
    while m >= 1:
        cur = q0 + m - 1
        prev = cur - 1
        s_cur = spec.top_index(cur)
        if prev >= 1:
            s_prev = spec.top_index(prev)
            prev_top = spec.digits(prev)[s_prev]
        else:
            s_prev = -1
            prev_top = 0
        if variant == "top":
            compare = spec.digits(cur)[s_cur]
        else:
            compare = spec.digits(cur)[s_prev] if prev >= 1 else 0
        tail = sum(
            spec.digits(cur)[t] * d.entries[t] for t in range(s_prev + 1, s_cur + 1)
        )
        if prev_top > compare:
            chi_out[cur] = tail - 1
            m -= 1
        else:
            head = 0
            if prev >= 1:
                head = (spec.digits(cur)[s_prev] - prev_top + 1) * d.entries[s_prev]
            chi_out[cur] = head + tail - 1
            if m >= 2:
                chi_out[prev] = prev_top * d.entries[s_prev] - 1
            m -= 2


def block_structure(
    spec: VariablePowerSpec, variant: BranchVariant = "aligned"
) -> BlockStructure:
    boundaries: list[int] = []
    for q in range(1, spec.r):
        if spec.top_index(q) != spec.top_index(q + 1):
            boundaries.append(q)
    boundaries.append(spec.r)
    gaps = []
    tags = []
    prev = 0
    for q_j in boundaries:
        gap = spec.index(q_j) - spec.index(prev)
        gaps.append(gap)
        tags.append("direct" if gap >= 2 else "recursive")
        prev = q_j
    chi_by_generator: dict[int, int] = {}
    j = 0
    while j < len(boundaries):
        if tags[j] == "direct":
            q_prev = boundaries[j - 1] if j > 0 else 0
            chi_by_generator[boundaries[j]] = _chi_direct(spec, boundaries[j], q_prev)
            j += 1
        else:
            run = [j]
            while j + 1 < len(boundaries) and tags[j + 1] == "recursive":
                j += 1
                run.append(j)
            _chi_run(
                spec, [boundaries[jj] for jj in run], chi_by_generator, variant
            )
            j += 1
    chi = tuple(chi_by_generator[q_j] for q_j in boundaries)
    return BlockStructure(tuple(boundaries), tuple(gaps), tuple(tags), chi)


def chi_sequence(
    spec: VariablePowerSpec, variant: BranchVariant = "aligned"
) -> tuple[int, ...]:
    return block_structure(spec, variant).chi


def max_socle_degree(
    spec: VariablePowerSpec, variant: BranchVariant = "aligned"
) -> int:
    """Predicted top degree of Soc(S/I): the sum of the chi values."""
    return sum(chi_sequence(spec, variant))


def reg_dfixed_powers(
    spec: VariablePowerSpec, variant: BranchVariant = "aligned"
) -> int:
    """Predicted regularity: the ideal is artinian (i_r equals the ambient
    variable count), so the regularity is the socle top degree plus one."""
    return max_socle_degree(spec, variant) + 1


@dataclass(frozen=True)
class SocleWitnessReport:
    """A witness ideal J for the socle top degree, with the three audits:
    J lands in (I : m), its generators avoid I, and its generator degree is
    the chi sum.  Failed audits become findings, not exceptions."""

    ideal: MonomialIdeal
    contained_in_colon: bool
    generators_avoid_ideal: bool
    degree_matches: bool
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.contained_in_colon
            and self.generators_avoid_ideal
            and self.degree_matches
        )


def socle_witness_report(
    spec: VariablePowerSpec, variant: BranchVariant = "aligned"
) -> SocleWitnessReport:
    structure = block_structure(spec, variant)
    d = spec.dseq
    factors: list[MonomialIdeal] = []
    for j, q_j in enumerate(structure.boundaries):
        q_prev = structure.boundaries[j - 1] if j > 0 else 0
        if structure.gaps[j] == 1:
            factors.append(
                MonomialIdeal.principal(
                    Monomial.variable(
                        spec.index(q_j), spec.ambient, structure.chi[j]
                    )
                )
            )
            continue
        s = spec.top_index(q_j)
        d_s = d.entries[s]
        lo = spec.index(q_prev) + 1
        hi = spec.index(q_j)
        staircase = Monomial.from_powers(
            spec.ambient, {i: d_s - 1 for i in range(lo, hi + 1)}
        )
        # per-segment summands; a generator with top digit 1 contributes
        # the unit ideal, which as printed would swallow the whole sum and
        # collapse the witness below the chi degree, so degenerate summands
        # are omitted unless every one of them is degenerate
        summands = []
        for e in range(q_prev + 1, q_j + 1):
            s_e = spec.top_index(e)
            if spec.digits(e)[s_e] - 1 == 0:
                continue
            summands.append(
                ideal_power(
                    segment_ideal(
                        spec.ambient, spec.index(e - 1) + 1, spec.index(e), d_s
                    ),
                    spec.digits(e)[s_e] - 1,
                )
            )
        inner = (
            reduce(ideal_sum, summands)
            if summands
            else MonomialIdeal.unit(spec.ambient)
        )
        factors.append(
            ideal_product(MonomialIdeal.principal(staircase), inner)
        )
    witness = reduce(ideal_product, factors)
    ideal = dfixed_from_powers(spec)
    socle_colon = colon_ideal(ideal, irrelevant_ideal(spec.ambient))
    notes: list[str] = []
    in_colon = all(contains(socle_colon, g) for g in witness.generators)
    if not in_colon:
        notes.append("witness ideal is not contained in (I : m)")
    avoids = not any(contains(ideal, g) for g in witness.generators)
    if not avoids:
        notes.append("a witness generator lies in the ideal itself")
    expected = max_socle_degree(spec, variant)
    matches = deg_ideal(witness) == expected
    if not matches:
        notes.append(
            f"witness degree {deg_ideal(witness)} differs from the chi sum {expected}"
        )
    return SocleWitnessReport(witness, in_colon, avoids, matches, tuple(notes))


def socle_witness_ideal(
    spec: VariablePowerSpec, variant: BranchVariant = "aligned"
) -> MonomialIdeal:
    return socle_witness_report(spec, variant).ideal
