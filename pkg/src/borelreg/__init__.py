"""Monomial ideal regularity for Borel-type and d-fixed classes.

Closed-form regularity paths (sequential chains, stable truncations, chi
tables) live next to independent brute-force enumerations, and the command
line surface reports both together with their agreement status.
"""

from .dseq import DDecomposition, DSequence, d_decompose, leq_d, lt_d
from .errors import (
    AmbientMismatchError,
    BoundExceededError,
    DomainError,
    ParseError,
)
from .ideals import (
    GradedSlice,
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
    m_ideal,
    minimalize,
    row_ideal,
    s_quotient,
    saturate_ideal,
    saturate_variable,
    segment_ideal,
    truncate,
    with_ambient,
)
from .monomials import Monomial

__all__ = [
    "AmbientMismatchError",
    "BoundExceededError",
    "DDecomposition",
    "DSequence",
    "DomainError",
    "GradedSlice",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "colon_ideal",
    "colon_monomial",
    "contains",
    "d_decompose",
    "deg_ideal",
    "graded_slice",
    "ideal_intersect",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "irrelevant_ideal",
    "is_artinian",
    "is_stable",
    "leq_d",
    "lt_d",
    "m_ideal",
    "minimalize",
    "row_ideal",
    "s_quotient",
    "saturate_ideal",
    "saturate_variable",
    "segment_ideal",
    "truncate",
    "with_ambient",
]

__version__ = "0.1.0"
