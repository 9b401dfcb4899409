"""Vectorized kernels for the set-heavy inner loops.

Everything here is plain exponent arithmetic on integer matrices; one row
per monomial, one column per variable.  The semantics are identical to the
scalar code paths in :mod:`borelreg.ideals`, these exist purely so that
large graded slices and breadth-first layers stay fast.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

DTYPE = np.int64

# Keep candidate x generator comparison blocks below ~4M cells.
_CHUNK = 1 << 22


def matrix(rows: Iterable[Sequence[int]], ambient: int) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return np.empty((0, ambient), dtype=DTYPE)
    return np.array(rows, dtype=DTYPE)


def divisible_any(cands: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Boolean mask: row i is componentwise >= some row of ``gens``."""
    k = len(cands)
    out = np.zeros(k, dtype=bool)
    if k == 0 or len(gens) == 0:
        return out
    n = cands.shape[1]
    # chunk over candidates so cand-block x gens stays bounded
    step = max(1, _CHUNK // (max(1, len(gens)) * n))
    for lo in range(0, k, step):
        block = cands[lo : lo + step]
        hit = np.zeros(len(block), dtype=bool)
        for g in gens:
            todo = ~hit
            if not todo.any():
                break
            hit[todo] = (block[todo] >= g).all(axis=1)
        out[lo : lo + step] = hit
    return out


def antichain(cands: np.ndarray) -> np.ndarray:
    """Rows minimal under componentwise <=, sorted by (degree, lex)."""
    if len(cands) == 0:
        return cands
    cands = np.unique(cands, axis=0)
    degs = cands.sum(axis=1)
    order = np.lexsort(tuple(cands[:, j] for j in range(cands.shape[1] - 1, -1, -1)))
    order = order[np.argsort(degs[order], kind="stable")]
    cands = cands[order]
    degs = degs[order]
    kept: list[np.ndarray] = []
    # process one degree at a time: equal-degree distinct rows never divide
    # each other, so only previously kept (lower degree) rows matter
    for d in np.unique(degs):
        block = cands[degs == d]
        if kept:
            survivors = block[~divisible_any(block, np.vstack(kept))]
        else:
            survivors = block
        if len(survivors):
            kept.append(survivors)
    return np.vstack(kept) if kept else cands[:0]


def pairwise_lcm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """All componentwise maxima of one row from ``a`` and one from ``b``."""
    if len(a) == 0 or len(b) == 0:
        return a[:0]
    n = a.shape[1]
    out_blocks = []
    step = max(1, _CHUNK // (max(1, len(b)) * n))
    for lo in range(0, len(a), step):
        block = a[lo : lo + step]
        out_blocks.append(
            np.maximum(block[:, None, :], b[None, :, :]).reshape(-1, n)
        )
    return np.vstack(out_blocks)


def expand_by_variables(layer: np.ndarray) -> np.ndarray:
    """For each row u and each variable i, the row of ``u * x_i``.

    Output has shape (k * n, n), grouped by source row.
    """
    k, n = layer.shape
    out = np.repeat(layer, n, axis=0)
    out[np.arange(k * n), np.tile(np.arange(n), k)] += 1
    return out
