"""Vectorised enumeration of combinations sum_s c_s * G_s over Z_q.

Shared by the parametrisation enumerators and the p-basis verification
predicates.  Coefficients c_s range over per-slot value lists; tuples are
produced in lexicographic order with slot 0 most significant.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

CHUNK = 1 << 16


def poly_matrix(coeff_lists: Sequence[Sequence[int]], width: int) -> np.ndarray:
    out = np.zeros((len(coeff_lists), width), dtype=np.int64)
    for i, c in enumerate(coeff_lists):
        out[i, : len(c)] = c
    return out


def tuple_count(domains: Sequence[Sequence[int]]) -> int:
    n = 1
    for d in domains:
        n *= len(d)
    return n


def parameter_block(domains: Sequence[Sequence[int]], start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the lexicographic product of ``domains``."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, len(domains)), dtype=np.int64)
    for s in range(len(domains) - 1, -1, -1):
        vals = np.asarray(domains[s], dtype=np.int64)
        idx, rem = np.divmod(idx, len(vals))
        out[:, s] = vals[rem]
    return out


def iter_blocks(domains: Sequence[Sequence[int]], limit: int | None = None, chunk: int = CHUNK):
    """Yield parameter blocks covering the first ``limit`` tuples (all by default)."""
    total = tuple_count(domains)
    if limit is not None:
        total = min(total, limit)
    for start in range(0, total, chunk):
        yield parameter_block(domains, start, min(start + chunk, total))


def top_index(arr: np.ndarray) -> np.ndarray:
    """Index of the highest nonzero entry along the last axis; -1 for all-zero rows."""
    nz = arr != 0
    width = arr.shape[-1]
    last = width - 1 - np.argmax(nz[..., ::-1], axis=-1)
    return np.where(nz.any(axis=-1), last, -1)
