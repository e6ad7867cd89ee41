"""Brute-force reference answers, straight from the recurrence definitions.

Nothing here touches the synthesis engine.  For L = 0, 1, ... every candidate
polynomial is tested against the recurrence; the first L with solutions is the
answer.  The search at length L costs ``|units| * q**L`` candidates, so the
``guard`` argument bounds the total work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import OracleCostError
from .poly import Poly
from .ring import Modulus

DEFAULT_GUARD = 5 * 10**6


@dataclass(frozen=True)
class OracleResult:
    complexity: int
    solutions: tuple[Poly, ...]  # canonical order: degree, then coefficients


def _candidates(modulus: Modulus, L: int, unit_slot: int, fix_one: bool) -> np.ndarray:
    """All coefficient vectors of length L+1 whose ``unit_slot`` entry is a unit (or 1)."""
    units = np.array((1,) if fix_one else modulus.units(), dtype=np.int64)
    free = np.indices((modulus.q,) * L, dtype=np.int64).reshape(L, -1).T if L else np.zeros((1, 0), dtype=np.int64)
    out = np.empty((len(units) * len(free), L + 1), dtype=np.int64)
    others = [i for i in range(L + 1) if i != unit_slot]
    out[:, unit_slot] = np.repeat(units, len(free))
    out[:, others] = np.tile(free, (len(units), 1))
    return out


def _satisfies(cands: np.ndarray, S: Sequence[int], L: int, q: int, reverse: bool) -> np.ndarray:
    """Mask of candidates c with sum_i c_i S_{L+j-i} = 0 (feedback) or the mirrored sum."""
    N = len(S)
    if N - L <= 0:
        return np.ones(len(cands), dtype=bool)
    # H[j, i] = S_{L+j-i} for j = 1..N-L, i = 0..L  (1-based sequence indices)
    H = np.array([[S[L + j - i - 1] for i in range(L + 1)] for j in range(1, N - L + 1)], dtype=np.int64)
    if reverse:
        H = H[:, ::-1]
    return np.all((cands @ H.T) % q == 0, axis=1)


def _search(S, modulus: Modulus, normalized: bool, characteristic: bool, guard: int) -> OracleResult:
    q = modulus.q
    S = [int(s) % q for s in S]
    spent = 0
    for L in range(len(S) + 1):
        cost = (1 if normalized else len(modulus.units())) * q**L
        spent += cost
        if spent > guard:
            raise OracleCostError(f"search up to length {L} needs more than {guard} candidates")
        # feedback: lambda_0 unit, coefficients ascending lambda_0..lambda_L
        # characteristic: d_L unit, coefficients ascending d_0..d_L
        slot = L if characteristic else 0
        cands = _candidates(modulus, L, slot, normalized)
        # a characteristic d satisfies sum_i d_{L-i} S_{L+j-i}: reverse the column order
        ok = cands[_satisfies(cands, S, L, q, reverse=characteristic)]
        if len(ok):
            sols = sorted({Poly(tuple(c), modulus) for c in ok.tolist()}, key=Poly.sort_key)
            return OracleResult(L, tuple(sols))
    raise AssertionError("unreachable: length N always admits a solution")


def oracle_shortest_feedback(
    S: Sequence[int], modulus: Modulus, normalized: bool = False, guard: int = DEFAULT_GUARD
) -> OracleResult:
    """All shortest feedback polynomials of S; ``normalized`` fixes lambda(0) = 1."""
    return _search(S, modulus, normalized, characteristic=False, guard=guard)


def oracle_min_char(
    S: Sequence[int], modulus: Modulus, monic: bool = False, guard: int = DEFAULT_GUARD
) -> OracleResult:
    """All minimal characteristic polynomials of S; ``monic`` fixes the top coefficient to 1."""
    return _search(S, modulus, monic, characteristic=True, guard=guard)


def oracle_complexity_profile(S: Sequence[int], modulus: Modulus, guard: int = DEFAULT_GUARD) -> list[int]:
    return [oracle_shortest_feedback(S[:k], modulus, True, guard).complexity for k in range(1, len(S) + 1)]
