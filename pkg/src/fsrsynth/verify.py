"""Verification predicates for the bases produced by the synthesis engines.

These are test oracles for small moduli and short sequences.  The p-PLM and
p-generator predicates each decide a question about every digit-coefficient
combination up to a degree bound.  Each has a literal ``"brute"`` method that
costs ``p ** ((bound + 1) * N)`` evaluations for N rows, and a default method
that answers the same question faster: leading-coefficient cancellation search
for p-PLM, meet-in-the-middle for p-generator representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _enum
from .errors import OrderingError
from .poly import TOP, MonomialOrder, Poly, PolyRowVec, leading_data, monomial_key
from .ring import Modulus


@dataclass(frozen=True)
class PBasis:
    """An ordered family of row vectors, intended as a p-generator sequence."""

    rows: tuple[PolyRowVec, ...]
    modulus: Modulus

    @classmethod
    def of(cls, rows: Sequence[PolyRowVec]) -> PBasis:
        rows = tuple(rows)
        return cls(rows, rows[0].modulus)

    def __len__(self) -> int:
        return len(self.rows)


def is_minimal_grobner_field(rows: Sequence[PolyRowVec], k: int, order: MonomialOrder = TOP) -> bool:
    """Two rows over a field form a minimal Groebner basis of the step-k module.

    Checks that the degrees add up to k + 1 (the module degree) and that the
    leading positions differ.  Membership of the rows is checked separately.
    """
    g1, g2 = rows
    if not g1.modulus.is_field:
        raise ValueError("is_minimal_grobner_field needs a prime field")
    if g1.is_zero() or g2.is_zero():
        return False
    l1, l2 = leading_data(g1, order), leading_data(g2, order)
    return l1.deg + l2.deg == k + 1 and l1.lpos != l2.lpos


def p_basis_order(rows: Sequence[PolyRowVec], order: MonomialOrder = TOP) -> tuple[PolyRowVec, ...]:
    """Sort rows by leading monomial, then order, both nonincreasing."""

    def key(v: PolyRowVec):
        ld = leading_data(v, order)
        return (monomial_key(ld.lm, order), ld.ord)

    return tuple(sorted(rows, key=key, reverse=True))


def _row_matrix(rows: Sequence[PolyRowVec], width: int, shifts: int) -> np.ndarray:
    """Flattened coefficients of x^t v_i, row-major in (i, t), shape (N*(shifts), 2*width)."""
    out = np.zeros((len(rows) * shifts, 2 * width), dtype=np.int64)
    for i, v in enumerate(rows):
        for t in range(shifts):
            out[i * shifts + t, t : t + len(v.g1)] = v.g1.coeffs
            out[i * shifts + t, width + t : width + t + len(v.g2)] = v.g2.coeffs
    return out


def _lm_keys(arr: np.ndarray, width: int, order: MonomialOrder) -> np.ndarray:
    """Integer keys ordering leading monomials as ``order`` does; -1 for zero rows."""
    d1 = _enum.top_index(arr[:, :width])
    d2 = _enum.top_index(arr[:, width:])
    if order is TOP:
        return np.maximum(np.where(d1 >= 0, 2 * d1, -1), np.where(d2 >= 0, 2 * d2 + 1, -1))
    return np.where(d2 >= 0, width + d2, d1)


def _digit_polys(m: Modulus, shifts: int) -> np.ndarray:
    """Every digit polynomial of degree < shifts, as coefficient rows (row 0 is zero)."""
    return _enum.parameter_block([m.digits()] * shifts, 0, m.p**shifts)


def _width(rows: Sequence[PolyRowVec], shifts: int) -> int:
    return max(max(len(v.g1), len(v.g2)) for v in rows) + shifts


def _key_column(key: int, width: int, order: MonomialOrder) -> int:
    if order is TOP:
        return key // 2 + (width if key % 2 else 0)
    return key


def _as_polys(flat: np.ndarray, n: int, shifts: int, m: Modulus) -> tuple[Poly, ...]:
    return tuple(Poly(tuple(int(c) for c in flat[i * shifts : (i + 1) * shifts]), m) for i in range(n))


def _p_plm_brute(basis: PBasis, shifts: int, order: MonomialOrder) -> Optional[tuple[Poly, ...]]:
    m = basis.modulus
    rows = basis.rows
    width = _width(rows, shifts)
    G = _row_matrix(rows, width, shifts)
    for B in _enum.iter_blocks([m.digits()] * (len(rows) * shifts)):
        got = _lm_keys((B @ G) % m.q, width, order)
        want = np.full(len(B), -1, dtype=np.int64)
        broken = np.zeros(len(B), dtype=bool)
        for i in range(len(rows)):
            sl = slice(i * shifts, (i + 1) * shifts)
            used = B[:, sl].any(axis=1)
            term = _lm_keys((B[:, sl] @ G[sl]) % m.q, width, order)
            broken |= used & (term < 0)
            want = np.where(used, np.maximum(want, term), want)
        bad = B.any(axis=1) & (broken | (got != want))
        if bad.any():
            return _as_polys(B[int(np.argmax(bad))], len(rows), shifts, m)
    return None


def _p_plm_leading(basis: PBasis, shifts: int, order: MonomialOrder) -> Optional[tuple[Poly, ...]]:
    # Each term a_i v_i has all its monomials <= lm(a_i v_i), so a tuple breaks the
    # equality exactly when the terms attaining the maximal monomial X cancel at X.
    # For every X, search the digit choices of the rows reaching X for such a cancellation.
    m = basis.modulus
    rows = basis.rows
    n = len(rows)
    width = _width(rows, shifts)
    A = _digit_polys(m, shifts)
    terms, keys = [], []
    for i in range(n):
        G = _row_matrix(rows[i : i + 1], width, shifts)
        T = (A @ G) % m.q
        K = _lm_keys(T, width, order)
        dead = np.flatnonzero((K < 0) & A.any(axis=1))
        if len(dead):
            flat = np.zeros(n * shifts, dtype=np.int64)
            flat[i * shifts : (i + 1) * shifts] = A[dead[0]]
            return _as_polys(flat, n, shifts, m)
        terms.append(T)
        keys.append(K)
    for X in sorted({int(k) for K in keys for k in K if k >= 0}):
        col = _key_column(X, width, order)
        # state (residue at X, some row reaches X) -> chosen digit-poly index per row
        reach: dict[tuple[int, bool], tuple[int, ...]] = {(0, False): ()}
        for i in range(n):
            hits = np.flatnonzero(keys[i] == X)
            nxt: dict[tuple[int, bool], tuple[int, ...]] = {}
            for (res, hit), picks in reach.items():
                nxt.setdefault((res, hit), picks + (0,))
                for a in hits:
                    state = ((res + int(terms[i][a, col])) % m.q, True)
                    nxt.setdefault(state, picks + (int(a),))
            reach = nxt
        if (0, True) in reach:
            flat = np.concatenate([A[a] for a in reach[(0, True)]])
            return _as_polys(flat, n, shifts, m)
    return None


def p_plm_counterexample(
    basis: PBasis, degree_bound: int, order: MonomialOrder = TOP, method: str = "leading"
) -> Optional[tuple[Poly, ...]]:
    """A digit-coefficient tuple violating the p-PLM equality, or None.

    A nonzero tuple (a_1, ..., a_N) with deg a_i <= degree_bound violates the
    property when lm(sum a_i v_i) differs from max lm(a_i v_i) over a_i != 0; a
    combination cancelling to zero counts as a violation.  ``method="brute"``
    evaluates all p**((bound+1)*N) tuples; ``"leading"`` decides the same
    question by searching leading-coefficient cancellations monomial by monomial.
    """
    shifts = degree_bound + 1
    if method == "brute":
        return _p_plm_brute(basis, shifts, order)
    if method == "leading":
        return _p_plm_leading(basis, shifts, order)
    raise ValueError(f"unknown method {method!r}")


def check_p_plm(basis: PBasis, degree_bound: int, order: MonomialOrder = TOP, method: str = "leading") -> bool:
    return p_plm_counterexample(basis, degree_bound, order, method) is None


def _packed(arr: np.ndarray) -> list[bytes]:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    return [r.tobytes() for r in arr]


def _represent(target: np.ndarray, G: np.ndarray, m: Modulus, slots: int, method: str) -> Optional[np.ndarray]:
    """Digit vector c with c @ G == target (mod q), or None."""
    domain = m.digits()
    if method == "brute":
        for B in _enum.iter_blocks([domain] * slots):
            hit = np.all((B @ G) % m.q == target, axis=1)
            if hit.any():
                return B[int(np.argmax(hit))]
        return None
    # meet in the middle: c = (left, right), left @ G_l == target - right @ G_r
    half = slots // 2
    Gl, Gr = G[:half], G[half:]
    left = _enum.parameter_block([domain] * half, 0, m.p**half)
    index: dict[bytes, int] = {}
    for j, key in enumerate(_packed((left @ Gl) % m.q)):
        index.setdefault(key, j)
    for R in _enum.iter_blocks([domain] * (slots - half)):
        need = (target[None, :] - R @ Gr) % m.q
        for j, key in enumerate(_packed(need)):
            if key in index:
                return np.concatenate([left[index[key]], R[j]])
    return None


def p_generator_witnesses(
    basis: PBasis, degree_bound: int, method: str = "meet"
) -> Optional[list[tuple[Poly, ...]]]:
    """Digit-coefficient tuples expressing p*v_i through v_{i+1}..v_N.

    Returns one tuple per row (the last is empty and certifies p*v_N = 0), or
    None when some p*v_i has no representation with degrees <= degree_bound.
    ``method`` is ``"meet"`` (meet-in-the-middle) or ``"brute"``; both search
    the full bounded space.
    """
    m = basis.modulus
    rows = basis.rows
    shifts = degree_bound + 1
    width = _width(rows, shifts)
    witnesses: list[tuple[Poly, ...]] = []
    for i, v in enumerate(rows):
        target = _row_matrix([v * m.p], width, 1)[0] % m.q
        suffix = rows[i + 1 :]
        if not suffix:
            if target.any():
                return None
            witnesses.append(())
            continue
        G = _row_matrix(suffix, width, shifts)
        found = _represent(target, G, m, len(suffix) * shifts, method)
        if found is None:
            return None
        witnesses.append(_as_polys(found, len(suffix), shifts, m))
    return witnesses


def check_p_generator_sequence(basis: PBasis, degree_bound: int, method: str = "meet") -> bool:
    return p_generator_witnesses(basis, degree_bound, method) is not None


def p_expand(rows: Sequence[PolyRowVec], order: MonomialOrder = TOP) -> PBasis:
    """Expand a minimal Groebner basis into a minimal Groebner p-basis.

    ``rows`` must be sorted by strictly decreasing leading monomial.  Row g_j
    is followed by p g_j, ..., p^(beta_j - 1) g_j where beta_j is ord(g_j)
    minus the order of the next row sharing its leading position (or ord(g_j)
    itself when there is none).
    """
    rows = tuple(rows)
    m = rows[0].modulus
    lead = [leading_data(v, order) for v in rows]
    keys = [monomial_key(ld.lm, order) for ld in lead]
    if any(a <= b for a, b in zip(keys, keys[1:])):
        raise OrderingError("rows must have strictly decreasing leading monomials")
    out = []
    for j, (v, ld) in enumerate(zip(rows, lead)):
        nxt = next((lead[i] for i in range(j + 1, len(rows)) if lead[i].lpos == ld.lpos), None)
        beta = ld.ord - nxt.ord if nxt is not None else ld.ord
        out.extend(v * m.p**e for e in range(beta))
    return PBasis(tuple(out), m)
