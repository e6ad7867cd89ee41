"""Reading shortest registers and their parametrisations off a finished synthesis.

For the forward sequence the pivot is row 2 (field) or row r+1 (ring); its
second component is a shortest feedback polynomial and its degree is the
complexity L.  Every shortest feedback polynomial is

    a * pivot_2 + sum_j a_j(x) * v_j2,   a a nonzero digit, deg a_j <= L - deg v_j,

with digit-valued coefficients (the digits are the whole field when r = 1).
The reciprocal sequence S_N..S_1 is handled the same way with the unique row
of leading position 2 and full order as pivot.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _enum
from .errors import InvariantError, ModeMismatchError, TruncationError
from .poly import Poly, leading_data
from .ring import Modulus
from .synthesis import Mode, SynthState, states

DEFAULT_CAP = 10**6


class CoefficientDomain(enum.Enum):
    FULL_FIELD = "field"
    DIGITS = "digits"


@dataclass(frozen=True)
class FreeTerm:
    row: int  # 1-based row index in R
    poly: Poly  # second component of that row
    degree_bound: int  # -1: the row contributes nothing
    domain: CoefficientDomain


@dataclass(frozen=True)
class ParamDescriptor:
    """All combinations ``a * pivot_poly + sum a_j(x) * term.poly``."""

    modulus: Modulus
    pivot_row: int
    pivot_poly: Poly
    free_terms: tuple[FreeTerm, ...]
    scalar_domain: tuple[int, ...]
    target_degree: int

    def domains(self) -> list[tuple[int, ...]]:
        """Value list per parameter slot: the pivot scalar, then a_j coefficients low to high."""
        out = [self.scalar_domain]
        for t in self.free_terms:
            vals = tuple(range(self.modulus.q if t.domain is CoefficientDomain.FULL_FIELD else self.modulus.p))
            out.extend([vals] * (t.degree_bound + 1))
        return out

    def generators(self) -> list[Poly]:
        gens = [self.pivot_poly]
        for t in self.free_terms:
            gens.extend(t.poly.shift(e) for e in range(t.degree_bound + 1))
        return gens


@dataclass(frozen=True)
class SynthesisReport:
    modulus: Modulus
    mode: Mode
    sequence: tuple[int, ...]
    complexity_L: int
    feedback_poly: Poly
    param_forward: ParamDescriptor
    reciprocal_complexity: int
    min_char_poly: Poly
    param_reciprocal: ParamDescriptor
    reciprocal_pivot: int  # 1-based j*
    bidirectional_pivot: bool
    count_forward: int
    count_reciprocal: int


def _descriptor(state: SynthState, pivot: int, target: int) -> ParamDescriptor:
    m = state.modulus
    domain = CoefficientDomain.FULL_FIELD if state.mode.is_field_engine else CoefficientDomain.DIGITS
    terms = tuple(
        FreeTerm(i + 1, v.g2, max(-1, target - int(v.degree)), domain)
        for i, v in enumerate(state.rows)
        if i != pivot
    )
    return ParamDescriptor(m, pivot + 1, state.rows[pivot].g2, terms, tuple(range(1, m.p)), target)


def analyze(state: SynthState) -> SynthesisReport:
    """Complexity, shortest feedback polynomial and both parametrisations."""
    if state.mode is Mode.BM_COMPAT_FIELD:
        raise ModeMismatchError("parametrisation needs a Groebner-mode synthesis")
    m = state.modulus
    rows = state.rows
    piv = state.pivot_index
    L = int(rows[piv].degree)
    lead = [leading_data(v) for v in rows]
    full = [i for i, ld in enumerate(lead) if ld.lpos == 2 and ld.ord == m.r]
    if len(full) != 1:
        raise InvariantError(f"expected one row of leading position 2 and order {m.r}, found {len(full)}")
    jstar = full[0]
    L_rec = int(rows[jstar].degree)
    fwd = _descriptor(state, piv, L)
    rec = _descriptor(state, jstar, L_rec)
    return SynthesisReport(
        modulus=m,
        mode=state.mode,
        sequence=state.sequence,
        complexity_L=L,
        feedback_poly=rows[piv].g2,
        param_forward=fwd,
        reciprocal_complexity=L_rec,
        min_char_poly=rows[jstar].g2,
        param_reciprocal=rec,
        reciprocal_pivot=jstar + 1,
        bidirectional_pivot=jstar == piv,
        count_forward=count_parametrization(fwd),
        count_reciprocal=count_parametrization(rec),
    )


def count_parametrization(descriptor: ParamDescriptor) -> int:
    """Number of admissible parameter tuples (before any deduplication)."""
    return _enum.tuple_count(descriptor.domains())


def raw_enumeration(descriptor: ParamDescriptor, cap: int = DEFAULT_CAP) -> tuple[np.ndarray, int]:
    """Coefficient rows of the first ``cap`` combinations, in parameter order, and the full count.

    Nothing is deduplicated, so collisions between parameter tuples stay visible.
    """
    q = descriptor.modulus.q
    domains = descriptor.domains()
    total = _enum.tuple_count(domains)
    gens = descriptor.generators()
    width = max(1, max(len(g) for g in gens))
    G = _enum.poly_matrix([g.coeffs for g in gens], width)
    blocks = [(B @ G) % q for B in _enum.iter_blocks(domains, limit=cap)]
    arr = np.concatenate(blocks) if blocks else np.zeros((0, width), dtype=np.int64)
    return arr, total


def _scale_rows(arr: np.ndarray, col: np.ndarray, modulus: Modulus) -> np.ndarray:
    q = modulus.q
    inv = np.zeros(q, dtype=np.int64)
    for u in modulus.units():
        inv[u] = pow(u, -1, q)
    if not np.all(inv[col]):
        raise InvariantError("normalising coefficient is not a unit")
    return (arr * inv[col][:, None]) % q


def _to_polys(arr: np.ndarray, modulus: Modulus) -> tuple[Poly, ...]:
    uniq = {tuple(row) for row in arr.tolist()}
    return tuple(sorted((Poly(c, modulus) for c in uniq), key=Poly.sort_key))


def _enumerate(descriptor: ParamDescriptor, normalize_col: Optional[int], cap: int) -> tuple[Poly, ...]:
    arr, total = raw_enumeration(descriptor, cap)
    if normalize_col is not None and len(arr):
        arr = _scale_rows(arr, arr[:, normalize_col], descriptor.modulus)
    polys = _to_polys(arr, descriptor.modulus)
    if total > cap:
        raise TruncationError(total, cap, polys)
    return polys


def enumerate_shortest_feedback(
    report: SynthesisReport, normalized: bool = False, cap: int = DEFAULT_CAP
) -> tuple[Poly, ...]:
    """All shortest feedback polynomials, deduplicated, in canonical order.

    ``normalized`` scales each one to constant term 1.  Raises
    :class:`TruncationError` (carrying the partial result) beyond ``cap`` tuples.
    """
    return _enumerate(report.param_forward, 0 if normalized else None, cap)


def enumerate_min_char_reciprocal(
    report: SynthesisReport, monic: bool = False, cap: int = DEFAULT_CAP
) -> tuple[Poly, ...]:
    """All minimal characteristic polynomials of the reversed sequence."""
    return _enumerate(report.param_reciprocal, report.reciprocal_complexity if monic else None, cap)


def bidirectional_filter(polys: Sequence[Poly], constant_one: bool = False) -> tuple[Poly, ...]:
    """Keep the polynomials whose constant term is a unit (or exactly 1)."""
    if constant_one:
        return tuple(f for f in polys if f.constant_term == 1)
    return tuple(f for f in polys if f.modulus.is_unit(f.constant_term))


def normalize_constant(f: Poly) -> Poly:
    """Scale so that f(0) = 1."""
    return f * f.modulus.inverse(f.constant_term)


def make_monic(f: Poly) -> Poly:
    return f * f.modulus.inverse(f.leading_coefficient)


def complexity_profile(S: Sequence[int], modulus: Modulus, mode: Optional[Mode] = None) -> list[int]:
    """Complexity of every prefix S_1..S_k, k = 1..N."""
    return [st.complexity for st in states(S, modulus, mode)[1:]]
