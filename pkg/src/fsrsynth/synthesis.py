"""Iterative minimal-Groebner-basis synthesis of shortest feedback shift registers.

Three engines share the same row machinery:

* ``GROBNER_FIELD`` -- two rows over Z_p; pivot is the row of least leading
  monomial among rows with nonzero discrepancy.
* ``GROBNER_RING`` -- 2r rows over Z_{p^r}; discrepancies are split by their
  p-adic level and each level gets its own pivot.
* ``BM_COMPAT_FIELD`` -- the field engine with the Berlekamp-Massey pivot rule
  (largest index among rows of least degree).  Its rows need not form a
  minimal Groebner basis.

After processing S_1..S_k the rows of ``R^k`` generate the module of all
``[gamma, lambda]`` with gamma + lambda * S(x) = 0 mod x^{k+1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvariantError, ModeMismatchError
from .poly import TOP, ModuleSpec, Poly, PolyRowVec, discrepancy, leading_data, membership, monomial_key
from .ring import Modulus


class Mode(enum.Enum):
    GROBNER_FIELD = "field"
    GROBNER_RING = "ring"
    BM_COMPAT_FIELD = "bm-compat"

    @classmethod
    def auto(cls, modulus: Modulus) -> Mode:
        return cls.GROBNER_FIELD if modulus.is_field else cls.GROBNER_RING

    @property
    def is_field_engine(self) -> bool:
        return self is not Mode.GROBNER_RING


@dataclass(frozen=True)
class SynthState:
    """Rows of R^k after consuming ``sequence`` (= S_1..S_k)."""

    k: int
    rows: tuple[PolyRowVec, ...]
    modulus: Modulus
    mode: Mode
    sequence: tuple[int, ...] = ()

    @property
    def pivot_index(self) -> int:
        """0-based index of the row holding a shortest feedback polynomial."""
        return 1 if self.mode.is_field_engine else self.modulus.r

    @property
    def complexity(self) -> int:
        return int(self.rows[self.pivot_index].degree)

    def module_spec(self, reciprocal: bool = False) -> ModuleSpec:
        return ModuleSpec(self.sequence, self.modulus, reciprocal)


@dataclass(frozen=True)
class StepTrace:
    """Diagnostics of a single step k (indices are 1-based, as printed)."""

    k: int
    delta: tuple[int, ...]
    partitions: tuple[tuple[int, ...], ...]  # (P_0, P_1, ..., P_r)
    pivots: tuple[int, ...]  # (i*_1, ..., i*_r); field modes: (i*,)
    update: tuple[tuple[Poly, ...], ...]  # E^k
    thetas: tuple[int, ...] = field(default=(), repr=False)  # 0 where delta is 0
    levels: tuple[int, ...] = field(default=(), repr=False)  # 0 where delta is 0


def init_state(modulus: Modulus, mode: Optional[Mode] = None) -> SynthState:
    mode = Mode.auto(modulus) if mode is None else mode
    if mode.is_field_engine and not modulus.is_field:
        raise ModeMismatchError(f"{mode.value} mode requires a prime field, got {modulus}")
    m = modulus
    zero, one = Poly.zero(m), Poly.const(1, m)
    if mode.is_field_engine:
        rows = (PolyRowVec(Poly.monomial(1, 1, m), zero), PolyRowVec(zero, one))
    else:
        p, r = m.p, m.r
        rows = tuple(PolyRowVec(Poly.monomial(p**j, 1, m), zero) for j in range(r)) + tuple(
            PolyRowVec(zero, Poly.const(p**j, m)) for j in range(r)
        )
    return SynthState(0, rows, m, mode, ())


def _lm_key(row: PolyRowVec):
    return monomial_key(leading_data(row, TOP).lm, TOP)


def _identity_update(n: int, m: Modulus) -> list[list[Poly]]:
    zero = Poly.zero(m)
    return [[zero] * n for _ in range(n)]


def _field_step(state: SynthState, seq: Sequence[int]) -> tuple[tuple[PolyRowVec, ...], StepTrace]:
    m = state.modulus
    k = len(seq)
    g1, g2 = state.rows
    d1, d2 = discrepancy(g1, seq, k), discrepancy(g2, seq, k)
    if d1 != 1:
        raise InvariantError(f"step {k}: first-row discrepancy is {d1}, expected 1")
    active = [i for i, d in ((1, d1), (2, d2)) if d]
    if state.mode is Mode.BM_COMPAT_FIELD:
        least = min(state.rows[i - 1].degree for i in active)
        pivot = max(i for i in active if state.rows[i - 1].degree == least)
    else:
        pivot = min(active, key=lambda i: _lm_key(state.rows[i - 1]))
    delta = (d1, d2)
    scale = m.inverse(delta[pivot - 1])
    new1 = state.rows[pivot - 1].shift(1) * scale
    new2 = g1 * (-d2) + g2 * d1

    E = _identity_update(2, m)
    E[0][pivot - 1] = Poly.monomial(scale, 1, m)
    E[1][0] = Poly.const(-d2, m)
    E[1][1] = Poly.const(d1, m)
    trace = StepTrace(
        k=k,
        delta=delta,
        partitions=(tuple(i for i in (1, 2) if not delta[i - 1]), tuple(active)),
        pivots=(pivot,),
        update=tuple(map(tuple, E)),
        thetas=delta,
        levels=tuple(1 if d else 0 for d in delta),
    )
    return (new1, new2), trace


def _ring_step(state: SynthState, seq: Sequence[int]) -> tuple[tuple[PolyRowVec, ...], StepTrace]:
    m = state.modulus
    p, r = m.p, m.r
    k = len(seq)
    rows = state.rows
    n = 2 * r
    delta = tuple(discrepancy(v, seq, k) for v in rows)
    for j in range(r):
        if delta[j] != p**j:
            raise InvariantError(f"step {k}: discrepancy of row {j + 1} is {delta[j]}, expected {p**j}")
    thetas = [0] * n
    levels = [0] * n
    for i, d in enumerate(delta):
        if d:
            thetas[i], levels[i] = m.unit_decompose(d)
    parts = [[i + 1 for i in range(n) if levels[i] == j] for j in range(r + 1)]

    new = list(rows)
    E = _identity_update(n, m)
    for i in parts[0]:
        E[i - 1][i - 1] = Poly.const(1, m)
    pivots = []
    for j in range(1, r + 1):
        part = parts[j]
        if j not in part:
            raise InvariantError(f"step {k}: row {j} missing from level {j}")
        least = min(_lm_key(rows[i - 1]) for i in part)
        piv = max(i for i in part if _lm_key(rows[i - 1]) == least)
        pivots.append(piv)
        th_piv, th_j = thetas[piv - 1], thetas[j - 1]
        scale = m.inverse(th_piv)
        new[j - 1] = rows[piv - 1].shift(1) * scale
        E[j - 1][piv - 1] = Poly.monomial(scale, 1, m)
        if piv != j:
            new[piv - 1] = rows[j - 1] * (-th_piv) + rows[piv - 1] * th_j
            E[piv - 1][j - 1] = Poly.const(-th_piv, m)
            E[piv - 1][piv - 1] = Poly.const(th_j, m)
        for i in part:
            if i in (j, piv):
                continue
            th_i = thetas[i - 1]
            new[i - 1] = rows[piv - 1] * (-th_i) + rows[i - 1] * th_piv
            E[i - 1][piv - 1] = Poly.const(-th_i, m)
            E[i - 1][i - 1] = Poly.const(th_piv, m)
    trace = StepTrace(
        k=k,
        delta=delta,
        partitions=tuple(tuple(pt) for pt in parts),
        pivots=tuple(pivots),
        update=tuple(map(tuple, E)),
        thetas=tuple(thetas),
        levels=tuple(levels),
    )
    return tuple(new), trace


def step(state: SynthState, s_k: int) -> tuple[SynthState, StepTrace]:
    """Consume the next symbol and return the updated state with its trace."""
    seq = state.sequence + (int(s_k) % state.modulus.q,)
    if state.mode.is_field_engine:
        rows, trace = _field_step(state, seq)
    else:
        rows, trace = _ring_step(state, seq)
    return SynthState(state.k + 1, rows, state.modulus, state.mode, seq), trace


def synthesize(
    S: Sequence[int],
    modulus: Modulus,
    mode: Optional[Mode] = None,
    keep_trace: bool = True,
    check: bool = False,
) -> tuple[SynthState, list[StepTrace]]:
    """Run the engine over S_1..S_N.

    With ``check=True`` every intermediate state is validated by
    :func:`invariant_violations` and an :class:`InvariantError` is raised on the
    first failure.
    """
    state = init_state(modulus, mode)
    traces = []
    for s in S:
        state, trace = step(state, s)
        if keep_trace:
            traces.append(trace)
        if check:
            bad = invariant_violations(state)
            if bad:
                raise InvariantError(f"step {state.k}: " + "; ".join(bad))
    return state, traces


def states(S: Sequence[int], modulus: Modulus, mode: Optional[Mode] = None) -> list[SynthState]:
    """All intermediate states R^0, ..., R^N."""
    state = init_state(modulus, mode)
    out = [state]
    for s in S:
        state, _ = step(state, s)
        out.append(state)
    return out


def apply_update(update: Sequence[Sequence[Poly]], rows: Sequence[PolyRowVec]) -> tuple[PolyRowVec, ...]:
    """Matrix product E(x) R(x), row by row."""
    m = rows[0].modulus
    out = []
    for erow in update:
        acc = PolyRowVec(Poly.zero(m), Poly.zero(m))
        for e, v in zip(erow, rows):
            if e:
                acc = acc + v * e
        out.append(acc)
    return tuple(out)


def invariant_violations(state: SynthState) -> list[str]:
    """Check the per-step invariant bundle of ``state``; empty list when all hold."""
    m = state.modulus
    k = state.k
    rows = state.rows
    bad: list[str] = []
    module = state.module_spec()
    for i, v in enumerate(rows, 1):
        if v.is_zero():
            return [f"row {i} is zero"]
        if not membership(v, module):
            bad.append(f"row {i} does not annihilate the prefix")
    # rows 1..r vanish at x = 0, so the next discrepancy ignores the next symbol
    probe = state.sequence + (0,)

    if state.mode.is_field_engine:
        g1, g2 = rows
        if g1.at_zero() != (0, 0) or g2.g2.constant_term != 1:
            bad.append("constant terms are not [0, 0] and [*, 1]")
        if discrepancy(g1, probe, k + 1) != 1:
            bad.append("next first-row discrepancy is not 1")
        if state.mode is Mode.GROBNER_FIELD:
            if g1.degree + g2.degree != k + 1:
                bad.append(f"degree sum {g1.degree + g2.degree} != {k + 1}")
            if leading_data(g1).lpos == leading_data(g2).lpos:
                bad.append("both rows share a leading position")
        return bad

    p, r = m.p, m.r
    lead = [leading_data(v) for v in rows]
    total = sum(int(v.degree) for v in rows)
    if total != r * (k + 1):
        bad.append(f"degree sum {total} != {r * (k + 1)}")
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if lead[a].lpos == lead[b].lpos and lead[a].ord == lead[b].ord:
                bad.append(f"rows {a + 1} and {b + 1} share leading position and order")
    for j in range(r):
        if discrepancy(rows[j], probe, k + 1) != p**j:
            bad.append(f"next discrepancy of row {j + 1} is not {p**j}")
        if rows[j].at_zero() != (0, 0):
            bad.append(f"row {j + 1} does not vanish at 0")
    for j in range(r, 2 * r):
        want = 2 * r - j
        if m.order(rows[j].g2.constant_term) != want:
            bad.append(f"row {j + 1} constant term has order != {want}")
    for j in range(r, 2 * r - 1):
        if monomial_key(lead[j].lm) < monomial_key(lead[j + 1].lm):
            bad.append(f"leading monomials increase from row {j + 1} to {j + 2}")
    return bad
