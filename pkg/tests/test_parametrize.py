import pytest

from conftest import Z5, Z5_SEQ, Z9, Z9_SEQ, polys, sweep_cases
from fsrsynth import (
    CoefficientDomain,
    InvariantError,
    Modulus,
    Mode,
    ModeMismatchError,
    Poly,
    TruncationError,
    analyze,
    bidirectional_filter,
    complexity_profile,
    count_parametrization,
    enumerate_min_char_reciprocal,
    enumerate_shortest_feedback,
    make_monic,
    normalize_constant,
    raw_enumeration,
    synthesize,
)


def report(S, m, mode=None):
    return analyze(synthesize(S, m, mode)[0])


def family(base, step, m):
    b, s = Poly.parse(base, m), Poly.parse(step, m)
    return {b + s * a for a in range(m.q)}


def feedback_holds(lam, S, L):
    q = lam.modulus.q
    c = list(lam.coeffs) + [0] * (L + 1 - len(lam.coeffs))
    return all(sum(c[i] * S[L + j - i - 1] for i in range(L + 1)) % q == 0 for j in range(1, len(S) - L + 1))


def test_field_example_report():
    rep = report(Z5_SEQ, Z5)
    assert rep.complexity_L == 3
    assert str(rep.feedback_poly) == "3x^2+4x+1"
    assert rep.reciprocal_complexity == 3
    assert str(rep.min_char_poly) == "x^3+x^2+4x"
    assert rep.count_forward == 20
    d = rep.param_forward
    assert d.pivot_row == 2 and d.scalar_domain == (1, 2, 3, 4)
    (term,) = d.free_terms
    assert term.row == 1 and term.degree_bound == 0 and term.domain is CoefficientDomain.FULL_FIELD


def test_ring_example_report():
    rep = report(Z9_SEQ, Z9)
    assert rep.complexity_L == 3
    assert str(rep.feedback_poly) == "4x^2+7x+7"
    assert str(normalize_constant(rep.feedback_poly)) == "7x^2+x+1"
    assert rep.reciprocal_complexity == 3
    assert str(rep.min_char_poly) == "x^3+3x"
    assert rep.reciprocal_pivot == 1 and not rep.bidirectional_pivot
    assert rep.count_forward == 54
    assert all(t.domain is CoefficientDomain.DIGITS for t in rep.param_forward.free_terms)


def test_ring_example_families():
    rep = report(Z9_SEQ, Z9)
    fwd = enumerate_shortest_feedback(rep, normalized=True)
    assert set(fwd) == family("7x^2+x+1", "x^3+3x", Z9)
    assert len(fwd) == 9
    assert Poly.parse("x^3+7x^2+4x+1", Z9) in fwd
    rec = enumerate_min_char_reciprocal(rep, monic=True)
    assert set(rec) == family("x^3+3x", "4x^2+7x+7", Z9)
    assert bidirectional_filter(rec, constant_one=True) == (Poly.parse("x^3+7x^2+4x+1", Z9),)
    assert len(enumerate_shortest_feedback(rep)) == 54


def test_prefix_example():
    rep = report((6, 3, 1), Z9)
    assert rep.complexity_L == 3
    assert rep.reciprocal_complexity == 2
    assert str(rep.min_char_poly) == "x^2+7x"
    rec = enumerate_min_char_reciprocal(rep, monic=True)
    assert set(rec) == family("x^2+7x", "8x+3", Z9)
    assert bidirectional_filter(rec) == ()
    fwd = enumerate_shortest_feedback(rep, normalized=True)
    assert rep.count_forward == 4374 and len(fwd) == 729


def test_field_bidirectional():
    rep = report(Z5_SEQ, Z5)
    rec = enumerate_min_char_reciprocal(rep, monic=True)
    assert bidirectional_filter(rec, constant_one=True) == (Poly.parse("x^3+4x^2+3x+1", Z5),)
    # any nonzero multiple of 3x^2+4x+1 added gives a unit constant term
    assert len(bidirectional_filter(rec)) == 4


def test_zero_sequence():
    for m in (Z5, Z9, Modulus(2)):
        rep = report((0, 0, 0), m)
        assert rep.complexity_L == 0
        assert enumerate_shortest_feedback(rep, normalized=True) == (Poly.const(1, m),)
        if m.is_field:
            assert rep.count_forward == m.p - 1
    assert complexity_profile((0,) * 5, Z9) == [0] * 5


def test_profiles():
    assert complexity_profile(Z9_SEQ, Z9) == [1, 1, 3, 3, 3]
    assert complexity_profile((6, 3, 1), Z9)[-1] == 3
    assert complexity_profile(Z5_SEQ, Z5)[-1] == 3


def test_enumerated_polynomials_satisfy_recursions():
    for S, m in ((Z5_SEQ, Z5), (Z9_SEQ, Z9), ((6, 3, 1), Z9), ((1, 0, 1, 1, 0, 1), Modulus(2))):
        rep = report(S, m)
        L, Lr = rep.complexity_L, rep.reciprocal_complexity
        for lam in enumerate_shortest_feedback(rep):
            assert m.is_unit(lam.constant_term) and lam.degree <= L
            assert feedback_holds(lam, S, L)
        for d in enumerate_min_char_reciprocal(rep):
            # reversing a characteristic polynomial of degree L gives the mirrored recursion
            assert d.degree == Lr and m.is_unit(d.leading_coefficient)
            rev = Poly(tuple(reversed(d.coeffs)), m)
            assert feedback_holds(rev, S[::-1], Lr)


def test_truncation_carries_partial_result():
    rep = report((6, 3, 1), Z9)
    with pytest.raises(TruncationError) as info:
        enumerate_shortest_feedback(rep, cap=100)
    err = info.value
    assert err.total == 4374 and err.cap == 100
    assert 0 < len(err.partial) <= 100


def test_raw_enumeration_is_injective_on_sweeps():
    for m, S in sweep_cases():
        rep = report(S, m)
        for desc in (rep.param_forward, rep.param_reciprocal):
            raw, total = raw_enumeration(desc)
            assert total == len(raw) == count_parametrization(desc)
            assert len({r.tobytes() for r in raw}) == total, (m, S)


def test_bm_compat_is_refused():
    st, _ = synthesize(Z5_SEQ, Z5, Mode.BM_COMPAT_FIELD)
    with pytest.raises(ModeMismatchError):
        analyze(st)


def test_missing_reciprocal_pivot_is_an_invariant_error():
    st, _ = synthesize(Z9_SEQ, Z9)
    rows = (st.rows[1],) * 4
    with pytest.raises(InvariantError):
        analyze(type(st)(st.k, rows, st.modulus, st.mode, st.sequence))


def test_scaling_helpers():
    f = Poly.parse("4x^2+7x+7", Z9)
    assert str(normalize_constant(f)) == "7x^2+x+1"
    assert str(make_monic(Poly.parse("2x^3+x", Z9))) == "x^3+5x"
    assert bidirectional_filter(polys(["x^2+3", "x^2+1", "x^2+2"], Z9), constant_one=True) == (
        Poly.parse("x^2+1", Z9),
    )
    assert len(bidirectional_filter(polys(["x^2+3", "x^2+1", "x^2+2"], Z9))) == 2
