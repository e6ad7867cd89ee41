from hypothesis import given, settings
from hypothesis import strategies as st

from fsrsynth import (
    Modulus,
    Mode,
    analyze,
    complexity_profile,
    enumerate_min_char_reciprocal,
    enumerate_shortest_feedback,
    invariant_violations,
    oracle_complexity_profile,
    oracle_min_char,
    oracle_shortest_feedback,
    states,
    synthesize,
)

SMALL = [Modulus(2), Modulus(3), Modulus(2, 2), Modulus(5), Modulus(2, 3), Modulus(3, 2)]


@st.composite
def sequences(draw, moduli=SMALL, max_len=6):
    m = draw(st.sampled_from(moduli))
    n = max_len if m.q <= 4 else max_len - 2
    S = draw(st.lists(st.integers(0, m.q - 1), max_size=n))
    return m, S


@settings(max_examples=150, deadline=None)
@given(sequences())
def test_engine_matches_oracle_beyond_the_sweeps(case):
    m, S = case
    rep = analyze(synthesize(S, m, keep_trace=False)[0])
    brute = oracle_shortest_feedback(S, m, normalized=True)
    assert rep.complexity_L == brute.complexity
    assert enumerate_shortest_feedback(rep, normalized=True) == brute.solutions
    rev = oracle_min_char(S[::-1], m, monic=True)
    assert rep.reciprocal_complexity == rev.complexity
    assert enumerate_min_char_reciprocal(rep, monic=True) == rev.solutions


@settings(max_examples=80, deadline=None)
@given(sequences(max_len=7))
def test_profile_matches_oracle(case):
    m, S = case
    assert complexity_profile(S, m) == oracle_complexity_profile(S, m)


@settings(max_examples=100, deadline=None)
@given(sequences(moduli=[Modulus(2, 4), Modulus(5, 2), Modulus(7), Modulus(3, 3)], max_len=25))
def test_invariants_on_long_sequences(case):
    m, S = case
    for state in states(S, m):
        assert invariant_violations(state) == []


@settings(max_examples=100, deadline=None)
@given(sequences(moduli=[Modulus(2), Modulus(3), Modulus(7)], max_len=15))
def test_bm_compat_finds_the_same_complexity(case):
    m, S = case
    a = synthesize(S, m, Mode.BM_COMPAT_FIELD, keep_trace=False)[0]
    b = synthesize(S, m, Mode.GROBNER_FIELD, keep_trace=False)[0]
    assert a.complexity == b.complexity


@settings(max_examples=100, deadline=None)
@given(sequences(max_len=12))
def test_complexity_bounds(case):
    m, S = case
    prof = complexity_profile(S, m)
    assert all(a <= b for a, b in zip(prof, prof[1:]))
    assert all(0 <= L <= k for k, L in enumerate(prof, 1))
