#! /usr/bin/env python3
"""Synthesis over Z_9, where discrepancies are split by their 3-adic level."""

from fsrsynth import Modulus, analyze, enumerate_shortest_feedback, normalize_constant, synthesize


# =============================================================================
# Over Z_{p^r} the engine keeps 2r rows.  A discrepancy d is written as
# theta * p^(l-1) with theta a unit; the rows are grouped by the level l and
# each level is processed with its own pivot.

Z9 = Modulus(3, 2)
S = [6, 3, 1, 5, 6]

print("Z_9 digits of 6:", Z9.p_adic_expansion(6), " decomposition:", Z9.unit_decompose(6))

final, traces = synthesize(S, Z9)
for t in traces:
    print(f"k={t.k}  delta={t.delta}  P0..P2={t.partitions}  pivots={t.pivots}")

print()
for i, row in enumerate(final.rows, 1):
    print(f"row {i}: {row}")

# =============================================================================
# Row r+1 = 3 carries a shortest feedback polynomial.

report = analyze(final)
fb = normalize_constant(report.feedback_poly)
print("\ncomplexity:", report.complexity_L)
print("feedback:", report.feedback_poly, " normalized:", fb)

# The parametrisation uses digit coefficients {0, 1, 2}.  Its 54 raw tuples
# collapse to 9 polynomials once every result is scaled to constant term 1.

desc = report.param_forward
print("\npivot row", desc.pivot_row, "scalars", desc.scalar_domain)
for t in desc.free_terms:
    print(f"  row {t.row}: {t.poly}  (degree bound {t.degree_bound})")
print("raw count:", report.count_forward)

family = enumerate_shortest_feedback(report, normalized=True)
for f in family:
    print("   ", f)

# One of them, x^3+7x^2+4x+1, is what a classical ring algorithm returns for
# this sequence; it sits at a = 1 in 7x^2+x+1 + a(x^3+3x).

assert str(fb) == "7x^2+x+1" and len(family) == 9
assert any(str(f) == "x^3+7x^2+4x+1" for f in family)
