#! /usr/bin/env python3
"""Shortest feedback shift register of a short sequence over Z_5, step by step."""

from fsrsynth import Modulus, analyze, enumerate_shortest_feedback, synthesize


# =============================================================================
# Over a prime field the engine keeps two rows [g1, g2].  After reading
# S_1..S_k every row satisfies g1 + g2*S(x) = 0 mod x^(k+1), and the second
# component of row 2 is a shortest feedback polynomial of the prefix.

Z5 = Modulus(5)
S = [4, 0, 4, 4, 2]

final, traces = synthesize(S, Z5)

# Each trace records the discrepancies, which rows were active and the pivot.

for t in traces:
    print(f"k={t.k}  delta={t.delta}  pivot={t.pivots[0]}")
print()
for i, row in enumerate(final.rows, 1):
    print(f"row {i}: {row}")

# =============================================================================
# The complexity is the degree of row 2 and its second component is a
# feedback polynomial with constant term 1.

report = analyze(final)
print("\ncomplexity:", report.complexity_L)
print("feedback polynomial:", report.feedback_poly)
assert str(report.feedback_poly) == "3x^2+4x+1"

# The register is not unique.  All shortest ones have the form
# a*g22 + b*g12 with a != 0 and deg b <= L - deg(row 1): here b is a scalar.

all_fb = enumerate_shortest_feedback(report, normalized=True)
print(f"{len(all_fb)} normalized shortest feedback polynomials:")
for f in all_fb:
    print("   ", f)

# Running the register forward reproduces the sequence: with
# lambda = 1 + 4x + 3x^2 each symbol after the first L is
# S_k = -(4 S_{k-1} + 3 S_{k-2}) mod 5.

lam = report.feedback_poly.coeffs + (0,) * 4
L = report.complexity_L
for k in range(L, len(S)):
    pred = -sum(lam[i] * S[k - i] for i in range(1, L + 1)) % 5
    assert pred == S[k]
print("\nregister regenerates", S)
