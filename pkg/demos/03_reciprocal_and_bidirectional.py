#! /usr/bin/env python3
"""Reading the reversed sequence off the same synthesis, and bidirectional registers."""

from fsrsynth import Modulus, analyze, bidirectional_filter, enumerate_min_char_reciprocal, synthesize


def show(S, m):
    rep = analyze(synthesize(S, m)[0])
    print(f"S = {S} over {m}")
    print(f"  forward complexity {rep.complexity_L}, reversed complexity {rep.reciprocal_complexity}")
    print(f"  minimal characteristic polynomial of the reversal: {rep.min_char_poly} (row {rep.reciprocal_pivot})")
    fam = enumerate_min_char_reciprocal(rep, monic=True)
    print(f"  {len(fam)} monic minimal characteristic polynomials")
    both = bidirectional_filter(fam, constant_one=True)
    print("  usable in both directions:", [str(f) for f in both] or "none")
    return rep, fam


# =============================================================================
# A characteristic polynomial of degree L with a unit constant term can be
# reversed into a feedback polynomial of the same length: the register then
# runs both ways.  The synthesis already contains the reversed problem; its
# pivot is the row with leading position 2 and full order.

show([4, 0, 4, 4, 2], Modulus(5))
print()
show([6, 3, 1, 5, 6], Modulus(3, 2))
print()

# =============================================================================
# The prefix 6,3,1 has the largest possible complexity 3, yet its reversal
# 1,3,6 only needs 2.  No minimal characteristic polynomial of 1,3,6 has a
# unit constant term, so no register of length 2 runs in both directions.

rep, fam = show([6, 3, 1], Modulus(3, 2))
assert rep.complexity_L == 3 and rep.reciprocal_complexity == 2
assert bidirectional_filter(fam) == ()
