#! /usr/bin/env python3
"""Checking the engine against exhaustive search over all short sequences."""

import itertools
import time

from fsrsynth import Modulus, analyze, enumerate_shortest_feedback, oracle_shortest_feedback, synthesize


# =============================================================================
# The oracle tries every polynomial with a unit constant term, length by
# length, and keeps the first length that works.  It shares nothing with the
# engine beyond the ring and polynomial arithmetic.

for p, r, n in [(2, 2, 4), (5, 1, 3), (3, 2, 3)]:
    m = Modulus(p, r)
    t0 = time.perf_counter()
    count = 0
    for k in range(n + 1):
        for S in itertools.product(range(m.q), repeat=k):
            rep = analyze(synthesize(S, m, keep_trace=False)[0])
            brute = oracle_shortest_feedback(S, m, normalized=True)
            assert rep.complexity_L == brute.complexity
            assert enumerate_shortest_feedback(rep, normalized=True) == brute.solutions
            count += 1
    print(f"{m}: {count} sequences of length <= {n} agree  ({time.perf_counter() - t0:.2f}s)")

# The same comparison is available from the command line:
#
#   fsrsynth oracle-check --p 3 --r 2 --seq 6,3,1,5,6
