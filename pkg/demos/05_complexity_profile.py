#! /usr/bin/env python3
"""Linear complexity profiles: the complexity of every prefix, from one pass."""

import numpy as np

from fsrsynth import Modulus, complexity_profile

rng = np.random.default_rng(1)

# =============================================================================
# Each intermediate state solves the prefix problem, so a single pass yields
# the whole profile.  For random sequences it hugs k/2.

m = Modulus(2)
S = rng.integers(0, 2, size=40).tolist()
prof = complexity_profile(S, m)
print("random bits:", "".join(map(str, S)))
print("profile   :", prof)
print("k/2       :", [k // 2 for k in range(1, 41)])

# A sequence produced by a short register stops growing once the register
# has been identified.  Here: s_k = s_{k-1} + s_{k-3} over Z_2.

s = [1, 0, 0]
while len(s) < 30:
    s.append((s[-1] + s[-3]) % 2)
print("\nregister output profile:", complexity_profile(s, m))

# =============================================================================
# Over Z_8 the same holds; here a length-2 recurrence modulo 8.

z8 = Modulus(2, 3)
t = [1, 2]
while len(t) < 20:
    t.append((3 * t[-1] + 5 * t[-2]) % 8)
prof = complexity_profile(t, z8)
print("Z_8 sequence:", t)
print("profile     :", prof)
assert prof[-1] <= 2
