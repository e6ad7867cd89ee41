#! /usr/bin/env python3
"""What the rows look like as a basis: leading terms, p-PLM and p-generator checks."""

from fsrsynth import (
    Modulus,
    Mode,
    PBasis,
    check_p_generator_sequence,
    check_p_plm,
    is_minimal_grobner_field,
    leading_data,
    p_basis_order,
    p_expand,
    p_plm_counterexample,
    states,
)

# =============================================================================
# Over a field, two rows form a minimal Groebner basis of the step-k module
# exactly when their degrees add to k+1 and their leading positions differ.
# The Berlekamp-Massey pivot choice can break the second condition.

Z5 = Modulus(5)
S = [4, 0, 4, 4, 2]
gro = states(S, Z5)
bm = states(S, Z5, Mode.BM_COMPAT_FIELD)
for k in range(len(S) + 1):
    lp = [leading_data(v).lpos for v in bm[k].rows]
    print(
        f"k={k}  groebner: {is_minimal_grobner_field(gro[k].rows, k)}   "
        f"bm-compat: {is_minimal_grobner_field(bm[k].rows, k)}  (lpos {lp})"
    )

# =============================================================================
# Over Z_9 the rows form a p-basis: digit combinations never cancel their top
# terms (p-PLM), and 3 times each row is a digit combination of later rows.

Z9 = Modulus(3, 2)
rows = p_basis_order(states([6, 3, 1, 5, 6], Z9)[-1].rows)
for v in rows:
    ld = leading_data(v)
    print(f"{str(v):28s} lm=x^{ld.lm.alpha} e{ld.lm.pos}  ord={ld.ord}")
basis = PBasis.of(rows)
print("p-PLM at degree 2:", check_p_plm(basis, 2))
print("p-generator at degree 2:", check_p_generator_sequence(basis, 2))

# A row next to its negative is the simplest failure: v + (-v) = 0.

v = rows[0]
pair = PBasis.of([v, -v])
print("v and -v, cancelling digits:", p_plm_counterexample(pair, 0))
assert not check_p_plm(pair, 0)

# =============================================================================
# A minimal Groebner basis expands into a p-basis by adding p-multiples.

g = [rows[0], rows[2]]
expanded = p_expand(g)
print("\nexpanded basis:")
for v in expanded.rows:
    print("   ", v)
print("p-PLM:", check_p_plm(expanded, 2), " p-generator:", check_p_generator_sequence(expanded, 2))
