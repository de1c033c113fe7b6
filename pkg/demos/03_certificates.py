"""Certificates: every claim double-checked by an independent oracle.

A certificate bundles named checks with explicit margins. The first check
in the enumerable regime is always closed-form agreement with a separate
extended-precision transform, so a certificate never leans on the code
path it is certifying.
"""

import cubespec as cs

# The bounded-real counterexample at n=12, printed in full.
print(cs.certify_theorem1(12).to_text())

print()

# The oracle itself: six error figures per comparison.
rep = cs.oracle_compare(cs.theorem_params(12))
print("oracle errors at n=12:")
print("  constancy   ", rep.err_constancy)
print("  l2          ", rep.err_l2)
print("  linf bracket", rep.err_linf_bracket)
print("  coefficients", rep.err_coefficients)
print("  influence   ", rep.err_influence)
print("  entropy     ", rep.err_entropy)

print()

# A random campaign: 100 weight draws, worst error across all quantities.
camp = cs.oracle_campaign(8, trials=100, seed=12345)
print(f"campaign at n=8: {camp.trials} trials, max error {camp.max_error():.3e}")

print()

# Certificates for the other families.
for cert in (
    cs.certify_theorem2(12),
    cs.certify_classical_rs(8),
    cs.certify_remark2(6),
    cs.certify_remark3(16, 4.0),
    cs.certify_neeman(12),
):
    worst = min(c.margin for c in cert.checks)
    print(f"{cert.kind:13s} n={cert.n:<6d} overall={cert.overall}  min margin {worst:.3e}")
