"""
Ext groups on the universal hyperplane
======================================

H_L is the (d,1)-divisor in P^m x P^{l-1}. Ext groups between line bundles are
computed from the restriction triangle; only one-term cases are resolved.
"""

from hpdcalc import divisor_ext as dx

g = dx.DivisorGeometry(m=5, d=3, ell=2)
print(g, "dim", g.dim, "canonical twist", dx.canonical_twist(g))

for src, dst in [((0, 0), (0, 0)), ((3, 0), (0, 0)), ((0, 0), (1, 1)), ((0, 0), (-3, -1))]:
    a = dx.ext_on_divisor(g, src, dst)
    status = a.table.to_dict() if a.determined else "indeterminate"
    print(f"RHom(O{src}, O{dst}) -> {status}   euler {a.euler}")

# The polynomial Koszul formula agrees with the cone's Euler characteristic
print("\nkoszul chi:", dx.chi_on_divisor(g, (0, 0), (-3, -1)))

# The vanishing table behind the HPD II decomposition
rep = dx.lemma_vanishing_table(dx.DivisorGeometry(2, 1, 3), i=3)
print("\nvanishing table (2,1,3):", rep.passed, len(rep.entries), "entries")
for case, reason in rep.skipped:
    print("   skipped", case, "-", reason)

# Fibre vanishing on P^{l-1}: p_* O(0,-k) = 0 exactly for 1 <= k <= l-1
print("\nfibre window for l=4:", [k for k in range(-1, 6) if dx.fiber_vanishing(4, k)])
