"""
Cohomology tables on projective space
=====================================

Line bundles, twisted forms, and products of projective spaces.
"""

from hpdcalc import bott

# O(k) on P^2: sections for k >= 0, top cohomology for k <= -3, nothing between
for k in range(-5, 3):
    print(f"H*(P^2, O({k:2d})) = {bott.line_cohomology(2, k).to_dict()}")

# Omega^p(k) on P^3, including the acyclic diagonal Omega^r(r)
print()
for p in range(4):
    row = [bott.omega_cohomology(3, p, k).to_dict() for k in range(-1, 4)]
    print(f"p={p}:", row)

# Hodge diamond of P^3 sits at k = 0
print("\nh^{p,q}(P^3):", [bott.omega_cohomology(3, p, 0).to_dict() for p in range(4)])

# Serre duality: H^q(Omega^p(k)) = H^{n-q}(Omega^{n-p}(-k))^*
t = bott.omega_cohomology(4, 1, -3)
s = bott.omega_cohomology(4, 3, 3)
print("\nOmega^1(-3) on P^4:", t.to_dict(), " dual:", s.to_dict())

# Kunneth on P^1 x P^2; the shift C[1-l] is recorded in degree l-1
table = bott.kunneth([(1, 0, -2), (2, 0, 1)])
print("\nH*(P^1 x P^2, O(-2, 1)) =", table.to_dict(), "euler", table.euler)
print("H*(P^3, O(-4)) =", bott.line_cohomology(3, -4).to_dict())
