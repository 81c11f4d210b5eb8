"""
Euler characteristics of complete intersections
===============================================

All numbers below are exact integers from the truncated Chow ring.
"""

from hpdcalc import chern

# The usual suspects
print("cubic fourfold      ", chern.chi_hypersurface([5], 3))
print("quartic K3          ", chern.chi_hypersurface([3], 4))
print("two cubics in P^5   ", chern.chi_top(chern.complete_intersection([5], [3, 3])))
print("quintic threefold   ", chern.chi_hypersurface([4], 5))

# Hyperplanes have the Euler characteristic of a projective space of one less dimension
print("\nhyperplanes:", [chern.chi_hypersurface([n], 1) for n in range(1, 8)])

# Even quadrics Q^{2n} have chi = 2n + 2
print("even quadrics:", [chern.chi_hypersurface([2 * n + 1], 2) for n in range(1, 5)])

# Universal hyperplane of a pencil: a (d,1)-divisor in P^m x P^1.
# Its chi equals the blow-up of P^m along two degree-d hypersurfaces.
for m, d in [(2, 1), (3, 1), (3, 2), (5, 3)]:
    total = chern.chi_hypersurface([m, 1], (d, 1))
    base = chern.chi_top(chern.complete_intersection([m], [d, d]))
    print(f"m={m} d={d}: chi(H) = {total}, chi(P^m) + chi(base) = {m + 1} + {base}")

# The ring itself, if you want to look inside
dims = (2, 1)
c = chern.total_chern_ambient(dims)
print("\nc(T(P^2 x P^1)) =", c.coeffs)
