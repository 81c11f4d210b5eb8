"""
Exceptional collections and mutations
=====================================

Classes in K_0, their Gram matrices, and what mutation does to them.
"""

from hpdcalc import kgroup

beil = kgroup.Collection.of_twists(2, [0, 1, 2])
print("Gram of <O, O(1), O(2)> on P^2:")
for row in kgroup.gram_matrix(beil).tolist():
    print("   ", row)
print("exceptional:", kgroup.is_exceptional_collection(beil).passed)

# Swap the order and the semi-orthogonality breaks
bad = kgroup.is_exceptional_collection(kgroup.Collection.of_twists(1, [1, 0]))
print("\n<O(1), O> on P^1:", bad.first)

# Left mutation of O(1) through O on P^1 gives -[O(-1)]
c = kgroup.Collection.of_twists(1, [0, 1])
left = kgroup.left_mutate(c, 1)
print("\nL_O O(1) =", left[0], "   coords:", kgroup.beilinson_coordinates(left[0]))
print("-O(-1)   coords:", kgroup.beilinson_coordinates(-kgroup.KClass.line(1, -1)))

# ...and a right mutation undoes it
print("undone:", kgroup.right_mutate(left, 0) == c)

# Mutations act on the Gram matrix by an explicit integer base change
g = kgroup.gram_matrix(beil)
M = kgroup.mutation_matrix(g, 2, "left")
predicted = kgroup.transform_gram(g, M)
actual = kgroup.gram_matrix(kgroup.left_mutate(beil, 2))
print("\nM g M^T == Gram(L mutated):", predicted == actual, predicted.tolist())

# The lattice spanned never changes
print("HNF before:", kgroup.lattice_hnf(beil.objects))
print("HNF after: ", kgroup.lattice_hnf(kgroup.left_mutate(beil, 2).objects))
