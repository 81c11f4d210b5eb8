"""
Rank bookkeeping for HPD I and HPD II
=====================================

Every block gets an additive rank (chi of Hochschild homology); the reports
carry certificates with both sides of each identity.
"""

from hpdcalc import hpd_engine as hpd


def show(rep):
    print(rep.case_tag, rep.inputs)
    for b in rep.blocks:
        print(f"   {b.label:16s} alpha={b.alpha} beta={b.beta} rank={b.rank}")
    for c in rep.certificates:
        print(f"   {'ok ' if c.passed else 'BAD'} {c.name}: {c.lhs} = {c.rhs}")
    print()


# Pencil of lines in the plane: the blow-up of P^2 at a point
show(hpd.hpd1_decomposition(2, 1, 2))

# Pencil of cubic fourfolds: baselocus is a Calabi-Yau threefold, equivalence case
show(hpd.hpd2_decomposition(5, 3, 2))

# A single cubic fourfold: 27 = rank C + 3, so C looks like a K3 category
show(hpd.hpd2_decomposition(5, 3, 1))

# Bigger linear systems: C picks up copies of A
show(hpd.hpd2_decomposition(5, 3, 4))

# With an empty baselocus, C is made of ell - i copies of A
show(hpd.duality_check(3, 2))

# Orlov's formulas, additively
show(hpd.orlov_checks("BLOWUP", "bl_line_P3"))
show(hpd.orlov_checks("PROJECTIVE_BUNDLE", "p2_over_p2"))
