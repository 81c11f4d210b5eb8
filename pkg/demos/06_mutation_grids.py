"""
Mutation walkthrough and generation order
=========================================

The grid diagrams show which boxes a mutated object passes and in which order
the components of a generator are shown to vanish.
"""

from hpdcalc import hpd_engine as hpd
from hpdcalc.cli import render_grid

w = hpd.mutation_walkthrough(i=3, ell=4)
for step in w.script:
    print(f"stage {step.stage}: past {list(step.mutated_past)}, skip {list(step.skipped)}")
print("final support:", sorted(w.support))
print("all side conditions hold:", w.all_passed)
print()
print(render_grid(w))

s = hpd.generation_schedule(i=3, ell=6, k=4)
for n, e in enumerate(s.entries, 1):
    print(f"{n}. box {e.box} detected by {e.detector}")
print()
print(render_grid(s))

# An HPD II report on the same grid, thick line after beta = 0
print(render_grid(hpd.hpd2_decomposition(5, 3, 4)))
