"""
Gluing cycles with pulls
========================

A pullable tree 110u0v defines a 6-cycle meeting two factor cycles; its
symmetric difference with them merges the two.  Reducing every tree to the
star picks enough pulls to merge all cycles.
"""

from middlelevels import build_gluing_plan, gluing_cycle, reduce_to_star

gc = gluing_cycle("110100")
print("G(110100):", gc.words)
print("footprint shifts:", [t.shift for t in gc.footprint])

trace = reduce_to_star("11110000")
print("center", trace.center, "distance sums", trace.distance_sums)
for kind, word in trace.steps:
    print(f"  {kind:6s} {word}")
print("final", trace.final)

for n in range(1, 9):
    plan = build_gluing_plan(n)
    print(n, len(plan.chosen), "gluings,", len(plan.overrides), "overridden vertices")
