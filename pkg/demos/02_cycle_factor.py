"""
The cycle factor and plane trees
================================

Following the map f from any vertex traces a cycle.  Two steps of f rotate
the tree and advance the shift, so each cycle collects one rotation class
of trees: one cycle per plane tree.
"""

from middlelevels import Triple, cycle_of, enumerate_classes, triple_encode

n = 3
for cyc in enumerate_classes(n):
    print(f"class {cyc.canonical}: period {cyc.period}, length {cyc.length}")

# the first few steps of the star's cycle, one bit changing at a time
start = Triple("10" * n, 0, 0)
for i, t in enumerate(cycle_of(start)):
    if i == 8:
        break
    print(t, triple_encode(t))

# census for n = 1..7
print([len(enumerate_classes(k)) for k in range(1, 8)])
