"""The cycle factor of the middle levels graph.

The map ``f`` sends ``<x,0,s>`` to ``<r(x),1,s+1>`` and ``<x,1,s>`` to
``<x,0,s>``.  Each application flips one bit, so the orbits of ``f`` are
cycles covering every vertex exactly once.  Two steps of ``f`` rotate the
nut and advance the shift, hence every cycle holds all shifts of every nut
in one rotation class: cycles correspond to plane trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .bits import Triple, dyck_decompose
from .tree import plane_tree_classes, rotate_word, rotate_word_inverse


@dataclass(frozen=True)
class FactorCycle:
    canonical: str
    period: int
    n: int

    @property
    def start(self) -> Triple:
        return Triple(self.canonical, 0, 0)

    @property
    def length(self) -> int:
        # t | 2n and gcd(t, 2n+1) = 1, so the orbit closes after lcm(t, 2n+1) double steps
        return 2 * self.period * (2 * self.n + 1)


def f_map(v: Triple) -> Triple:
    mod = len(v.nut) + 1
    if v.b == 0:
        return Triple(rotate_word(v.nut), 1, (v.shift + 1) % mod)
    return Triple(v.nut, 0, v.shift)


def f_inverse(v: Triple) -> Triple:
    mod = len(v.nut) + 1
    if v.b == 0:
        return Triple(v.nut, 1, v.shift)
    return Triple(rotate_word_inverse(v.nut), 0, (v.shift - 1) % mod)


def f_power(v: Triple, k: int) -> Triple:
    step = f_map if k >= 0 else f_inverse
    for _ in range(abs(k)):
        v = step(v)
    return v


def flip_position(v: Triple) -> int:
    """1-based position of the bit that ``f`` flips at `v`."""
    mod = len(v.nut) + 1
    if v.b == 0:
        u, _ = dyck_decompose(v.nut)
        return (v.shift + 1 + len(u)) % mod + 1
    return (v.shift + len(v.nut)) % mod + 1


def cycle_of(start: Triple) -> Iterator[Triple]:
    """Yield ``start, f(start), f^2(start), ...`` until the orbit closes."""
    v = start
    while True:
        yield v
        v = f_map(v)
        if v == start:
            return


def enumerate_classes(n: int) -> list[FactorCycle]:
    """One cycle per plane tree with n edges, ordered by canonical word."""
    if n < 1:
        raise ValueError("n must be at least 1")
    keys, key_of = plane_tree_classes(n)
    period: dict[str, int] = dict.fromkeys(keys, 0)
    for key in key_of.values():
        period[key] += 1
    cycles = [FactorCycle(k, period[k], n) for k in keys]
    total = sum(c.length for c in cycles)
    if total != 2 * comb(2 * n + 1, n):
        raise RuntimeError(f"cycle lengths sum to {total}, not the vertex count")
    return cycles
