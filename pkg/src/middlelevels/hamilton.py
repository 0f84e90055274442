"""Streaming the Hamilton cycle of the middle levels graph.

The walk follows the factor map ``f`` (or its inverse, depending on the
current direction) and consults the gluing plan only at footprint
vertices.  Words are packed into ints and the nut and shift of the current
vertex are carried along, so a step costs one scan of the nut and never
decodes a word.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator

from .bits import Triple, check_word, hamming, triple_decode, triple_encode
from .factor import f_inverse, f_map
from .gluing import GluingPlan, build_gluing_plan


def cycle_length(n: int) -> int:
    """Number of vertices of the middle levels graph, 2 * C(2n+1, n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 * comb(2 * n + 1, n)


@lru_cache(maxsize=None)
def get_plan(n: int) -> GluingPlan:
    """Gluing plan for n, built once per process."""
    return build_gluing_plan(n)


def start_triple(n: int) -> Triple:
    return Triple("10" * n, 0, 0)


def successor(prev: str, v: str, plan: GluingPlan) -> str:
    """Neighbor of `v` on the glued cycle other than `prev`.

    `prev` must be a hypercube neighbor of `v`.  At footprint vertices it
    must also be one of the two glued neighbors; elsewhere the factor
    neighbor ``f(v)`` is returned unless it equals `prev`.
    """
    check_word(v)
    check_word(prev)
    if len(v) != 2 * plan.n + 1:
        raise ValueError(f"{v} is not a vertex for n={plan.n}")
    t = triple_decode(v)
    if len(prev) != len(v) or hamming(prev, v) != 1:
        raise ValueError(f"{prev} is not adjacent to {v}")
    nbrs = plan.overrides.get(v)
    if nbrs is not None:
        if prev not in nbrs:
            raise ValueError(f"{prev} is not a neighbor of {v} on the cycle")
        return nbrs[1] if prev == nbrs[0] else nbrs[0]
    nxt = triple_encode(f_map(t))
    if nxt == prev:
        nxt = triple_encode(f_inverse(t))
    return nxt


def _pack(t: Triple) -> tuple[int, int, int, int]:
    return int(triple_encode(t), 2), int(t.nut, 2), t.b, t.shift


class HamiltonStream:
    """Iterator over the vertices of the glued cycle as packed ints.

    Bit ``2n - i`` of a packed word is character ``i`` (0-based) of its
    text form.  Iteration starts at ``<(10)^n, 0, 0>`` and stops before
    returning to it.
    """

    def __init__(self, n: int, plan: GluingPlan | None = None):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.plan = get_plan(n) if plan is None else plan
        if self.plan.n != n:
            raise ValueError(f"plan is for n={self.plan.n}, not {n}")
        self.length = cycle_length(n)
        self.emitted = 0
        self._table = self._build_table()

    def _build_table(self) -> dict[int, tuple]:
        # word -> (nbr0, state0, nbr1, state1); state = (x, b, s, direction)
        # direction 0 marks a gluing edge, whose far end is again in the table
        table = {}
        for t, pair in self.plan.adjacency.items():
            fwd, back = f_map(t), f_inverse(t)
            entry = []
            for nb in pair:
                w, x, b, s = _pack(nb)
                d = 1 if nb == fwd else -1 if nb == back else 0
                entry += [w, (x, b, s, d)]
            table[_pack(t)[0]] = tuple(entry)
        return table

    def _start(self) -> tuple[int, int]:
        """Start word and a virtual predecessor fixing the initial direction.

        The walk leaves the start along f unless that edge was removed by
        a gluing, in which case it takes the replacing gluing edge.
        """
        t0 = start_triple(self.n)
        w0 = _pack(t0)[0]
        fwd = _pack(f_map(t0))[0]
        back = _pack(f_inverse(t0))[0]
        entry = self._table.get(w0)
        if entry is None:
            return w0, back
        nbrs = (entry[0], entry[2])
        if fwd in nbrs:
            return w0, nbrs[0] if nbrs[1] == fwd else nbrs[1]
        return w0, back

    def __iter__(self) -> Iterator[int]:
        n = self.n
        m = 2 * n
        L = m + 1
        top = L - 1
        table = self._table
        limit = self.length

        w0, prev = self._start()
        t0 = start_triple(n)
        x, b, s = int(t0.nut, 2), 0, 0
        w = w0
        d = 1
        self.emitted = 0
        while True:
            yield w
            self.emitted += 1
            entry = table.get(w)
            if entry is not None:
                if prev == entry[0]:
                    nw, (x, b, s, d) = entry[2], entry[3]
                else:
                    nw, (x, b, s, d) = entry[0], entry[1]
                prev, w = w, nw
            elif d > 0:
                prev = w
                if b:
                    w ^= 1 << (top - (m + s) % L)
                    b = 0
                else:
                    # x = 1u0v: a = |u|, flip the bit between u and v
                    h, i = 1, m - 2
                    while h:
                        h += 1 if (x >> i) & 1 else -1
                        i -= 1
                    a = m - 3 - i
                    w ^= 1 << (top - (1 + a + s) % L)
                    k = m - 2 - a
                    x = ((x >> (k + 1)) & ((1 << a) - 1)) << (k + 2) | (1 << (k + 1)) | (x & ((1 << k) - 1)) << 1
                    b = 1
                    s = s + 1 if s < m else 0
            elif d < 0:
                prev = w
                if b:
                    # x = u1v0: a = |u|, undo the rotation
                    h, i = 1, 1
                    while True:
                        h += -1 if (x >> i) & 1 else 1
                        if not h:
                            break
                        i += 1
                    a = m - 1 - i
                    w ^= 1 << (top - (a + s) % L)
                    k = m - 2 - a
                    x = (1 << (m - 1)) | (x >> (m - a)) << (k + 1) | (x >> 1) & ((1 << k) - 1)
                    b = 0
                    s = s - 1 if s else m
                else:
                    w ^= 1 << (top - (m + s) % L)
                    b = 1
            else:
                raise RuntimeError(f"left a gluing edge at {w:b} outside the footprint table")
            if w == w0 or self.emitted > limit:
                return


def iter_words(n: int, plan: GluingPlan | None = None) -> Iterator[str]:
    """Hamilton cycle of the middle levels graph as text words."""
    fmt = f"0{2 * n + 1}b"
    return (format(w, fmt) for w in HamiltonStream(n, plan))


def generate(n: int, plan: GluingPlan | None = None) -> Iterator[str]:
    """All 2*C(2n+1, n) vertices in cycle order, starting at ``(10)^n 0``."""
    return iter_words(n, plan)
