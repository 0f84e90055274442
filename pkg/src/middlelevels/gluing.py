"""Joining the factor cycles into one cycle.

A pullable tree ``x = 110u0v`` defines a 6-cycle through
``y = <x,0,0>`` and ``z = <p(x),0,0>``; taking the symmetric difference
of its edges with the two factor cycles through y and z merges them.  The
footprints of different pullable trees never overlap, so any set of pulls
forming a spanning tree over the plane-tree classes glues everything into
a Hamilton cycle.  Such a set is found by reducing each class
representative to the star with rotations and pulls.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .bits import Triple, dyck_decompose, hamming, is_dyck, triple_encode
from .factor import f_inverse, f_map, f_power
from .tree import (
    _rotate,
    canonical_of,
    dyck_from_tree,
    is_pullable,
    plane_tree_classes,
    pull,
    pull_labeled,
    rotate_labeled,
    tree_from_dyck,
)

PLAN_HEADER = "mlham-plan v1 n={n}"

# f-exponents of y, and then z, f(z), in footprint order
_Y_POWERS = range(7)


class PlanError(ValueError):
    """A gluing plan violates one of its invariants."""


@dataclass(frozen=True)
class GluingCycle:
    x: str
    vertices: tuple[Triple, ...]
    footprint: tuple[Triple, ...]

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(triple_encode(t) for t in self.vertices)

    @property
    def removed_edges(self) -> tuple[tuple[Triple, Triple], ...]:
        y, fy, f6y, f5y, z, fz = self.vertices
        return (y, fy), (f6y, f5y), (z, fz)

    @property
    def added_edges(self) -> tuple[tuple[Triple, Triple], ...]:
        y, fy, f6y, f5y, z, fz = self.vertices
        return (fy, f6y), (f5y, z), (fz, y)


def gluing_words(x: str) -> tuple[str, ...]:
    """The six words of the gluing cycle, by substituting u and v."""
    inner, v = dyck_decompose(x)
    u = inner[2:]
    return (
        "110" + u + "0" + v + "0",
        "110" + u + "1" + v + "0",
        "100" + u + "1" + v + "0",
        "101" + u + "1" + v + "0",
        "101" + u + "0" + v + "0",
        "111" + u + "0" + v + "0",
    )


def gluing_cycle(x: str) -> GluingCycle:
    """Build G(x) from f-iterates and check it against the substitution form."""
    if not is_pullable(x):
        raise ValueError(f"not pullable: {x!r}")
    y = Triple(x, 0, 0)
    z = Triple(pull(x), 0, 0)
    ys = [f_power(y, i) for i in _Y_POWERS]
    fz = f_map(z)
    vertices = (ys[0], ys[1], ys[6], ys[5], z, fz)
    gc = GluingCycle(x, vertices, tuple(ys) + (z, fz))

    words = gc.words
    if words != gluing_words(x):
        raise AssertionError(f"f-iterates disagree with substitution for {x}")
    for i in range(6):
        if hamming(words[i], words[(i + 1) % 6]) != 1:
            raise AssertionError(f"G({x}) has a non-edge at step {i}")
    # the removed edges are factor edges: consecutive under f
    for a, b in gc.removed_edges:
        if f_map(a) != b and f_inverse(a) != b:
            raise AssertionError(f"G({x}): {a}-{b} is not a factor edge")
    return gc


def footprint_shifts(x: str) -> list[int]:
    return [t.shift for t in gluing_cycle(x).footprint]


@dataclass(frozen=True)
class ReductionTrace:
    start: str
    center: int
    steps: tuple[tuple[str, str], ...]
    final: str
    distance_sums: tuple[int, ...] = ()

    @property
    def pulls(self) -> list[str]:
        return [w for kind, w in self.steps if kind == "pull"]


def choose_center(x: str) -> int:
    """Vertex id (preorder id in x's tree) that becomes the star center.

    It is the root of the canonical rotation of x, followed back through
    the labeled rotations.
    """
    target = canonical_of(x)
    t = tree_from_dyck(x)
    w = x
    while w != target:
        t = rotate_labeled(t)
        w = _rotate(w)
    return t.root


def reduce_to_star(x: str) -> ReductionTrace:
    """Rotations and pulls taking x into the rotation class of the star.

    Repeats: rotate until the center is the root and its first child is not
    a leaf; rotate further until the leftmost leaf has depth 2; pull.  Each
    pull brings one vertex one step closer to the center.
    """
    t = tree_from_dyck(x)
    w = x
    c = choose_center(x)
    n = t.n
    steps: list[tuple[str, str]] = []
    sums = [sum(t.distances(c))]
    budget = sums[0]

    def rotate() -> None:
        nonlocal t, w
        steps.append(("rotate", w))
        t = rotate_labeled(t)
        w = _rotate(w)

    # distance sum n means every vertex is adjacent to c
    while sums[-1] > n:
        for _ in range(2 * n):
            if t.root == c and t.children[t.children[c][0]]:
                break
            rotate()
        else:
            raise RuntimeError(f"{x}: no rotation puts a non-leaf first under the center")

        # depth of the leftmost leaf
        d, v = 0, t.root
        while t.children[v]:
            v = t.children[v][0]
            d += 1
        for _ in range(d - 2):
            rotate()

        # leftmost leaf at depth 2 is exactly the pullable shape
        if not w.startswith("110"):
            raise RuntimeError(f"{x}: reduction reached non-pullable {w}")
        steps.append(("pull", w))
        t = pull_labeled(t)
        w = "101" + w[3:]
        sums.append(sum(t.distances(c)))
        if sums[-1] >= sums[-2]:
            raise RuntimeError(f"{x}: pull did not bring the tree closer to the star")
        if len(sums) - 1 > budget:
            raise RuntimeError(f"{x}: reduction exceeded its pull budget")

    if dyck_from_tree(t) != w:
        raise AssertionError(f"{x}: labeled tree and word drifted apart")
    return ReductionTrace(x, c, tuple(steps), w, tuple(sums))


class UnionFind:
    def __init__(self, items: Iterable[str]):
        self.parent = {a: a for a in items}
        self.components = len(self.parent)

    def find(self, a: str) -> str:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: str, b: str) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.components -= 1
        return True


@dataclass(frozen=True)
class GluingPlan:
    """Chosen pullable trees and the adjacency they impose on the cycle.

    ``overrides`` maps every footprint vertex to its two neighbors on the
    glued cycle; ``adjacency`` holds the same information as triples.
    """

    n: int
    chosen: tuple[str, ...]
    adjacency: dict[Triple, tuple[Triple, Triple]] = field(repr=False, compare=False)

    @cached_property
    def overrides(self) -> dict[str, tuple[str, str]]:
        return overrides_of(self.adjacency)


def _check_footprints(chosen: Iterable[str]) -> None:
    owner: dict[Triple, str] = {}
    for x in chosen:
        for t in gluing_cycle(x).footprint:
            other = owner.setdefault(t, x)
            if other != x:
                raise PlanError(f"footprints of {other} and {x} share {triple_encode(t)}")


def glued_adjacency(chosen: Iterable[str]) -> dict[Triple, tuple[Triple, Triple]]:
    """Neighbors on the glued cycle of every footprint vertex.

    Starts from the factor neighbors f(t), f^-1(t) and toggles the six
    edges of each gluing cycle.
    """
    out: dict[Triple, tuple[Triple, Triple]] = {}
    for x in chosen:
        gc = gluing_cycle(x)
        adj: dict[Triple, set[Triple]] = {
            t: {f_map(t), f_inverse(t)} for t in gc.footprint
        }
        for a, b in gc.removed_edges:
            adj[a].discard(b)
            adj[b].discard(a)
        for a, b in gc.added_edges:
            adj[a].add(b)
            adj[b].add(a)
        for t, nbrs in adj.items():
            if len(nbrs) != 2:
                raise AssertionError(f"{triple_encode(t)} has degree {len(nbrs)} after gluing")
            if t in out:
                raise PlanError(f"vertex {triple_encode(t)} lies in two footprints")
            out[t] = tuple(sorted(nbrs, key=triple_encode))
    return out


def overrides_of(adjacency: dict[Triple, tuple[Triple, Triple]]) -> dict[str, tuple[str, str]]:
    """Word-level view of :func:`glued_adjacency`."""
    return {
        triple_encode(t): (triple_encode(a), triple_encode(b))
        for t, (a, b) in adjacency.items()
    }


def build_gluing_plan(n: int) -> GluingPlan:
    """Pick one pull per spanning-tree edge over the plane-tree classes.

    Class representatives are reduced in increasing order; every pull in a
    trace that joins two not-yet-connected classes is kept.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    keys, key_of = plane_tree_classes(n)
    uf = UnionFind(keys)
    chosen: list[str] = []
    for key in keys:
        if uf.components == 1:
            break
        trace = reduce_to_star(key)
        if key_of[trace.final] != "10" * n:
            raise RuntimeError(f"reduction of {key} ended outside the star class")
        for w in trace.pulls:
            if uf.union(key_of[w], key_of["101" + w[3:]]):
                chosen.append(w)
    if uf.components != 1 or len(chosen) != len(keys) - 1:
        raise RuntimeError(f"n={n}: {len(chosen)} gluings for {len(keys)} classes")
    _check_footprints(chosen)
    return GluingPlan(n, tuple(chosen), glued_adjacency(chosen))


def save_plan(plan: GluingPlan, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(PLAN_HEADER.format(n=plan.n) + "\n")
        for x in plan.chosen:
            fh.write(x + "\n")


def validate_chosen(n: int, chosen: list[str]) -> None:
    """Raise PlanError unless `chosen` glues all classes of D_n exactly once."""
    keys, key_of = plane_tree_classes(n)
    for x in chosen:
        if len(x) != 2 * n or not is_dyck(x):
            raise PlanError(f"{x!r} is not a Dyck word of length {2 * n}")
        if not is_pullable(x):
            raise PlanError(f"{x} is not pullable")
    if len(set(chosen)) != len(chosen):
        raise PlanError("duplicate entries")
    if len(chosen) != len(keys) - 1:
        raise PlanError(f"{len(chosen)} gluings for {len(keys)} classes")
    uf = UnionFind(keys)
    for x in chosen:
        if not uf.union(key_of[x], key_of[pull(x)]):
            raise PlanError(f"gluing {x} closes a cycle among classes")
    _check_footprints(chosen)


def load_plan(path: str | os.PathLike) -> GluingPlan:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("mlham-plan v1 n="):
        raise PlanError("missing plan header")
    try:
        n = int(lines[0].split("n=", 1)[1])
    except ValueError:
        raise PlanError(f"bad header: {lines[0]!r}") from None
    if n < 1:
        raise PlanError(f"bad n in header: {n}")
    chosen = lines[1:]
    validate_chosen(n, chosen)
    return GluingPlan(n, tuple(chosen), glued_adjacency(chosen))
