"""Ordered rooted trees encoded as Dyck words.

A Dyck word is read as a depth-first traversal: ``1`` steps away from the
root, ``0`` steps back.  Tree rotation re-roots the tree at the first child
of the root, which moves the old root to the end of the new root's child
list; the rotation classes are plane trees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .bits import dyck_decompose, dyck_words, is_dyck, match_index


@dataclass(frozen=True)
class OrderedTree:
    """Ordered rooted tree with stable integer vertex ids.

    ``children[i]`` lists the children of vertex ``i`` from left to right.
    Ids survive rotations and pulls, so a vertex can be followed around.
    """

    root: int
    children: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        """Number of edges."""
        return len(self.children) - 1

    def neighbors(self, v: int) -> list[int]:
        out = list(self.children[v])
        p = self.parent(v)
        if p is not None:
            out.append(p)
        return out

    def parent(self, v: int) -> int | None:
        for p, kids in enumerate(self.children):
            if v in kids:
                return p
        return None

    def distances(self, source: int) -> list[int]:
        adj: list[list[int]] = [[] for _ in self.children]
        for p, kids in enumerate(self.children):
            for c in kids:
                adj[p].append(c)
                adj[c].append(p)
        dist = [-1] * len(adj)
        dist[source] = 0
        queue = deque([source])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        return dist

    def preorder(self) -> list[int]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order


def tree_from_dyck(x: str) -> OrderedTree:
    """Build the tree of a Dyck word, ids in DFS preorder (root is 0)."""
    if not is_dyck(x):
        raise ValueError(f"not a Dyck word: {x!r}")
    children: list[list[int]] = [[] for _ in range(len(x) // 2 + 1)]
    stack = [0]
    nxt = 1
    for c in x:
        if c == "1":
            children[stack[-1]].append(nxt)
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return OrderedTree(0, tuple(tuple(k) for k in children))


def dyck_from_tree(t: OrderedTree) -> str:
    out = []

    def walk(v: int) -> None:
        for c in t.children[v]:
            out.append("1")
            walk(c)
            out.append("0")

    walk(t.root)
    return "".join(out)


def rotate_word(x: str) -> str:
    """Tree rotation ``1u0v -> u1v0``."""
    dyck_decompose(x)
    return _rotate(x)


def _rotate(x: str) -> str:
    # unchecked; x must be a nonempty Dyck word
    j = match_index(x)
    return x[1:j] + "1" + x[j + 1:] + "0"


def rotate_word_inverse(x: str) -> str:
    """Inverse rotation: parse ``x = u1v0`` from the right, return ``1u0v``."""
    if not x or not is_dyck(x):
        raise ValueError(f"not a nonempty Dyck word: {x!r}")
    h = 0
    for j in range(len(x) - 1, -1, -1):
        h += 1 if x[j] == "0" else -1
        if h == 0:
            break
    u, v = x[:j], x[j + 1:-1]
    return "1" + u + "0" + v


def rotate_labeled(t: OrderedTree) -> OrderedTree:
    """Rotation on a labeled tree.

    The first child of the root becomes the root; the old root, keeping its
    remaining subtrees, is appended as the last child of the new root.
    """
    if t.n < 1:
        raise ValueError("cannot rotate a tree without edges")
    old = t.root
    new = t.children[old][0]
    kids = list(t.children)
    kids[old] = kids[old][1:]
    kids[new] = kids[new] + (old,)
    return OrderedTree(new, tuple(kids))


def is_pullable(x: str) -> bool:
    """True iff ``x = 110u0v`` with u, v Dyck (leftmost leaf at depth 2)."""
    if not is_dyck(x) or not x.startswith("11"):
        return False
    inner, _ = dyck_decompose(x)
    first, _rest = dyck_decompose(inner)
    return first == ""


def pull(x: str) -> str:
    """``110u0v -> 101u0v``: move the leftmost leaf up to the root."""
    if not is_pullable(x):
        raise ValueError(f"not pullable: {x!r}")
    return "101" + x[3:]


def pull_labeled(t: OrderedTree) -> OrderedTree:
    """Pull on a labeled tree whose leftmost leaf sits at depth 2."""
    a = t.children[t.root][0] if t.children[t.root] else None
    if a is None or not t.children[a] or t.children[t.children[a][0]]:
        raise ValueError("leftmost leaf is not at depth 2")
    leaf = t.children[a][0]
    kids = list(t.children)
    kids[a] = kids[a][1:]
    kids[t.root] = (leaf,) + kids[t.root]
    return OrderedTree(t.root, tuple(kids))


def rotation_orbit(x: str) -> list[str]:
    """``[x, r(x), r^2(x), ...]`` up to the first repeat."""
    rotate_word(x)
    orbit = [x]
    seen = {x}
    y = _rotate(x)
    while y not in seen:
        orbit.append(y)
        seen.add(y)
        y = _rotate(y)
    if y != x:
        raise RuntimeError(f"rotation is not a permutation at {x}")
    return orbit


def canonical_of(x: str) -> str:
    """Class key: the lexicographically smallest word in the rotation orbit."""
    if not is_dyck(x):
        raise ValueError(f"not a Dyck word: {x!r}")
    if not x:
        return x
    return min(rotation_orbit(x))


def rotation_period(x: str) -> int:
    """Smallest t > 0 with r^t(x) = x."""
    if not x:
        return 1
    return len(rotation_orbit(x))


def plane_tree_classes(n: int) -> tuple[list[str], dict[str, str]]:
    """Rotation classes of D_n.

    Returns the class keys in increasing order and a map from every Dyck
    word to its key.  Words are visited in increasing order, so the first
    unseen word of an orbit is its minimum.
    """
    keys: list[str] = []
    key_of: dict[str, str] = {}
    for x in dyck_words(n):
        if x in key_of:
            continue
        keys.append(x)
        if n == 0:
            key_of[x] = x
            continue
        y = x
        while True:
            key_of[y] = x
            y = _rotate(y)
            if y == x:
                break
    return keys, key_of


def iter_pullable(n: int) -> Iterator[str]:
    return (x for x in dyck_words(n) if is_pullable(x))
