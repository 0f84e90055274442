"""Bitstring words, cyclic rotation, Dyck words and the triple codec.

Words are plain ``str`` objects over the alphabet ``'0'``/``'1'``; the
leftmost character is position 1.  Python integers are unbounded, so the
hot streaming path in :mod:`middlelevels.hamilton` packs words into ``int``
without any length cap, while everything here stays in text form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple


def check_word(w: str) -> None:
    if not w or w.strip("01"):
        raise ValueError(f"not a bit word: {w!r}")


def weight(w: str) -> int:
    """Number of 1-bits in `w`."""
    return w.count("1")


def rotate_right(w: str, s: int) -> str:
    """Cyclic right rotation: the last `s` characters move to the front.

    Negative `s` rotates left.
    """
    if not w:
        return w
    s %= len(w)
    if s == 0:
        return w
    return w[-s:] + w[:-s]


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError("words of different length")
    return sum(p != q for p, q in zip(a, b))


def is_dyck(w: str) -> bool:
    """True iff `w` has weight len(w)/2 and no prefix has more 0s than 1s."""
    if len(w) % 2:
        return False
    h = 0
    for c in w:
        if c == "1":
            h += 1
        elif c == "0":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def dyck_words(n: int) -> Iterator[str]:
    """All Dyck words of length 2n in increasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    buf = [""] * (2 * n)

    def rec(i: int, ones: int, zeros: int) -> Iterator[str]:
        if i == 2 * n:
            yield "".join(buf)
            return
        # '0' < '1', so try closing first
        if zeros < ones:
            buf[i] = "0"
            yield from rec(i + 1, ones, zeros + 1)
        if ones < n:
            buf[i] = "1"
            yield from rec(i + 1, ones + 1, zeros)

    yield from rec(0, 0, 0)


def match_index(w: str, i: int = 0) -> int:
    """Index of the 0 that closes the 1 at index `i` of a Dyck word."""
    h = 0
    for j in range(i, len(w)):
        h += 1 if w[j] == "1" else -1
        if h == 0:
            return j
    raise ValueError(f"unbalanced word: {w!r}")


def dyck_decompose(x: str) -> tuple[str, str]:
    """Split a nonempty Dyck word as ``x = '1' + u + '0' + v``; returns (u, v)."""
    if not x or not is_dyck(x):
        raise ValueError(f"not a nonempty Dyck word: {x!r}")
    j = match_index(x)
    return x[1:j], x[j + 1:]


class Triple(NamedTuple):
    """Vertex coordinates (nut, bit, shift) of the middle levels graph."""

    nut: str
    b: int
    shift: int

    @property
    def n(self) -> int:
        return len(self.nut) // 2

    def validate(self) -> None:
        if not is_dyck(self.nut):
            raise ValueError(f"nut is not a Dyck word: {self.nut!r}")
        if self.b not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {self.b!r}")
        if not 0 <= self.shift <= len(self.nut):
            raise ValueError(f"shift {self.shift} out of range for n={self.n}")


def triple_encode(t: Triple) -> str:
    """The word obtained by rotating ``nut + b`` right by ``shift``."""
    return rotate_right(t.nut + str(t.b), t.shift)


def triple_decode(v: str) -> Triple:
    """Inverse of :func:`triple_encode` on levels n and n+1 of Q_{2n+1}.

    Every rotation is scanned; exactly one must produce a Dyck word followed
    by the level bit, otherwise the representation itself is broken and a
    RuntimeError is raised.
    """
    check_word(v)
    if len(v) % 2 == 0:
        raise ValueError(f"vertex length must be odd, got {len(v)}")
    n = len(v) // 2
    k = weight(v)
    if k not in (n, n + 1):
        raise ValueError(f"{v} has weight {k}, outside levels {n} and {n + 1}")
    b = k - n
    found = []
    for s in range(len(v)):
        w = rotate_right(v, -s)
        if w[-1] == str(b) and is_dyck(w[:-1]):
            found.append(Triple(w[:-1], b, s))
    if len(found) != 1:
        raise RuntimeError(f"{v}: {len(found)} shifts decode, expected exactly 1")
    return found[0]


@dataclass(frozen=True)
class MiddleLevelsInstance:
    """Sizes of the middle levels graph for a given n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def dimension(self) -> int:
        return 2 * self.n + 1

    @property
    def level_size(self) -> int:
        return comb(2 * self.n + 1, self.n)

    @property
    def vertex_count(self) -> int:
        return 2 * self.level_size
