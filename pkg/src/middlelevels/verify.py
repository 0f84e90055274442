"""Independent checks of the construction.

:func:`check_stream` verifies any vertex sequence against the definition
of a Hamilton cycle in the middle levels graph.  :func:`brute_force_hamilton`
finds a Hamilton cycle by plain backtracking for tiny n, and
:func:`check_all_lemmas` runs the exhaustive structural checks used by the
construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Callable, Iterable

from .bits import Triple, dyck_decompose, dyck_words, is_dyck, triple_decode, triple_encode
from .factor import cycle_of, enumerate_classes, f_inverse, f_map, flip_position
from .gluing import PlanError, build_gluing_plan, footprint_shifts, gluing_cycle, gluing_words, reduce_to_star
from .tree import (
    canonical_of,
    dyck_from_tree,
    is_pullable,
    iter_pullable,
    rotate_labeled,
    rotate_word,
    rotate_word_inverse,
    rotation_period,
    tree_from_dyck,
)

FOOTPRINT_SHIFTS = [0, 1, 1, 2, 2, 3, 3, 0, 1]

BITSET_MAX_DIMENSION = 27
MAX_REPORTED = 20


@dataclass
class StreamReport:
    n: int
    expected: int
    count: int = 0
    failures: list[tuple[str, int, str]] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, kind: str, position: int, detail: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_REPORTED:
            self.failures.append((kind, position, detail))

    def lines(self) -> list[str]:
        head = "PASS" if self.passed else "FAIL"
        out = [f"{head} n={self.n} count={self.count} expected={self.expected}"]
        for kind, pos, detail in self.failures:
            out.append(f"FAIL({kind}) at {pos}: {detail}")
        if self.failure_count > len(self.failures):
            out.append(f"... {self.failure_count - len(self.failures)} more failures")
        return out


def check_stream(n: int, stream: Iterable[str | int]) -> StreamReport:
    """Check that `stream` lists a Hamilton cycle of the middle levels graph.

    Items are text words or ints packed with the leftmost character as the
    most significant bit.  Checks: every word has length 2n+1 and weight n
    or n+1, weights alternate, consecutive words (and last/first) differ in
    one bit, no word repeats, and the count is 2*C(2n+1, n).
    """
    dim = 2 * n + 1
    report = StreamReport(n, 2 * comb(dim, n))
    if dim <= BITSET_MAX_DIMENSION:
        seen_bits = bytearray((1 << dim) // 8 + 1)
        seen_set = None
    else:
        seen_bits = None
        seen_set = set()
    fmt = f"0{dim}b"

    first = prev = None
    pos = -1
    for pos, item in enumerate(stream):
        if isinstance(item, str):
            if len(item) != dim or item.strip("01"):
                report.fail("format", pos, f"{item!r} is not a word of length {dim}")
                continue
            w = int(item, 2)
        else:
            w = item
            if not 0 <= w < 1 << dim:
                report.fail("format", pos, f"{w} does not fit in {dim} bits")
                continue
        k = w.bit_count()
        if k not in (n, n + 1):
            report.fail("level", pos, f"{w:{fmt}} has weight {k}")
        if prev is not None:
            if (w ^ prev).bit_count() != 1:
                report.fail("hamming", pos, f"{prev:{fmt}} -> {w:{fmt}}")
            elif k == prev.bit_count():
                report.fail("alternation", pos, f"{prev:{fmt}} -> {w:{fmt}}")
        else:
            first = w
        if seen_bits is not None:
            byte, bit = w >> 3, 1 << (w & 7)
            if seen_bits[byte] & bit:
                report.fail("distinctness", pos, f"{w:{fmt}} repeated")
            seen_bits[byte] |= bit
        else:
            if w in seen_set:
                report.fail("distinctness", pos, f"{w:{fmt}} repeated")
            seen_set.add(w)
        prev = w
    report.count = pos + 1
    if report.count != report.expected:
        report.fail("count", report.count, f"{report.count} vertices, expected {report.expected}")
    if first is not None and report.count > 1 and (first ^ prev).bit_count() != 1:
        report.fail("closure", report.count, f"{prev:{fmt}} -> {first:{fmt}}")
    return report


def middle_levels_vertices(n: int) -> list[str]:
    dim = 2 * n + 1
    out = []
    for k in (n, n + 1):
        for ones in itertools.combinations(range(dim), k):
            out.append("".join("1" if i in ones else "0" for i in range(dim)))
    return sorted(out)


def brute_force_hamilton(n: int) -> list[str]:
    """Hamilton cycle of the middle levels graph by plain backtracking.

    Limited to n <= 2 (6 and 20 vertices).
    """
    if not 1 <= n <= 2:
        raise ValueError(f"brute force is limited to n <= 2, got {n}")
    verts = middle_levels_vertices(n)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        nbrs = []
        for i in range(len(v)):
            w = v[:i] + ("1" if v[i] == "0" else "0") + v[i + 1:]
            if w in index:
                nbrs.append(index[w])
        adj.append(nbrs)

    total = len(verts)
    used = [False] * total
    path = [0]
    used[0] = True

    def extend() -> bool:
        if len(path) == total:
            return 0 in adj[path[-1]]
        for nb in adj[path[-1]]:
            if not used[nb]:
                used[nb] = True
                path.append(nb)
                if extend():
                    return True
                path.pop()
                used[nb] = False
        return False

    if not extend():
        raise RuntimeError(f"no Hamilton cycle found for n={n}")
    return [verts[i] for i in path]


@dataclass
class LemmaResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"LEMMA {self.name}: {'PASS' if self.passed else 'FAIL'} {self.detail}".rstrip()


def _triples(n: int) -> list[Triple]:
    return [Triple(x, b, s) for x in dyck_words(n) for b in (0, 1) for s in range(2 * n + 1)]


def _catalan_by_filter(n: int) -> set[str]:
    out = set()
    for ones in itertools.combinations(range(2 * n), n):
        w = "".join("1" if i in ones else "0" for i in range(2 * n))
        h = 0
        for c in w:
            h += 1 if c == "1" else -1
            if h < 0:
                break
        else:
            out.add(w)
    return out


def _lemma_dyck_count(n: int) -> str:
    listed = list(dyck_words(n))
    assert len(listed) == len(set(listed))
    assert set(listed) == _catalan_by_filter(n)
    assert listed == sorted(listed)
    return f"|D_{n}| = {len(listed)}"


def _lemma_triple_codec(n: int) -> str:
    triples = _triples(n)
    for t in triples:
        assert triple_decode(triple_encode(t)) == t, t
    words = {triple_encode(t) for t in triples}
    assert len(words) == len(triples) == 2 * comb(2 * n + 1, n)
    return f"{len(triples)} triples round trip"


def _lemma_decode_total(n: int) -> str:
    verts = middle_levels_vertices(n)
    for v in verts:
        triple_decode(v)
    return f"{len(verts)} vertices decode uniquely"


def _lemma_rotation(n: int) -> str:
    words = list(dyck_words(n))
    images = set()
    for x in words:
        y = rotate_word(x)
        assert is_dyck(y)
        assert rotate_word_inverse(y) == x
        images.add(y)
        z = x
        for _ in range(2 * n):
            z = rotate_word(z)
        assert z == x, f"r^2n({x}) = {z}"
        t = rotation_period(x)
        assert (2 * n) % t == 0 and gcd(t, 2 * n + 1) == 1
    assert images == set(words)
    return "r permutes D_n, r^2n = id, period | 2n"


def _lemma_tree_codec(n: int) -> str:
    for x in dyck_words(n):
        t = tree_from_dyck(x)
        assert dyck_from_tree(t) == x
        s = t
        for _ in range(2 * n):
            assert dyck_from_tree(rotate_labeled(s)) == rotate_word(dyck_from_tree(s))
            s = rotate_labeled(s)
        assert s == t
    return "tree codec commutes with rotation"


def _lemma_f_bijective(n: int) -> str:
    triples = _triples(n)
    images = set()
    for t in triples:
        ft = f_map(t)
        assert f_inverse(ft) == t and f_map(f_inverse(t)) == t
        images.add(ft)
    assert images == set(triples)
    return f"{len(triples)} triples"


def _lemma_f_single_bit(n: int) -> str:
    for t in _triples(n):
        a, b = triple_encode(t), triple_encode(f_map(t))
        diff = [i + 1 for i in range(len(a)) if a[i] != b[i]]
        assert len(diff) == 1, (t, diff)
        assert b.count("1") - a.count("1") == (1 if t.b == 0 else -1)
        if t.b == 0:
            u, _ = dyck_decompose(t.nut)
            assert diff[0] == (t.shift + 1 + len(u)) % (2 * n + 1) + 1
        assert diff[0] == flip_position(t)
    return "one bit flipped, between u and v"


def _lemma_f_squared(n: int) -> str:
    for x in dyck_words(n):
        for s in range(2 * n + 1):
            t = Triple(x, 0, s)
            f2 = f_map(f_map(t))
            assert f2 == Triple(rotate_word(x), 0, (s + 1) % (2 * n + 1))
            assert f2 != t
    return "f^2 = (r, shift + 1)"


def _lemma_factor_partition(n: int) -> str:
    owner: dict[Triple, str] = {}
    classes = enumerate_classes(n)
    for cyc in classes:
        members = list(cycle_of(cyc.start))
        assert len(members) == cyc.length, (cyc, len(members))
        for t in members:
            assert owner.setdefault(t, cyc.canonical) == cyc.canonical
        level0 = {(t.nut, t.shift) for t in members if t.b == 0}
        nuts = {t.nut for t in members}
        for x in nuts:
            assert canonical_of(x) == cyc.canonical
            for s in range(2 * n + 1):
                assert (x, s) in level0
    assert len(owner) == 2 * comb(2 * n + 1, n)
    return f"{len(classes)} cycles cover {len(owner)} vertices"


def _lemma_class_count(n: int) -> str:
    # Burnside over the cyclic group generated by r
    words = list(dyck_words(n))
    fixed = 0
    for x in words:
        z = x
        for _ in range(2 * n):
            fixed += z == x
            z = rotate_word(z)
    orbits = fixed // (2 * n)
    classes = enumerate_classes(n)
    assert len(classes) == orbits, (len(classes), orbits)
    assert sum(c.length for c in classes) == 2 * comb(2 * n + 1, n)
    return f"{len(classes)} classes"


def _lemma_gluing_cycles(n: int) -> str:
    count = 0
    for x in iter_pullable(n):
        gc = gluing_cycle(x)
        assert gc.words == gluing_words(x)
        assert footprint_shifts(x) == FOOTPRINT_SHIFTS
        count += 1
    return f"{count} pullable trees"


def _lemma_footprints_disjoint(n: int) -> str:
    owner: dict[Triple, str] = {}
    count = 0
    for x in iter_pullable(n):
        fp = gluing_cycle(x).footprint
        assert len(set(fp)) == 9
        for t in fp:
            other = owner.setdefault(t, x)
            assert other == x, f"S({other}) and S({x}) share {triple_encode(t)}"
        count += 1
    return f"{count * (count - 1) // 2} pairs disjoint"


def _lemma_reduction(n: int) -> str:
    star = canonical_of("10" * n)
    most = 0
    for x in dyck_words(n):
        tr = reduce_to_star(x)
        assert canonical_of(tr.final) == star
        sums = tr.distance_sums
        assert all(a > b for a, b in zip(sums, sums[1:]))
        assert len(tr.pulls) == len(sums) - 1 <= sums[0]
        assert all(is_pullable(w) for w in tr.pulls)
        most = max(most, len(tr.pulls))
    return f"all traces end at the star, at most {most} pulls"


def _lemma_plan(n: int) -> str:
    plan = build_gluing_plan(n)
    classes = enumerate_classes(n)
    assert len(plan.chosen) == len(classes) - 1
    assert len(plan.overrides) == 9 * len(plan.chosen)
    return f"{len(plan.chosen)} gluings"


LEMMAS: list[tuple[str, Callable[[int], str]]] = [
    ("dyck-enumeration", _lemma_dyck_count),
    ("triple-round-trip", _lemma_triple_codec),
    ("triple-decode-total", _lemma_decode_total),
    ("rotation-permutation", _lemma_rotation),
    ("tree-codec", _lemma_tree_codec),
    ("f-bijective", _lemma_f_bijective),
    ("f-single-bit", _lemma_f_single_bit),
    ("f-squared", _lemma_f_squared),
    ("factor-partition", _lemma_factor_partition),
    ("class-count", _lemma_class_count),
    ("gluing-cycles", _lemma_gluing_cycles),
    ("footprints-disjoint", _lemma_footprints_disjoint),
    ("star-reduction", _lemma_reduction),
    ("plan-size", _lemma_plan),
]

MAX_LEMMA_N = 6


def check_all_lemmas(n: int, names: Iterable[str] | None = None) -> list[LemmaResult]:
    """Run the exhaustive checks for one n; each failure is reported, not raised."""
    if not 1 <= n <= MAX_LEMMA_N:
        raise ValueError(f"lemma checks are exhaustive and limited to 1 <= n <= {MAX_LEMMA_N}")
    wanted = None if names is None else set(names)
    results = []
    for name, fn in LEMMAS:
        if wanted is not None and name not in wanted:
            continue
        try:
            detail = fn(n)
            results.append(LemmaResult(name, True, detail))
        except (AssertionError, RuntimeError, ValueError, PlanError) as exc:
            results.append(LemmaResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
