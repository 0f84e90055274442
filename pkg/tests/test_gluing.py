from itertools import combinations

import pytest

from middlelevels.bits import Triple, dyck_words, hamming, triple_encode
from middlelevels.factor import enumerate_classes, f_power
from middlelevels.gluing import (
    PlanError,
    UnionFind,
    build_gluing_plan,
    choose_center,
    footprint_shifts,
    gluing_cycle,
    glued_adjacency,
    load_plan,
    reduce_to_star,
    save_plan,
)
from middlelevels.tree import (
    canonical_of,
    is_pullable,
    iter_pullable,
    pull,
    rotate_labeled,
    rotate_word,
    rotation_period,
    tree_from_dyck,
)


def test_gluing_cycle_1100():
    gc = gluing_cycle("1100")
    assert gc.words == ("11000", "11010", "10010", "10110", "10100", "11100")


def test_gluing_cycle_110100():
    # u = 10, v = empty, substituted into 110u0v0, 110u1v0, 100u1v0, 101u1v0, 101u0v0, 111u0v0
    expected = ("1101000", "1101010", "1001010", "1011010", "1011000", "1111000")
    gc = gluing_cycle("110100")
    assert gc.words == expected
    y = Triple("110100", 0, 0)
    z = Triple(pull("110100"), 0, 0)
    iterates = [f_power(y, k) for k in (0, 1, 6, 5)] + [z, f_power(z, 1)]
    assert tuple(triple_encode(t) for t in iterates) == expected


def test_gluing_cycle_rejects_non_pullable():
    with pytest.raises(ValueError):
        gluing_cycle("1010")


@pytest.mark.parametrize("n", range(2, 7))
def test_every_gluing_cycle_is_a_six_cycle(n):
    for x in iter_pullable(n):
        words = gluing_cycle(x).words
        assert len(set(words)) == 6
        assert all(hamming(words[i], words[(i + 1) % 6]) == 1 for i in range(6))
        assert footprint_shifts(x) == [0, 1, 1, 2, 2, 3, 3, 0, 1]


@pytest.mark.parametrize("n", range(2, 6))
def test_footprints_pairwise_disjoint(n):
    pullable = list(iter_pullable(n))
    fps = {x: set(gluing_cycle(x).footprint) for x in pullable}
    for x, x2 in combinations(pullable, 2):
        assert not fps[x] & fps[x2], (x, x2)


def test_choose_center():
    assert choose_center("101010") == 0
    assert choose_center("1100") == choose_center("1100") == 1


@pytest.mark.parametrize("n", range(2, 6))
def test_center_follows_rotation(n):
    for x in dyck_words(n):
        if rotation_period(x) != 2 * n:
            continue  # symmetric trees: the center is only defined up to automorphism
        t = rotate_labeled(tree_from_dyck(x))
        # ids of t are x's ids; map them to preorder ids of r(x)
        relabel = {v: i for i, v in enumerate(t.preorder())}
        assert relabel[choose_center(x)] == choose_center(rotate_word(x))


def test_reduce_star_is_empty():
    for n in range(1, 6):
        tr = reduce_to_star("10" * n)
        assert tr.steps == ()
        assert tr.final == "10" * n


def test_reduce_small_paths():
    # the center of a 2-edge path is its middle vertex: already a star
    tr = reduce_to_star("1100")
    assert tr.center == 1 and tr.pulls == []
    assert canonical_of(tr.final) == "1010"
    tr = reduce_to_star("111000")
    assert tr.distance_sums == (4, 3)
    assert len(tr.pulls) == 1
    assert canonical_of(tr.final) == "101010"
    tr = reduce_to_star("11110000")
    assert len(tr.pulls) == 3 and canonical_of(tr.final) == "10101010"


@pytest.mark.parametrize("n", range(1, 7))
def test_reduction_terminates_monotonically(n):
    for x in dyck_words(n):
        tr = reduce_to_star(x)
        sums = tr.distance_sums
        assert all(a > b for a, b in zip(sums, sums[1:]))
        assert sums[-1] == n
        assert len(tr.pulls) <= sums[0]
        assert all(is_pullable(w) for w in tr.pulls)
        assert canonical_of(tr.final) == "10" * n
        # replaying the steps on words reproduces the trace
        w = x
        for kind, before in tr.steps:
            assert before == w
            w = pull(w) if kind == "pull" else rotate_word(w)
        assert w == tr.final


@pytest.mark.parametrize("n, size", [(1, 0), (2, 0), (3, 1), (4, 2), (5, 5), (6, 13), (7, 33)])
def test_plan_size(n, size):
    plan = build_gluing_plan(n)
    assert len(plan.chosen) == size == len(enumerate_classes(n)) - 1
    assert len(plan.overrides) == 9 * size


def test_plan_is_deterministic():
    assert build_gluing_plan(6).chosen == build_gluing_plan(6).chosen


@pytest.mark.parametrize("n", range(3, 7))
def test_overrides_form_degree_two(n):
    plan = build_gluing_plan(n)
    adj = glued_adjacency(plan.chosen)
    for t, (a, b) in adj.items():
        assert a != b
        assert hamming(triple_encode(t), triple_encode(a)) == 1
        assert hamming(triple_encode(t), triple_encode(b)) == 1
        # symmetric where the neighbor is also a footprint vertex
        for nb in (a, b):
            if nb in adj:
                assert t in adj[nb]


def test_overrides_n3():
    plan = build_gluing_plan(3)
    assert plan.chosen == ("110010",)
    assert len(plan.overrides) == 9
    assert build_gluing_plan(2).overrides == {}


def test_plan_file_round_trip(tmp_path):
    plan = build_gluing_plan(5)
    path = tmp_path / "plan5.txt"
    save_plan(plan, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "mlham-plan v1 n=5"
    assert tuple(lines[1:]) == plan.chosen
    loaded = load_plan(path)
    assert loaded.chosen == plan.chosen
    assert loaded.overrides == plan.overrides


@pytest.mark.parametrize(
    "mutate",
    [
        lambda lines: lines[:-1],                      # missing gluing
        lambda lines: lines + [lines[-1]],             # duplicate
        lambda lines: lines[:1] + ["10101010"] + lines[2:],  # not pullable
        lambda lines: ["mlham-plan v1 n=4"] + lines[1:],     # wrong n
        lambda lines: ["garbage"] + lines[1:],
    ],
)
def test_plan_file_corruption_detected(tmp_path, mutate):
    path = tmp_path / "plan.txt"
    save_plan(build_gluing_plan(5), path)
    path.write_text("\n".join(mutate(path.read_text().splitlines())) + "\n")
    with pytest.raises(PlanError):
        load_plan(path)


def test_plan_file_cycle_among_classes_detected(tmp_path):
    # swap the last gluing for a pull between classes that are already joined
    plan = build_gluing_plan(5)
    keep = list(plan.chosen[:-1])
    uf = UnionFind(enumerate_classes_keys(5))
    for x in keep:
        uf.union(canonical_of(x), canonical_of(pull(x)))
    redundant = [x for x in iter_pullable(5)
                 if x not in keep and uf.find(canonical_of(x)) == uf.find(canonical_of(pull(x)))]
    assert redundant
    path = tmp_path / "plan.txt"
    path.write_text("mlham-plan v1 n=5\n" + "\n".join(keep + redundant[:1]) + "\n")
    with pytest.raises(PlanError, match="closes a cycle|share"):
        load_plan(path)


def enumerate_classes_keys(n):
    return [c.canonical for c in enumerate_classes(n)]
