import random
from math import comb

import pytest

from middlelevels.bits import Triple, triple_encode
from middlelevels.factor import cycle_of
from middlelevels.gluing import GluingPlan
from middlelevels.hamilton import HamiltonStream, cycle_length, generate, get_plan, successor


@pytest.mark.parametrize("n, length", [(1, 6), (2, 20), (3, 70), (5, 924), (10, 705432)])
def test_cycle_length(n, length):
    assert cycle_length(n) == length


def test_cycle_length_rejects_zero():
    with pytest.raises(ValueError):
        cycle_length(0)


def is_hamilton(words, n):
    L = len(words)
    return (
        L == 2 * comb(2 * n + 1, n)
        and len(set(words)) == L
        and all(sum(a != b for a, b in zip(words[i], words[(i + 1) % L])) == 1 for i in range(L))
        and all(w.count("1") in (n, n + 1) for w in words)
    )


@pytest.mark.parametrize("n", range(1, 9))
def test_generate_is_hamiltonian(n):
    words = list(generate(n))
    assert words[0] == "10" * n + "0"
    assert is_hamilton(words, n)


def test_generate_golden_prefixes():
    assert list(generate(1)) == ["100", "110", "010", "011", "001", "101"]
    assert list(generate(2))[:3] == ["10100", "11100", "01100"]


@pytest.mark.parametrize("n", [1, 2])
def test_single_factor_cycle_needs_no_gluing(n):
    empty = GluingPlan(n, (), {})
    words = list(generate(n, empty))
    factor = [triple_encode(t) for t in cycle_of(Triple("10" * n, 0, 0))]
    assert words == factor
    assert len(words) == cycle_length(n)


def test_empty_plan_stops_early_when_classes_remain():
    words = list(generate(3, GluingPlan(3, (), {})))
    assert len(words) == 28  # only the star class cycle


def test_stream_ints_match_words():
    n = 4
    ints = list(HamiltonStream(n))
    assert [format(w, "09b") for w in ints] == list(generate(n))


def test_successor_examples():
    plan = get_plan(2)
    assert successor("11100", "11000", plan) == "11010"
    assert successor("11010", "11000", plan) == "11001"


def test_successor_rejects():
    plan = get_plan(2)
    with pytest.raises(ValueError):
        successor("11000", "11110", plan)  # wrong level
    with pytest.raises(ValueError):
        successor("00000", "11000", plan)  # not adjacent


def test_successor_walk_n1_returns_after_six_steps():
    plan = get_plan(1)
    start = "100"
    prev, cur = "101", start  # 101 is f^-1 of <10,0,0>
    for step in range(1, 100):
        prev, cur = cur, successor(prev, cur, plan)
        if cur == start:
            break
    assert step == 6


def test_successor_at_override_vertex():
    plan = get_plan(3)
    v, (a, b) = next(iter(plan.overrides.items()))
    assert successor(a, v, plan) == b
    assert successor(b, v, plan) == a


def test_successor_agrees_with_stream():
    n = 4
    words = list(generate(n))
    plan = get_plan(n)
    L = len(words)
    for i in range(L):
        assert successor(words[i - 1], words[i], plan) == words[(i + 1) % L]


@pytest.mark.parametrize("n", [3, 5])
def test_restart_gives_same_cycle(n):
    words = list(generate(n))
    plan = get_plan(n)
    L = len(words)
    rng = random.Random(n)
    for _ in range(5):
        i = rng.randrange(L)
        forward = rng.random() < 0.5
        prev = words[(i - 1) % L] if forward else words[(i + 1) % L]
        walk = [words[i]]
        cur = words[i]
        for _ in range(L - 1):
            prev, cur = cur, successor(prev, cur, plan)
            walk.append(cur)
        rotated = words[i:] + words[:i]
        if not forward:
            rotated = [rotated[0]] + rotated[1:][::-1]
        assert walk == rotated


def test_plan_n_mismatch():
    with pytest.raises(ValueError):
        HamiltonStream(4, get_plan(3))
