import sys
import itertools

import pytest
from hypothesis import strategies as st


def words_by_filter(n):
    """Dyck words of length 2n by filtering all weight-n words (independent of dyck_words)."""
    out = []
    for ones in itertools.combinations(range(2 * n), n):
        w = "".join("1" if i in ones else "0" for i in range(2 * n))
        depth = 0
        for c in w:
            depth += 1 if c == "1" else -1
            if depth < 0:
                break
        else:
            out.append(w)
    return sorted(out)


@st.composite
def dyck(draw, min_n=1, max_n=14):
    """Random Dyck word: random ballot walk, repaired by the cycle lemma."""
    n = draw(st.integers(min_n, max_n))
    steps = draw(st.permutations([1] * n + [-1] * (n + 1)))
    # rotate so the walk stays positive until the final step, then drop it
    h, low, cut = 0, 0, 0
    for i, s in enumerate(steps):
        h += s
        if h < low:
            low, cut = h, i + 1
    walk = steps[cut:] + steps[:cut]
    return "".join("1" if s > 0 else "0" for s in walk[:-1])


@pytest.fixture(scope="session")
def plans():
    from middlelevels.hamilton import get_plan

    return get_plan


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
