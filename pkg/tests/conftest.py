import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from pmtree import Alphabet, ContextTree, Scot

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# Reference perfect-memory tree and a variant that is one leaf set short.
PM_TREE = ("00", "010", "110", "001", "0101", "1101", "11")
NON_PM_TREE = ("00", "10", "001", "0101", "1101", "11")
INTRO_TREE = ("0", "01", "11")
MAX_DEPTH = {2: 6, 3: 4, 4: 3}


def T(*strings):
    return ContextTree.from_strings(strings)


@pytest.fixture
def pm_tree():
    return T(*PM_TREE)


@pytest.fixture
def non_pm_tree():
    return T(*NON_PM_TREE)


@pytest.fixture
def intro_scot():
    t = T(*INTRO_TREE)
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    return Scot(t, {(0,): (half, half), (0, 1): (1 - quarter, quarter), (1, 1): (quarter, 1 - quarter)})


@st.composite
def complete_trees(draw, n=None, max_depth=None):
    n = draw(st.integers(2, 4)) if n is None else n
    depth_cap = MAX_DEPTH[n] if max_depth is None else max_depth
    nodes = {()}
    stack = [()]
    while stack:
        v = stack.pop()
        if len(v) < depth_cap and draw(st.booleans()):
            for x in range(n):
                nodes.add((x,) + v)
                stack.append((x,) + v)
    return ContextTree.from_nodes(Alphabet.of_size(n), nodes)


@st.composite
def complete_pairs(draw):
    n = draw(st.integers(2, 3))
    return draw(complete_trees(n=n)), draw(complete_trees(n=n))


@st.composite
def any_trees(draw, n=None):
    t = draw(complete_trees(n=n))
    ctx = t.sorted_contexts()
    keep = draw(st.lists(st.sampled_from(ctx), min_size=1, unique=True))
    return ContextTree.from_contexts(t.alphabet, keep)


words = st.lists(st.integers(0, 2), max_size=6).map(tuple)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
