"""Random context trees for property and differential tests."""
from __future__ import annotations

import random

from .tree import Alphabet, ContextTree, Word


def random_complete_tree(rng: random.Random, n: int, max_depth: int, p: float = 0.5) -> ContextTree:
    """Split each node independently with probability ``p`` up to ``max_depth``."""
    nodes: set[Word] = {()}
    frontier: list[Word] = [()]
    while frontier:
        v = frontier.pop()
        if len(v) < max_depth and rng.random() < p:
            for x in range(n):
                child = (x,) + v
                nodes.add(child)
                frontier.append(child)
    return ContextTree.from_nodes(Alphabet.of_size(n), nodes)


def random_tree(rng: random.Random, n: int, max_depth: int, p: float = 0.5, keep: float = 0.7) -> ContextTree:
    """A nonempty, usually incomplete tree: a random complete tree with some
    leaves deleted."""
    t = random_complete_tree(rng, n, max_depth, p)
    ctx = [c for c in t.sorted_contexts() if rng.random() < keep]
    if not ctx:
        ctx = [rng.choice(t.sorted_contexts())]
    return ContextTree.from_contexts(t.alphabet, ctx)


def random_two_level_tree(rng: random.Random, n: int, k: int, p: float = 0.5) -> ContextTree:
    """Complete tree whose leaves all sit at depth ``k`` or ``k + 1``."""
    full = ContextTree.full(Alphabet.of_size(n), k)
    nodes = set(full.nodes)
    for c in full.contexts:
        if rng.random() < p:
            nodes.update((x,) + c for x in range(n))
    return ContextTree.from_nodes(full.alphabet, nodes)
