"""Containment, union and intersection "at the root".

For complete trees the union (intersection) at the root is the tree whose
node set is the union (intersection) of the two node sets; both results are
complete again.  Inputs are never completed silently: callers apply
:func:`~pmtree.tree.complete_hull` themselves.
"""
from __future__ import annotations

from functools import reduce
from typing import Iterable

from .errors import EmptyTree
from .tree import (
    ContextTree,
    Word,
    canonical_key,
    require_complete,
    require_nonempty,
    require_same_alphabet,
)


def containment_witness(a: ContextTree, b: ContextTree) -> Word | None:
    """First context of ``a`` (canonical order) that is a postfix of no
    context of ``b``, or None when ``a`` is contained in ``b`` at the root."""
    require_nonempty(a)
    require_nonempty(b)
    require_same_alphabet(a, b)
    # postfix of some context of b <=> node of b
    missing = a.contexts - b.nodes
    return min(missing, key=canonical_key) if missing else None


def contained_at_root(a: ContextTree, b: ContextTree) -> bool:
    return containment_witness(a, b) is None


def covers_witness(a: ContextTree, b: ContextTree) -> Word | None:
    """First context of ``b`` having no postfix among the contexts of ``a``."""
    require_nonempty(a)
    require_nonempty(b)
    require_same_alphabet(a, b)
    actx = a.contexts
    for c in b.sorted_contexts():
        if not any(c[k:] in actx for k in range(len(c) + 1)):
            return c
    return None


def covers_at_root(a: ContextTree, b: ContextTree) -> bool:
    """Every context of ``b`` has a postfix that is a context of ``a``."""
    return covers_witness(a, b) is None


def _check_pair(a: ContextTree, b: ContextTree) -> None:
    require_same_alphabet(a, b)
    require_complete(a)
    require_complete(b)


def union_at_root(a: ContextTree, b: ContextTree) -> ContextTree:
    _check_pair(a, b)
    if b.nodes <= a.nodes:
        return a
    if a.nodes <= b.nodes:
        return b
    return ContextTree.from_nodes(a.alphabet, a.nodes | b.nodes)


def intersection_at_root(a: ContextTree, b: ContextTree) -> ContextTree:
    _check_pair(a, b)
    if a.nodes <= b.nodes:
        return a
    if b.nodes <= a.nodes:
        return b
    return ContextTree.from_nodes(a.alphabet, a.nodes & b.nodes)


def union_all(trees: Iterable[ContextTree]) -> ContextTree:
    trees = list(trees)
    if not trees:
        raise EmptyTree("union of no trees")
    for t in trees:
        _check_pair(trees[0], t)
    return ContextTree.from_nodes(trees[0].alphabet, frozenset().union(*(t.nodes for t in trees)))


def intersection_all(trees: Iterable[ContextTree]) -> ContextTree:
    trees = list(trees)
    if not trees:
        raise EmptyTree("intersection of no trees")
    return reduce(intersection_at_root, trees)
