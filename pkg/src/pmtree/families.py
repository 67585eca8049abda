"""Generators for four worked families of context trees.

``comb``            maximally sparse perfect-memory tree.
``sparse_example``  fixed binary tree with the comb's leaf count, not
                    perfect-memory.
``minimal_full_mc`` binary tree whose closure contains the full tree of
                    depth ``depth - 1``.
``wide_r2``         tree whose closure is about ``depth - 1`` times larger.

Only the comb is fully specified by its definition; the other three are
reconstructed from drawings and checked against closed-form counts.
"""
from __future__ import annotations

from itertools import product

from .errors import BadParams
from .tree import BINARY, Alphabet, ContextTree, Word, saturate


def comb(n: int, depth: int) -> ContextTree:
    """Spine of ``a_1`` nodes; every other child is a leaf, and the last spine
    node has ``n`` leaf children.  ``(n - 1) * depth + 1`` leaves."""
    if n < 2 or depth < 1:
        raise BadParams(f"comb needs n >= 2 and depth >= 1, got n={n}, depth={depth}")
    ctx = [(x,) + (0,) * k for k in range(depth) for x in range(1, n)]
    ctx.append((0,) * depth)
    return ContextTree.from_contexts(Alphabet.of_size(n), ctx)


# Solid part of the binary drawing, oldest symbol first.  The closure adds the
# full depth-5 subtree under 1 and the depth-4 subtree under 00.
SPARSE_CONTEXTS = ("1", "00", "110", "1010", "00010", "010010", "110010")


def sparse_example() -> ContextTree:
    return ContextTree.from_strings(SPARSE_CONTEXTS, BINARY)


def minimal_full_mc(depth: int) -> ContextTree:
    """Leaf ``1``, a full subtree of depth ``depth - 3`` under ``00`` and one of
    depth ``depth - 2`` under ``10``; ``3 * 2**(depth-3) + 1`` leaves.

    The drawn instance has depth 5 and closes onto a tree containing every
    history of length 4.
    """
    if depth < 3:
        raise BadParams(f"minimal_full_mc needs depth >= 3, got {depth}")
    ctx: list[Word] = [(1,)]
    ctx += [p + (0, 0) for p in product((0, 1), repeat=depth - 3)]
    ctx += [p + (1, 0) for p in product((0, 1), repeat=depth - 2)]
    return ContextTree.from_contexts(BINARY, ctx)


def _euler_circuit(letters: list[int], start: int) -> list[int]:
    """Vertex sequence of an Euler circuit of the complete digraph with loops."""
    remaining = {v: list(reversed(letters)) for v in letters}
    stack, out = [start], []
    while stack:
        v = stack[-1]
        if remaining[v]:
            stack.append(remaining[v].pop())
        else:
            out.append(stack.pop())
    return out[::-1]


def wide_chain(n: int, length: int) -> Word:
    """Chain word (oldest first) under which the fan of ``wide_r2`` hangs.

    The oldest letter ``a_2`` is unique and the remaining letters walk an Euler
    circuit over the other symbols, ending at ``a_1`` next to the root, so
    every adjacent pair occurs once.  That keeps all factors of length >= 2
    distinct, which the closure size formula needs; it is possible only while
    ``length - 2 <= (n - 1)**2``.  Longer chains repeat the circuit.
    """
    if length == 1:
        return (0,)
    others = [0] + list(range(2, n))
    circuit = _euler_circuit(others, 0)  # starts and ends at 0
    need = length - 1
    tail: list[int] = []
    while len(tail) < need:
        tail = circuit[:-1] + tail if tail else circuit[:]
    return (1,) + tuple(tail[-need:])


def wide_r2(n: int, depth: int) -> ContextTree:
    """Parent tree: a chain of ``depth - 2`` nodes from the root ending in a fan
    of all ``n`` symbols.  ``n**2 + (depth - 2) * (n - 1)`` leaves."""
    if n < 2 or depth < 4:
        raise BadParams(f"wide_r2 needs n >= 2 and depth >= 4, got n={n}, depth={depth}")
    y = wide_chain(n, depth - 2)
    nodes = {y[k:] for k in range(len(y) + 1)}
    nodes |= {(x,) + y for x in range(n)}
    return saturate(ContextTree.from_nodes(Alphabet.of_size(n), nodes))


def wide_r2_attainable(n: int, depth: int) -> bool:
    """Whether the chain above can meet the closure leaf-count formula."""
    return depth - 4 <= (n - 1) ** 2


GENERATORS = {
    "comb": comb,
    "sparse": sparse_example,
    "minfull": minimal_full_mc,
    "wide": wide_r2,
}
