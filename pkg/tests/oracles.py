"""Brute-force reference implementations, written straight from the definitions.

Nothing here uses node sets, tries or the trimming algorithm; words are plain
tuples and every check is a nested loop over contexts.
"""
from itertools import product


def postfix(v, s):
    return len(v) <= len(s) and tuple(s[len(s) - len(v):]) == tuple(v)


def contained(a_ctx, b_ctx):
    return all(any(postfix(a, b) for b in b_ctx) for a in a_ctx)


def covers(a_ctx, b_ctx):
    return all(any(postfix(a, b) for a in a_ctx) for b in b_ctx)


def literal_intersection(a_ctx, b_ctx):
    return {u for u in a_ctx if any(postfix(u, c) for c in b_ctx)} | {
        u for u in b_ctx if any(postfix(u, c) for c in a_ctx)
    }


def literal_union(a_ctx, b_ctx):
    return {u for u in a_ctx if any(postfix(c, u) for c in b_ctx)} | {
        u for u in b_ctx if any(postfix(c, u) for c in a_ctx)
    }


def perfect_memory(ctx, n):
    return all(any(postfix(u, c + (i,)) for u in ctx) for c in ctx for i in range(n))


def complete(ctx, n):
    """Every proper postfix of a context (an internal node) has all n
    one-letter extensions lying on some context path."""
    if not ctx:
        return False
    internal = {c[k:] for c in ctx for k in range(1, len(c) + 1)}
    return all(any(postfix((x,) + v, c) for c in ctx) for v in internal for x in range(n))


def subtree_contexts(ctx, suffix):
    k = len(suffix)
    return {c[: len(c) - k] for c in ctx if len(c) >= k and tuple(c[len(c) - k:]) == tuple(suffix)}


def complete_trees(n, depth):
    """All complete trees of depth <= depth, as context sets (oldest first)."""
    if depth == 0:
        return [frozenset([()])]
    smaller = complete_trees(n, depth - 1)
    out = [frozenset([()])]
    for kids in product(smaller, repeat=n):
        out.append(frozenset(c + (x,) for x, sub in enumerate(kids) for c in sub))
    return out


def complete_trees_by_subsets(n, depth):
    """Count complete trees of depth <= depth through their parent trees: every
    suffix-closed set of words of length < depth (plus the empty set)."""
    words = [w for d in range(depth) for w in product(range(n), repeat=d)]
    count = 0
    for mask in range(1 << len(words)):
        chosen = {w for i, w in enumerate(words) if mask >> i & 1}
        if all(w[1:] in chosen for w in chosen if w):
            count += 1
    return count


def closure_by_definition(ctx, n, depth):
    """Intersection of all perfect-memory trees of depth <= depth containing
    the tree, via the literal intersection formula."""
    result = None
    for g in complete_trees(n, depth):
        if perfect_memory(g, n) and contained(ctx, g):
            result = set(g) if result is None else literal_intersection(result, g)
    return result
