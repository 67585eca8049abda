"""Perfect-memory trees: four checkers, the closure, leaf-set chains, metrics.

A tree has perfect memory when for every context ``c`` and symbol ``a`` some
context is a postfix of ``c + (a,)``, so the next context is always known.
Each checker returns a :class:`Verdict`; failures carry a :class:`PmWitness`
that can be re-checked on its own with :meth:`PmWitness.verify`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import NotContained, NotPerfectMemory
from .lattice import containment_witness, contained_at_root, union_all
from .tree import (
    ContextTree,
    Word,
    all_subtrees,
    complete_hull,
    incompleteness_witness,
    is_complete,
    is_postfix,
    require_complete,
    require_nonempty,
    saturate,
    saturate_nodes,
    subtree,
)

INCOMPLETE = "incomplete"
MISSING_NEXT = "missing-next-context"
UNCONTAINED_SUBTREE = "uncontained-subtree"
PREFIX_NOT_POSTFIX = "prefix-not-postfix"


@dataclass(frozen=True)
class PmWitness:
    """Counterexample to perfect memory.

    ``incomplete``: ``context`` is an internal node lacking child ``word``.
    ``missing-next-context``: no context is a postfix of ``context + (symbol,)``.
    ``uncontained-subtree``: ``word`` is a context of T_symbol but no node of T.
    ``prefix-not-postfix``: ``word`` is a prefix of ``context`` (a context
    minus at least its last letter) but a postfix of no context.
    """

    kind: str
    context: Word | None = None
    symbol: int | None = None
    word: Word | None = None

    def verify(self, t: ContextTree) -> bool:
        """Re-check by brute force that this witness is a genuine violation."""
        ctx = t.sorted_contexts()
        if self.kind == INCOMPLETE:
            v, child = self.context, self.word
            return (
                any(is_postfix(v, c) and c != v for c in ctx)
                and len(child) == len(v) + 1
                and child[1:] == v
                and not any(is_postfix(child, c) for c in ctx)
            )
        if self.kind == MISSING_NEXT:
            ca = self.context + (self.symbol,)
            return self.context in t.contexts and not any(is_postfix(u, ca) for u in ctx)
        if self.kind == UNCONTAINED_SUBTREE:
            full = self.word + (self.symbol,)
            return full in t.contexts and not any(is_postfix(self.word, c) for c in ctx)
        if self.kind == PREFIX_NOT_POSTFIX:
            u = self.word
            return (
                self.context in t.contexts
                and self.context[: len(u)] == u
                and not any(is_postfix(u, c) for c in ctx)
            )
        return False

    def describe(self, t: ContextTree) -> str:
        r = lambda w: t.alphabet.render(w, " ") or "ε"  # noqa: E731
        if self.kind == INCOMPLETE:
            return f"incomplete: node [{r(self.context)}] lacks child [{r(self.word)}]"
        if self.kind == MISSING_NEXT:
            return (
                f"no context is a postfix of [{r(self.context + (self.symbol,))}] "
                f"(context [{r(self.context)}], symbol {t.alphabet.symbols[self.symbol]})"
            )
        if self.kind == UNCONTAINED_SUBTREE:
            return (
                f"subtree T_{t.alphabet.symbols[self.symbol]} has context [{r(self.word)}] "
                f"which is a postfix of no context"
            )
        return f"[{r(self.word)}] is a prefix of context [{r(self.context)}] but a postfix of no context"


class Verdict(NamedTuple):
    holds: bool
    witness: PmWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


_OK = Verdict(True)


def _completeness(t: ContextTree) -> Verdict | None:
    w = incompleteness_witness(t)
    if w is None:
        return None
    return Verdict(False, PmWitness(INCOMPLETE, context=w[0], word=w[1]))


def is_pm_def4(t: ContextTree) -> Verdict:
    """Exhaustive scan of every (context, symbol) pair."""
    require_nonempty(t)
    ctx = t.contexts
    for c in t.sorted_contexts():
        for i in range(t.n):
            ca = c + (i,)
            if not any(ca[k:] in ctx for k in range(len(ca) + 1)):
                return Verdict(False, PmWitness(MISSING_NEXT, context=c, symbol=i))
    return _OK


def is_pm_thm2(t: ContextTree) -> Verdict:
    """Complete, and every nonempty root-child subtree T_i is contained in T."""
    require_nonempty(t)
    bad = _completeness(t)
    if bad is not None:
        return bad
    for i in range(t.n):
        ti = subtree(t, i)
        if ti.is_empty:
            continue
        w = containment_witness(ti, t)
        if w is not None:
            return Verdict(False, PmWitness(UNCONTAINED_SUBTREE, symbol=i, word=w))
    return _OK


def is_pm_cor1(t: ContextTree) -> Verdict:
    """Complete, and each context minus its last letter is a postfix of a context."""
    require_nonempty(t)
    bad = _completeness(t)
    if bad is not None:
        return bad
    for c in t.sorted_contexts():
        if c and c[:-1] not in t.nodes:
            return Verdict(False, PmWitness(PREFIX_NOT_POSTFIX, context=c, word=c[:-1]))
    return _OK


def is_pm_cor2(t: ContextTree) -> Verdict:
    """Complete, and every prefix of every context is a postfix of a context."""
    require_nonempty(t)
    bad = _completeness(t)
    if bad is not None:
        return bad
    for c in t.sorted_contexts():
        for k in range(len(c)):
            if c[:k] not in t.nodes:
                return Verdict(False, PmWitness(PREFIX_NOT_POSTFIX, context=c, word=c[:k]))
    return _OK


CRITERIA = {
    "def4": is_pm_def4,
    "thm2": is_pm_thm2,
    "cor1": is_pm_cor1,
    "cor2": is_pm_cor2,
}


def is_perfect_memory(t: ContextTree) -> bool:
    return bool(is_pm_cor1(t))


# closure --------------------------------------------------------------


def closure_oracle(t: ContextTree) -> ContextTree:
    """Union at the root of every subtree of C(t)."""
    require_nonempty(t)
    return union_all(all_subtrees(complete_hull(t)))


@dataclass
class TrimStats:
    iterations: int = 0
    insertions: int = 0
    work: int = 0  # symbols read or written: word slices, inserts, saturation


def closure_trim_traced(t: ContextTree) -> tuple[ContextTree, TrimStats]:
    """Trimming algorithm on a complete tree, returning its work counters.

    Works on the parent tree's node set W.  Nodes are visited deepest first;
    when a node's word minus its newest letter is missing from W, that word
    and its missing postfixes are inserted (all strictly shallower, so they
    are visited later).  The result saturates the final W.
    """
    require_complete(t)
    stats = TrimStats()
    work = set(t.internal_nodes)
    if not work:
        return t, stats
    depth = max(map(len, work))
    buckets: list[list[Word]] = [[] for _ in range(depth + 1)]
    for w in work:
        buckets[len(w)].append(w)
        stats.work += len(w) + 1
    # Visiting order within a level cannot change the result or the counters:
    # the final W is the factor closure of the start set either way.
    for d in range(depth, 1, -1):
        for w in buckets[d]:
            stats.iterations += 1
            u = w[:-1]
            stats.work += d
            while u not in work:
                work.add(u)
                buckets[len(u)].append(u)
                stats.insertions += 1
                stats.work += len(u) + 1
                u = u[1:]
    out = saturate_nodes(t.alphabet, work)
    # saturation builds n children of length |w| + 1 for every w in W
    stats.work += t.n * sum(len(w) + 2 for w in work)
    return out, stats


def closure_trim(t: ContextTree) -> ContextTree:
    return closure_trim_traced(t)[0]


def closure(t: ContextTree, method: str = "trim") -> ContextTree:
    """Perfect-memory closure of any nonempty tree (completed first)."""
    require_nonempty(t)
    if method == "oracle":
        return closure_oracle(t)
    if method != "trim":
        raise ValueError(f"unknown closure method {method!r}")
    return closure_trim(complete_hull(t))


# chains of complete leaf sets -----------------------------------------


def pm_chain(a: ContextTree, b: ContextTree) -> list[ContextTree]:
    """Trees ``a, T_1, ..., T_k, b``, each obtained from the previous one by
    cutting the deepest complete leaf set not present in ``b``."""
    for name, t in (("first", a), ("second", b)):
        v = is_pm_cor1(t)
        if not v:
            raise NotPerfectMemory(f"{name} tree is not perfect-memory: {v.witness.describe(t)}")
    if not contained_at_root(b, a) or a == b:
        raise NotContained("second tree must be strictly contained in the first at the root")
    internal = set(a.internal_nodes)
    cuts = sorted(internal - b.internal_nodes, key=lambda w: (-len(w), w[::-1]))
    chain = [a]
    for p in cuts:
        internal.remove(p)
        chain.append(saturate(ContextTree.from_nodes(a.alphabet, internal)))
    return chain


# metrics --------------------------------------------------------------


@dataclass(frozen=True)
class TreeMetrics:
    depth: int
    leaf_count: int
    node_count: int
    r1: Fraction
    r2: Fraction
    completed: bool = False  # input was incomplete and metrics describe C(T)
    closure_leaf_count: int = 0

    def as_dict(self) -> dict:
        return {
            "depth": self.depth,
            "leaf_count": self.leaf_count,
            "node_count": self.node_count,
            "closure_leaf_count": self.closure_leaf_count,
            "r1": str(self.r1),
            "r2": str(self.r2),
            "r1_float": float(self.r1),
            "r2_float": float(self.r2),
            "completed": self.completed,
        }


def metrics(t: ContextTree) -> TreeMetrics:
    require_nonempty(t)
    completed = not is_complete(t)
    if completed:
        t = complete_hull(t)
    ell = t.depth
    nt = len(t.contexts)
    nbar = len(closure_trim(t).contexts)
    r1 = Fraction(nt, t.n ** ell)
    r2 = Fraction(nbar, nt)
    # the root-only tree has depth 0 but r2 = 1
    assert 1 <= r2 <= max(ell, 1), f"r2={r2} outside [1, {ell}]"
    return TreeMetrics(ell, nt, len(t.nodes) - 1, r1, r2, completed, nbar)
