"""Words, the postfix order and finite context trees.

A word is a tuple of symbol indices stored oldest-first: the last element is
the most recent symbol, i.e. the letter next to the root on the context path.
"Postfix" therefore means trailing segment, and the word ``(1, 1, 0, 1)`` is
the context read from the leaf marked 1101 up to the root.

A :class:`ContextTree` keeps its context set together with the derived node
set (all postfixes of all contexts, the root being the empty word).  The node
set is suffix-closed and behaves like a trie keyed newest-symbol-first.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    AlphabetMismatch,
    BadParams,
    EmptyTree,
    InvalidSymbol,
    NotComplete,
    PostfixViolation,
)

Word = tuple[int, ...]
EPSILON: Word = ()


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        if not syms:
            raise BadParams("alphabet must contain at least one symbol")
        if any(not s or any(ch.isspace() for ch in s) for s in syms):
            raise BadParams("alphabet tokens must be non-empty and whitespace-free")
        if len(set(syms)) != len(syms):
            raise BadParams("alphabet tokens must be distinct")

    @classmethod
    def of_size(cls, n: int) -> "Alphabet":
        """Alphabet ``0, 1, ..., n-1`` with decimal tokens."""
        if n < 1:
            raise BadParams(f"alphabet size must be >= 1, got {n}")
        return cls(tuple(str(i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, token: str) -> int:
        try:
            return self.symbols.index(token)
        except ValueError:
            raise InvalidSymbol(f"unknown symbol {token!r}") from None

    def word(self, tokens: Iterable[str] | str) -> Word:
        """Encode tokens as a word.  A plain string is split per character,
        which is only meaningful for single-character alphabets like 0/1."""
        return tuple(self.index(t) for t in tokens)

    def render(self, w: Sequence[int], sep: str = "") -> str:
        return sep.join(self.symbols[i] for i in w)


BINARY = Alphabet(("0", "1"))


def is_postfix(v: Sequence[int], s: Sequence[int]) -> bool:
    """True iff ``v`` is a trailing segment of ``s`` (``s = w + v``)."""
    k = len(v)
    if k > len(s):
        return False
    return k == 0 or tuple(s[-k:]) == tuple(v)


def postfixes(w: Word) -> Iterator[Word]:
    """All postfixes of ``w`` from ``w`` itself down to the empty word."""
    for k in range(len(w) + 1):
        yield w[k:]


def canonical_key(w: Word):
    """Length first, then lexicographic in newest-first (root-to-leaf) order."""
    return (len(w), w[::-1])


def _proper_postfixes(ctx: set) -> set | None:
    """All proper postfixes of the words in ``ctx``, or None if one of them is
    itself in ``ctx``.  A walk stops at the first postfix already seen, since
    everything below it was checked then."""
    seen: set = set()
    for c in ctx:
        for k in range(1, len(c) + 1):
            p = c[k:]
            if p in seen:
                break
            if p in ctx:
                return None
            seen.add(p)
    return seen


class ContextTree:
    """An immutable finite context tree over an :class:`Alphabet`.

    Equality and hashing use the alphabet and the context set.  The empty tree
    (no contexts, no nodes) exists only as a transient value, e.g. the result
    of :func:`subtree` when the requested child is a leaf.
    """

    __slots__ = ("alphabet", "contexts", "nodes", "_depth")

    def __init__(self, alphabet: Alphabet, contexts: frozenset, nodes: frozenset):
        # Trusted constructor; use from_contexts / from_nodes from outside.
        self.alphabet = alphabet
        self.contexts = contexts
        self.nodes = nodes
        self._depth = max(map(len, contexts), default=-1)

    # construction -----------------------------------------------------

    @classmethod
    def from_contexts(cls, alphabet: Alphabet, words: Iterable[Sequence[int]]) -> "ContextTree":
        ctx = set()
        n = alphabet.n
        for w in words:
            w = tuple(w)
            for s in w:
                if not isinstance(s, int) or not 0 <= s < n:
                    raise InvalidSymbol(f"symbol index {s!r} out of range for alphabet of size {n}")
            ctx.add(w)
        proper = _proper_postfixes(ctx)
        if proper is None:
            # rescan in canonical order so the reported pair is deterministic
            for c in sorted(ctx, key=canonical_key):
                for k in range(1, len(c) + 1):
                    if c[k:] in ctx:
                        raise PostfixViolation(c[k:], c)
        return cls(alphabet, frozenset(ctx), frozenset(ctx | proper))

    @classmethod
    def from_strings(cls, strings: Iterable[str], alphabet: Alphabet = BINARY) -> "ContextTree":
        """Convenience for single-character alphabets: ``from_strings(["00", "1"])``."""
        return cls.from_contexts(alphabet, (alphabet.word(s) for s in strings))

    @classmethod
    def from_nodes(cls, alphabet: Alphabet, nodes: Iterable[Word]) -> "ContextTree":
        """Tree whose node set is ``nodes``; must already be suffix-closed."""
        nodes = frozenset(nodes)
        internal = {w[1:] for w in nodes if w}
        return cls(alphabet, frozenset(nodes - internal), nodes)

    @classmethod
    def root_only(cls, alphabet: Alphabet) -> "ContextTree":
        return cls(alphabet, frozenset([EPSILON]), frozenset([EPSILON]))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "ContextTree":
        return cls(alphabet, frozenset(), frozenset())

    @classmethod
    def full(cls, alphabet: Alphabet, depth: int) -> "ContextTree":
        """The complete tree with every leaf at ``depth``."""
        if depth < 0:
            raise BadParams("depth must be >= 0")
        nodes = [w for d in range(depth + 1) for w in product(range(alphabet.n), repeat=d)]
        return cls.from_nodes(alphabet, nodes)

    # basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return self.alphabet.n

    @property
    def is_empty(self) -> bool:
        return not self.contexts

    @property
    def depth(self) -> int:
        if self.is_empty:
            raise EmptyTree("the empty tree has no depth")
        return self._depth

    @property
    def internal_nodes(self) -> frozenset:
        return self.nodes - self.contexts

    def sorted_contexts(self) -> list[Word]:
        return sorted(self.contexts, key=canonical_key)

    def is_leaf(self, w: Word) -> bool:
        return w in self.contexts

    def __contains__(self, w) -> bool:
        return tuple(w) in self.contexts

    def __len__(self) -> int:
        return len(self.contexts)

    def __iter__(self):
        return iter(self.sorted_contexts())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContextTree):
            return NotImplemented
        return self.alphabet == other.alphabet and self.contexts == other.contexts

    def __hash__(self) -> int:
        return hash((self.alphabet, self.contexts))

    def __repr__(self) -> str:
        sep = "" if all(len(s) == 1 for s in self.alphabet.symbols) else "."
        body = ", ".join(self.alphabet.render(c, sep) or "ε" for c in self.sorted_contexts())
        return f"ContextTree({{{body}}})"


def require_nonempty(t: ContextTree) -> None:
    if t.is_empty:
        raise EmptyTree("operation requires a nonempty tree")


def require_same_alphabet(a: ContextTree, b: ContextTree) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet.symbols} != {b.alphabet.symbols}")


def from_contexts(alphabet: Alphabet, words: Iterable[Sequence[int]]) -> ContextTree:
    return ContextTree.from_contexts(alphabet, words)


def incompleteness_witness(t: ContextTree):
    """First (internal node, missing child) pair in canonical order, or None."""
    if t.is_empty:
        return None
    for v in sorted(t.internal_nodes, key=canonical_key):
        for x in range(t.n):
            if (x,) + v not in t.nodes:
                return v, (x,) + v
    return None


def is_complete(t: ContextTree) -> bool:
    # Each non-root node is the child of exactly one internal node, so the
    # count reaches n per internal node only when no child is missing.
    if t.is_empty:
        return False
    return len(t.nodes) - 1 == t.n * (len(t.nodes) - len(t.contexts))


def require_complete(t: ContextTree) -> None:
    require_nonempty(t)
    if not is_complete(t):
        v, missing = incompleteness_witness(t)
        raise NotComplete(f"node {t.alphabet.render(v, ' ') or 'ε'} lacks child {t.alphabet.render(missing, ' ')}")


def complete_hull(t: ContextTree) -> ContextTree:
    """C(T): add every missing sibling along existing paths as a new leaf."""
    require_nonempty(t)
    rng = range(t.n)
    extra = {(x,) + v for v in t.internal_nodes for x in rng}
    if extra <= t.nodes:
        return t
    return ContextTree.from_nodes(t.alphabet, t.nodes | extra)


def parent_tree(t: ContextTree) -> ContextTree:
    """Remove all leaves of a complete tree.  The root-only tree maps to the
    empty tree, which :func:`saturate` maps back."""
    require_complete(t)
    return ContextTree.from_nodes(t.alphabet, t.internal_nodes)


def saturate(p: ContextTree, alphabet: Alphabet | None = None) -> ContextTree:
    """Grow all ``n`` children on every node of ``p``."""
    alphabet = alphabet or p.alphabet
    if alphabet != p.alphabet:
        raise AlphabetMismatch("saturate: alphabet differs from tree alphabet")
    if p.is_empty:
        return ContextTree.root_only(alphabet)
    return saturate_nodes(alphabet, p.nodes)


def saturate_nodes(alphabet: Alphabet, nodes) -> ContextTree:
    """:func:`saturate` on a bare, nonempty, suffix-closed node set."""
    rng = range(alphabet.n)
    children = {(x,) + v for v in nodes for x in rng}
    return ContextTree(alphabet, frozenset(children.difference(nodes)), frozenset(children.union(nodes)))


def rooted_at(t: ContextTree, v: Word) -> ContextTree:
    """The subtree hanging below node ``v``: contexts ``{u : u+v in T*}``.

    Gives the root-only tree when ``v`` is a leaf and the empty tree when ``v``
    is not a node.
    """
    k = len(v)
    if k == 0:
        return t
    if v not in t.nodes:
        return ContextTree.empty(t.alphabet)
    ctx = frozenset(c[:-k] for c in t.contexts if c[-k:] == v)
    nodes = frozenset(w[:-k] for w in t.nodes if len(w) >= k and w[-k:] == v)
    return ContextTree(t.alphabet, ctx, nodes)


def subtree(t: ContextTree, i: int) -> ContextTree:
    """T_i, the subtree rooted at the root's child ``a_i``; empty when that
    child is a leaf or absent."""
    if not 0 <= i < t.n:
        raise InvalidSymbol(f"symbol index {i} out of range")
    if (i,) in t.contexts:
        return ContextTree.empty(t.alphabet)
    return rooted_at(t, (i,))


def all_subtrees(t: ContextTree) -> set[ContextTree]:
    """T_star: the distinct subtrees rooted at every node of ``t``, including
    ``t`` itself and (when ``t`` has a leaf) the root-only tree."""
    if t.is_empty:
        return set()
    out = {t}
    by_suffix: dict[Word, tuple[set, set]] = {}
    for w in t.nodes:
        # group nodes by every nonempty postfix they extend
        for k in range(1, len(w) + 1):
            ctx, nodes = by_suffix.setdefault(w[-k:], (set(), set()))
            nodes.add(w[:-k])
            if w in t.contexts:
                ctx.add(w[:-k])
    for ctx, nodes in by_suffix.values():
        out.add(ContextTree(t.alphabet, frozenset(ctx), frozenset(nodes)))
    return out


def counts(t: ContextTree) -> tuple[int, int, int]:
    """(depth, number of leaves, number of vertices excluding the root)."""
    require_nonempty(t)
    return t.depth, len(t.contexts), len(t.nodes) - 1


def count_complete_trees(n: int, depth: int) -> int:
    """Exact number of complete n-ary context trees of depth at most ``depth``."""
    if n < 1 or depth < 0:
        raise BadParams("need n >= 1 and depth >= 0")
    f = 1
    for _ in range(depth):
        f = 1 + f ** n
    return f
