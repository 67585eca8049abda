"""Stochastic context trees and their first-order Markov chain on leaves.

On a perfect-memory tree the context after emitting symbol ``a`` from context
``c`` is the unique context that is a postfix of ``c + (a,)``.  The leaves
therefore form the state space of an ordinary Markov chain, with

    M[c][u] = sum of P(a | c) over symbols a whose next context is u.

Probabilities given as ``Fraction`` (or int) stay exact end to end; anything
else is handled as float.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping, Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import (
    IncompleteTable,
    InvalidDistribution,
    NonConvergence,
    NotPerfectMemory,
    UnknownContext,
)
from .pm import is_pm_def4
from .rng import SplitMix64
from .tree import Alphabet, ContextTree, Word, canonical_key, require_nonempty

FLOAT_TOL = 1e-9


def _is_exact(p) -> bool:
    return isinstance(p, (Fraction, int)) and not isinstance(p, bool)


def next_context(t: ContextTree, c: Word, a: int) -> Word:
    c = tuple(c)
    if c not in t.contexts:
        raise UnknownContext(f"{c!r} is not a context of the tree")
    ca = c + (a,)
    for k in range(len(ca) + 1):
        if ca[k:] in t.contexts:
            return ca[k:]
    raise NotPerfectMemory(f"no context is a postfix of {ca!r}")


class Scot:
    """A complete perfect-memory tree with a next-symbol distribution per leaf."""

    def __init__(self, tree: ContextTree, dists: Mapping[Sequence[int], Sequence]):
        require_nonempty(tree)
        verdict = is_pm_def4(tree)
        if not verdict:
            raise NotPerfectMemory(verdict.witness.describe(tree))
        self.tree = tree
        n = tree.n
        clean: dict[Word, tuple] = {}
        for c, d in dists.items():
            c = tuple(c)
            if c not in tree.contexts:
                raise UnknownContext(f"distribution given for non-context {c!r}")
            d = tuple(d)
            if len(d) != n:
                raise InvalidDistribution(f"context {c!r}: expected {n} probabilities, got {len(d)}")
            clean[c] = d
        missing = tree.contexts - clean.keys()
        if missing:
            raise InvalidDistribution(f"no distribution for context {min(missing, key=canonical_key)!r}")
        self.exact = all(_is_exact(p) for d in clean.values() for p in d)
        for c, d in clean.items():
            if self.exact:
                d = tuple(Fraction(p) for p in d)
                total = sum(d)
                ok = total == 1
            else:
                d = tuple(float(p) for p in d)
                total = sum(d)
                ok = abs(total - 1.0) <= FLOAT_TOL
            if any(p < 0 for p in d):
                raise InvalidDistribution(f"context {c!r}: negative probability")
            if not ok:
                raise InvalidDistribution(f"context {c!r}: probabilities sum to {total}")
            clean[c] = d
        self.dists = clean
        self.states: list[Word] = tree.sorted_contexts()
        self.transitions = {(c, a): next_context(tree, c, a) for c in self.states for a in range(n)}

    @property
    def alphabet(self) -> Alphabet:
        return self.tree.alphabet

    def __eq__(self, other):
        if not isinstance(other, Scot):
            return NotImplemented
        return self.tree == other.tree and self.dists == other.dists

    def __repr__(self):
        return f"Scot({self.tree!r}, exact={self.exact})"


def from_full_mc(alphabet: Alphabet, order: int, table: Mapping[Sequence[int], Sequence]) -> Scot:
    """An order-``order`` chain given by histories (oldest first) of that length."""
    tree = ContextTree.full(alphabet, order)
    given = {tuple(h) for h in table}
    for h in product(range(alphabet.n), repeat=order):
        if h not in given:
            raise IncompleteTable(f"no distribution for history {h!r}")
    return Scot(tree, table)


@dataclass(frozen=True)
class MarkovChain:
    states: list[Word]
    matrix: list[list]  # rows indexed like ``states``
    alphabet: Alphabet
    exact: bool = False

    def as_array(self) -> np.ndarray:
        return np.array([[float(p) for p in row] for row in self.matrix], dtype=float)

    def row(self, c: Word) -> dict[Word, object]:
        i = self.states.index(tuple(c))
        return {u: p for u, p in zip(self.states, self.matrix[i]) if p}


def build_markov(s: Scot) -> MarkovChain:
    index = {c: i for i, c in enumerate(s.states)}
    zero = Fraction(0) if s.exact else 0.0
    matrix = []
    for c in s.states:
        row = [zero] * len(s.states)
        for a, p in enumerate(s.dists[c]):
            row[index[s.transitions[(c, a)]]] += p
        matrix.append(row)
    return MarkovChain(list(s.states), matrix, s.alphabet, s.exact)


@dataclass(frozen=True)
class Stationary:
    pi: np.ndarray
    iterations: int
    unique: bool  # exactly one closed communicating class
    damped: bool  # the averaging fallback was needed


def has_unique_stationary(m: np.ndarray) -> bool:
    ncomp, labels = connected_components(m > 0, directed=True, connection="strong")
    closed = set(range(ncomp))
    rows, cols = np.nonzero(m > 0)
    for i, j in zip(rows, cols):
        if labels[i] != labels[j]:
            closed.discard(labels[i])
    return len(closed) == 1


def stationary(
    mc: MarkovChain,
    tol: float = 1e-14,
    max_iters: int = 10**6,
    init: Sequence[float] | None = None,
    damped: bool = True,
) -> Stationary:
    """Power iteration from the uniform vector until ``|pi M - pi|_1 <= tol``.

    The error in ``pi`` is roughly the residual divided by the spectral gap,
    hence a default well below the usual 1e-12 accuracy target.

    With ``damped`` the second half of the budget iterates the lazy chain
    ``(I + M) / 2``, which has the same fixed points and is aperiodic.
    """
    m = mc.as_array()
    k = len(mc.states)
    pi = np.full(k, 1.0 / k) if init is None else np.asarray(init, dtype=float)
    switch = max_iters // 2 if damped else max_iters + 1
    for it in range(max_iters + 1):
        nxt = pi @ m
        if np.abs(nxt - pi).sum() <= tol:
            return Stationary(pi, it, has_unique_stationary(m), it > switch)
        pi = 0.5 * (pi + nxt) if it >= switch else nxt
        pi = pi / pi.sum()
    raise NonConvergence(f"power iteration did not reach tol={tol} in {max_iters} iterations")


def _cumulative(s: Scot) -> dict[Word, list[float]]:
    out = {}
    for c, d in s.dists.items():
        acc, cum = 0.0, []
        for p in d:
            acc += float(p)
            cum.append(acc)
        out[c] = cum
    return out


def _draw(cum: list[float], dist: Sequence, u: float) -> int:
    i = bisect_right(cum, u)
    if i == len(cum):  # rounding left u above the last partial sum
        i = max(j for j, p in enumerate(dist) if p > 0)
    return i


def trajectory(s: Scot, steps: int, seed: int, init: Sequence[int] | None = None) -> Iterator[tuple[Word, int]]:
    """Yield ``(context, emitted symbol)`` for each step of a simulation."""
    rng = SplitMix64(seed)
    if init is None:
        pi = stationary(build_markov(s)).pi
        cum = np.cumsum(pi).tolist()
        c = s.states[_draw(cum, pi.tolist(), rng.random())]
    else:
        c = tuple(init)
        if c not in s.tree.contexts:
            raise UnknownContext(f"initial context {c!r} is not a leaf")
    cums = _cumulative(s)
    trans = s.transitions
    for u in rng.uniforms(steps).tolist():
        a = _draw(cums[c], s.dists[c], u)
        yield c, a
        c = trans[(c, a)]


def simulate(s: Scot, steps: int, seed: int, init: Sequence[int] | None = None) -> list[int]:
    return [a for _, a in trajectory(s, steps, seed, init)]


def conditional_frequencies(s: Scot, steps: int, seed: int, init=None) -> dict[Word, np.ndarray]:
    """Empirical next-symbol frequencies per context over one simulation."""
    counts = {c: np.zeros(s.tree.n) for c in s.states}
    for c, a in trajectory(s, steps, seed, init):
        counts[c][a] += 1
    return {c: v / v.sum() if v.sum() else v for c, v in counts.items()}
