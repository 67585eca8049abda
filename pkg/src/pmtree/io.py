"""Line-based text format for trees and SCOTs, plus CSV for transition matrices.

    # comments and blank lines are ignored
    ctree v1                      (or: scot v1)
    alphabet 0 1
    context 0 0                   oldest symbol first
    context 1 1 : 1/4 3/4         scot only: probabilities in alphabet order

An empty token list (``context`` alone) is the root context.  Rendering is
canonical: contexts are sorted by length, then root-to-leaf, so
``render(parse(text))`` is byte-stable.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from pathlib import Path

from .errors import ContextTreeError, ParseError
from .scot import MarkovChain, Scot
from .tree import Alphabet, ContextTree, Word

MAX_DEPTH = 32
TREE_HEADER = "ctree v1"
SCOT_HEADER = "scot v1"


def _parse_prob(tok: str, lineno: int):
    try:
        if "/" in tok:
            num, den = tok.split("/")
            return Fraction(int(num), int(den))
        if tok.lstrip("+-").isdigit():
            return Fraction(int(tok))
        return float(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad probability {tok!r}", lineno) from None


def parse(text: str) -> ContextTree | Scot:
    header = None
    alphabet: Alphabet | None = None
    words: dict[Word, int] = {}
    extended: dict[Word, int] = {}  # proper postfix -> line of a longer context
    dists: dict[Word, tuple] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            if line not in (TREE_HEADER, SCOT_HEADER):
                raise ParseError(f"expected '{TREE_HEADER}' or '{SCOT_HEADER}', got {line!r}", lineno)
            header = line
            continue
        keyword, *tail = line.split(None, 1)
        rest = tail[0] if tail else ""
        if keyword == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate alphabet line", lineno)
            if ":" in rest:
                raise ParseError("alphabet tokens may not contain ':'", lineno)
            try:
                alphabet = Alphabet(tuple(rest.split()))
            except ContextTreeError as e:
                raise ParseError(str(e), lineno) from None
        elif keyword == "context":
            if alphabet is None:
                raise ParseError("context before alphabet", lineno)
            probs = None
            if header == SCOT_HEADER:
                if ":" not in rest:
                    raise ParseError("scot context needs ': p1 ... pn'", lineno)
                rest, _, ptxt = rest.partition(":")
                probs = tuple(_parse_prob(p, lineno) for p in ptxt.split())
                if len(probs) != alphabet.n:
                    raise ParseError(f"expected {alphabet.n} probabilities, got {len(probs)}", lineno)
            elif ":" in rest:
                raise ParseError("probabilities are only allowed in scot files", lineno)
            try:
                w = alphabet.word(rest.split())
            except ContextTreeError as e:
                raise ParseError(str(e), lineno) from None
            if len(w) > MAX_DEPTH:
                raise ParseError(f"context longer than {MAX_DEPTH}", lineno)
            if w in words:
                raise ParseError(f"duplicate context (first on line {words[w]})", lineno)
            if w in extended:
                raise ParseError(f"PostfixViolation: context is a proper postfix of the context on line {extended[w]}", lineno)
            for k in range(1, len(w) + 1):
                if w[k:] in words:
                    raise ParseError(
                        f"PostfixViolation: context on line {words[w[k:]]} is a proper postfix of this one", lineno
                    )
                extended.setdefault(w[k:], lineno)
            words[w] = lineno
            if probs is not None:
                dists[w] = probs
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if header is None:
        raise ParseError("empty file: missing header")
    if alphabet is None:
        raise ParseError("missing alphabet line")
    tree = ContextTree.from_contexts(alphabet, words)
    if header == TREE_HEADER:
        return tree
    if any(isinstance(p, float) for d in dists.values() for p in d):
        dists = {c: tuple(float(p) for p in d) for c, d in dists.items()}
    try:
        return Scot(tree, dists)
    except ContextTreeError as e:
        raise ParseError(f"{type(e).__name__}: {e}") from None


def load(path: str | Path) -> ContextTree | Scot:
    return parse(Path(path).read_text(encoding="utf-8"))


def load_tree(path: str | Path) -> ContextTree:
    v = load(path)
    return v.tree if isinstance(v, Scot) else v


def format_prob(p) -> str:
    if isinstance(p, Fraction):
        return str(p)
    return format(float(p), ".17g")


def render(value: ContextTree | Scot) -> str:
    if isinstance(value, Scot):
        tree, header = value.tree, SCOT_HEADER
    else:
        tree, header = value, TREE_HEADER
    lines = [header, "alphabet " + " ".join(tree.alphabet.symbols)]
    for c in tree.sorted_contexts():
        line = ("context " + tree.alphabet.render(c, " ")).rstrip()
        if isinstance(value, Scot):
            line += " : " + " ".join(format_prob(p) for p in value.dists[c])
        lines.append(line)
    return "\n".join(lines) + "\n"


def state_label(alphabet: Alphabet, c: Word) -> str:
    return alphabet.render(c, ".") if c else "ε"


def render_matrix_csv(mc: MarkovChain) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    labels = [state_label(mc.alphabet, c) for c in mc.states]
    w.writerow(["state"] + labels)
    for label, row in zip(labels, mc.matrix):
        w.writerow([label] + [format_prob(p) for p in row])
    return buf.getvalue()
