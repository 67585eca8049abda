import pytest
from hypothesis import given

import oracles
from conftest import NON_PM_TREE, T, complete_pairs, complete_trees
from pmtree import (
    BINARY,
    Alphabet,
    ContextTree,
    contained_at_root,
    covers_at_root,
    intersection_all,
    intersection_at_root,
    union_all,
    union_at_root,
)
from pmtree.errors import AlphabetMismatch, EmptyTree, NotComplete
from pmtree.lattice import containment_witness, covers_witness

A = T("00", "10", "01", "11")
B = T("00", "10", "01")


def test_containment_counterexample():
    assert contained_at_root(B, A)
    assert not contained_at_root(A, B)
    assert containment_witness(A, B) == (1, 1)


def test_incomplete_pair_breaks_equivalence():
    # condition (ii) holds for (A, B) while containment fails
    assert covers_at_root(A, B)
    assert not contained_at_root(A, B)
    # B is contained in A, yet 11 has no postfix among B's contexts
    assert contained_at_root(B, A)
    assert covers_witness(B, A) == (1, 1)


def test_root_is_bottom(pm_tree):
    root = ContextTree.root_only(BINARY)
    assert contained_at_root(root, pm_tree)
    assert union_at_root(pm_tree, root) == pm_tree
    assert intersection_at_root(pm_tree, root) == root


def test_covers_examples(pm_tree):
    assert covers_at_root(pm_tree, pm_tree)
    assert covers_at_root(T("0", "1"), pm_tree)


def test_reference_pair(pm_tree):
    small = T(*NON_PM_TREE)
    assert union_at_root(small, pm_tree) == pm_tree
    assert intersection_at_root(small, pm_tree) == small
    assert union_at_root(pm_tree, pm_tree) == pm_tree


def test_errors(pm_tree):
    with pytest.raises(NotComplete):
        union_at_root(B, A)
    with pytest.raises(AlphabetMismatch):
        intersection_at_root(pm_tree, ContextTree.full(Alphabet.of_size(3), 1))
    with pytest.raises(EmptyTree):
        contained_at_root(ContextTree.empty(BINARY), pm_tree)
    with pytest.raises(EmptyTree):
        union_all([])


@given(complete_pairs())
def test_containment_equivalence_on_complete_pairs(pair):
    a, b = pair
    assert contained_at_root(a, b) == covers_at_root(a, b)
    assert contained_at_root(a, b) == oracles.contained(a.contexts, b.contexts)
    assert covers_at_root(a, b) == oracles.covers(a.contexts, b.contexts)


@given(complete_pairs())
def test_node_set_ops_match_literal_formulas(pair):
    a, b = pair
    assert union_at_root(a, b).contexts == oracles.literal_union(a.contexts, b.contexts)
    assert intersection_at_root(a, b).contexts == oracles.literal_intersection(a.contexts, b.contexts)


@given(complete_pairs())
def test_meet_join_identities(pair):
    a, b = pair
    u = union_at_root(a, b).contexts
    i = intersection_at_root(a, b).contexts
    assert i & u == a.contexts & b.contexts
    assert i | u == a.contexts | b.contexts


@given(complete_pairs())
def test_lattice_laws(pair):
    a, b = pair
    u, i = union_at_root(a, b), intersection_at_root(a, b)
    assert u == union_at_root(b, a) and i == intersection_at_root(b, a)
    assert contained_at_root(i, a) and contained_at_root(a, u)
    assert union_at_root(a, i) == a
    assert intersection_at_root(a, u) == a


@given(complete_trees(n=2), complete_trees(n=2), complete_trees(n=2))
def test_associativity_and_folds(a, b, c):
    assert union_at_root(union_at_root(a, b), c) == union_at_root(a, union_at_root(b, c))
    assert intersection_at_root(intersection_at_root(a, b), c) == intersection_at_root(
        a, intersection_at_root(b, c)
    )
    assert union_all([a, b, c]) == union_at_root(union_at_root(a, b), c)
    assert intersection_all([c, b, a]) == intersection_at_root(a, intersection_at_root(b, c))


@given(complete_trees(n=3), complete_trees(n=3))
def test_containment_is_transitive(a, b):
    u = union_at_root(a, b)
    if contained_at_root(a, b):
        assert contained_at_root(a, u)
    assert contained_at_root(intersection_at_root(a, b), u)
