import dataclasses
import random

import pytest

from incrccg.categories import arity, cat
from incrccg.derivation import (DerivationError, Node, bracketed, digest, frontier,
                                from_record, internal_count, is_left_comb, leaf, leaves,
                                make_node, pretty, replace, right_frontier, sigma, subtree,
                                to_record, well_formed)
from incrccg.generate import (chain_derivation, left_comb, random_derivation, right_comb,
                              shapes)
from incrccg.semantics import composition_weight, reduction_steps

from conftest import F0

FLOWERS = """\
s/pp  >1  [0,3)  the flowers sent
  s/(s\\np)  >0  [0,2)  the flowers
    s/(s\\np)/n  lex  [0,1)  the
    n  lex  [1,2)  flowers
  s\\np/pp  lex  [2,3)  sent"""

WHOSE = """\
q  >0  [0,5)  whose cat did fred find
  q/(s/np)  >0  [0,2)  whose cat
    q/(s/np)/n  lex  [0,1)  whose
    n  lex  [1,2)  cat
  s/np  >1  [2,5)  did fred find
    s/(s\\np)  >1  [2,4)  did fred
      s/s  lex  [2,3)  did
      s/(s\\np)  lex  [3,4)  fred
    s\\np/np  lex  [4,5)  find"""

JOHN_RIGHT = """\
s  >0  [0,3)  john loves mary
  s/vp  lex  [0,1)  john
  vp  >0  [1,3)  loves mary
    vp/np  lex  [1,2)  loves
    np  lex  [2,3)  mary"""


def test_make_node_examples(flowers_derivation):
    the_flowers = make_node(F0, leaf("the", "s/(s\\np)/n"), leaf("flowers", "n"))
    assert the_flowers.cat == cat("s/(s\\np)")
    assert flowers_derivation.cat == cat("s/pp")
    with pytest.raises(DerivationError):
        make_node(F0, leaf("x", "np"), leaf("y", "np"))


def test_internal_count():
    assert internal_count(leaf("x", "np")) == 0
    assert internal_count(make_node(F0, leaf("a", "a/b"), leaf("b", "b"))) == 1
    assert internal_count(left_comb(4)) == 3


def test_sigma():
    assert sigma(leaf("x", "np")) == 0
    assert sigma(right_comb(6)) == 0
    assert sigma(left_comb(4)) == 3


def test_right_frontier(john_right, john_left):
    assert [c for _, c in right_frontier(john_right)] == [cat("s"), cat("vp"), cat("np")]
    assert [p for p, _ in right_frontier(john_right)] == [(), ("R",), ("R", "R")]
    assert right_frontier(leaf("x", "np")) == [((), cat("np"))]
    assert [c for _, c in right_frontier(john_left)] == [cat("s"), cat("np")]


def test_pretty_golden(flowers_derivation, whose_derivation, john_right):
    assert pretty(flowers_derivation) == FLOWERS
    assert pretty(whose_derivation) == WHOSE
    assert pretty(john_right) == JOHN_RIGHT


def test_bracketed(john_left):
    assert bracketed(john_left) == "((john >1 loves) >0 mary)"


def test_record_round_trip(whose_derivation):
    rec = to_record(whose_derivation)
    assert from_record(rec) == whose_derivation
    assert digest(from_record(rec)) == digest(whose_derivation)


def test_record_with_wrong_category_rejected(john_left):
    rec = to_record(john_left)
    rec["cat"] = "np"
    with pytest.raises(DerivationError):
        from_record(rec)


def test_subtree_and_replace(john_left):
    assert subtree(john_left, ("L", "R")).word == "loves"
    swapped = replace(john_left, ("R",), leaf("sue", "np"))
    assert [lf.word for lf in leaves(swapped)] == ["john", "loves", "sue"]
    assert swapped.cat == john_left.cat


def test_functor_and_argument(bcbc_derivation):
    inner = bcbc_derivation.right
    assert inner.functor.word == "bd"
    assert bcbc_derivation.functor.word == "ab"


@pytest.mark.parametrize("n_leaves", range(1, 8))
def test_sigma_bound_tight_exactly_on_left_combs(n_leaves):
    for s in shapes(n_leaves):
        d = chain_derivation(s)
        n = internal_count(d)
        bound = n * (n - 1) // 2
        assert sigma(d) <= bound
        assert (sigma(d) == bound) == is_left_comb(d) or n <= 1


@pytest.mark.parametrize("seed", range(5))
def test_random_derivations_well_formed(seed):
    rng = random.Random(seed)
    for _ in range(100):
        d = random_derivation(rng, rng.randint(0, 12))
        assert well_formed(d)
        assert internal_count(d) == len(leaves(d)) - 1
        assert reduction_steps(d.sem, arity(d.cat)) == composition_weight(d.sem)


def test_mutated_child_category_rejected(john_left):
    bad_leaf = dataclasses.replace(john_left.right, cat=cat("pp"))
    bad = Node(john_left.rule, john_left.left, bad_leaf, john_left.cat, john_left.sem)
    assert not well_formed(bad)
    with pytest.raises(dataclasses.FrozenInstanceError):
        john_left.cat = cat("np")


def test_mutated_node_category_rejected(john_left):
    bad = dataclasses.replace(john_left, cat=cat("vp"))
    assert not well_formed(bad)


def test_frontier_words(whose_derivation):
    assert [w for w, _ in frontier(whose_derivation)] == "whose cat did fred find".split()
