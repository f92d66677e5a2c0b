import time

import pytest

from incrccg.categories import cat
from incrccg.derivation import internal_count
from incrccg.generate import chain_derivation, left_comb, left_comb_shape, shapes
from incrccg.lexicon import bundled_lexicon
from incrccg.oracle import (GuardError, MAX_ENUMERATE, all_rewrite_sequences, catalan,
                            chain_items, enumerate_all, enumerate_sentence, explore_rewrites,
                            sem_partition)
from incrccg.rewrite import normalize


def test_seven_chain():
    t0 = time.perf_counter()
    ds = enumerate_all(chain_items(7))
    elapsed = time.perf_counter() - t0
    assert len(ds) == 132
    assert {d.cat for d in ds} == {cat("x0/x7")}
    assert len(set(ds)) == 132
    assert len(sem_partition(ds)) == 1
    assert elapsed < 1.0


def test_two_items():
    assert len(enumerate_all([("a", cat("a/b")), ("b", cat("b"))])) == 1


def test_five_chain():
    assert len(enumerate_all(chain_items(5))) == 14


@pytest.mark.parametrize("length", range(1, 9))
def test_catalan_counts(length):
    assert len(enumerate_all(chain_items(length))) == catalan(length - 1)


def test_guard():
    with pytest.raises(GuardError):
        enumerate_all(chain_items(MAX_ENUMERATE + 1))
    assert enumerate_all([]) == []


def test_left_comb_three_sequences():
    lengths = all_rewrite_sequences(left_comb(4))
    assert max(lengths) == 3
    assert min(lengths) == 2  # root-first


def test_single_redex_sequences(john_left):
    assert all_rewrite_sequences(john_left) == [1]


@pytest.mark.parametrize("n_leaves", range(2, 8))
def test_rewrite_search_bound_and_unique_terminal(n_leaves):
    for s in shapes(n_leaves):
        d = chain_derivation(s)
        n = internal_count(d)
        lengths, forms = explore_rewrites(d)
        assert max(lengths) <= n * (n - 1) // 2
        assert forms == {normalize(d).normal_form}
    lengths, _ = explore_rewrites(chain_derivation(left_comb_shape(n_leaves)))
    assert max(lengths) == (n_leaves - 1) * (n_leaves - 2) // 2


def test_rewrite_search_guard():
    with pytest.raises(GuardError):
        explore_rewrites(left_comb(8))


def test_partition_singleton(john_left):
    assert len(sem_partition([john_left])) == 1


def test_pp_attachment_two_classes():
    lex = bundled_lexicon("pp")
    ds = enumerate_sentence("john saw the man with the telescope".split(), lex)
    assert len(sem_partition(ds)) == 2
    assert len(ds) >= 2
