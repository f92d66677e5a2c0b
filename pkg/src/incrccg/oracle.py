"""Brute-force ground truth: every derivation of a sequence, every rewrite sequence."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .categories import Category, arity
from .derivation import Derivation, Leaf, internal_count, make_node
from .rewrite import contract, find_redexes
from .rules import DEFAULT_CONFIG, RuleConfig, enumerate_combinations
from .semantics import saturate_reduce

MAX_ENUMERATE = 10
MAX_REWRITE_SEARCH = 6


class GuardError(ValueError):
    pass


def _chart(columns: list[list[Leaf]], config: RuleConfig) -> dict:
    n = len(columns)
    chart: dict = {}
    for i, col in enumerate(columns):
        chart[i, i + 1] = list(dict.fromkeys(col))
    for width in range(2, n + 1):
        for i in range(0, n - width + 1):
            j = i + width
            cell: dict = {}
            for k in range(i + 1, j):
                for left in chart[i, k]:
                    for right in chart[k, j]:
                        for rule, _ in enumerate_combinations(left.cat, right.cat, config):
                            cell.setdefault(make_node(rule, left, right), None)
            chart[i, j] = list(cell)
    return chart


def enumerate_all(cats, config: RuleConfig = DEFAULT_CONFIG,
                  limit: int = MAX_ENUMERATE) -> list[Derivation]:
    """All derivations spanning ``cats``, a list of (word, Category) or Leaf items."""
    leaves = [c if isinstance(c, Leaf) else Leaf(c[0], c[1]) for c in cats]
    return enumerate_columns([[lf] for lf in leaves], config, limit)


def enumerate_columns(columns, config: RuleConfig = DEFAULT_CONFIG,
                      limit: int = MAX_ENUMERATE) -> list[Derivation]:
    """Like enumerate_all with several candidate leaves per position."""
    if not columns:
        return []
    if len(columns) > limit:
        raise GuardError(f"{len(columns)} items exceeds the enumeration guard of {limit}")
    return _chart(columns, config)[0, len(columns)]


def enumerate_sentence(words, lex, config: RuleConfig = DEFAULT_CONFIG,
                       goal_only: bool = True, limit: int = MAX_ENUMERATE) -> list[Derivation]:
    columns = [lex.lookup(w, i) for i, w in enumerate(words)]
    out = enumerate_columns(columns, config, limit)
    return [d for d in out if lex.is_goal(d.cat)] if goal_only else out


def chain_items(n: int) -> list[tuple[str, Category]]:
    from .categories import parse_category
    return [(f"w{i}", parse_category(f"x{i}/x{i + 1}")) for i in range(n)]


def catalan(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def explore_rewrites(d: Derivation, limit: int = MAX_REWRITE_SEARCH):
    """Every maximal contraction sequence from ``d``.

    Returns (Counter of sequence lengths, set of terminal normal forms).
    """
    if internal_count(d) > limit:
        raise GuardError(f"#(d) = {internal_count(d)} exceeds the search guard of {limit}")

    @lru_cache(maxsize=None)
    def go(t: Derivation):
        redexes = find_redexes(t)
        if not redexes:
            return ((0, 1),), frozenset([t])
        lengths: Counter = Counter()
        forms: set = set()
        for p in redexes:
            sub_lengths, sub_forms = go(contract(t, p))
            for length, count in sub_lengths:
                lengths[length + 1] += count
            forms |= sub_forms
        return tuple(sorted(lengths.items())), frozenset(forms)

    lengths, forms = go(d)
    return Counter(dict(lengths)), set(forms)


def all_rewrite_sequences(d: Derivation, limit: int = MAX_REWRITE_SEARCH) -> list[int]:
    """Lengths of all maximal contraction sequences (a sorted multiset)."""
    lengths, _ = explore_rewrites(d, limit)
    return sorted(lengths.elements())


def sem_key(d: Derivation):
    return saturate_reduce(d.sem, arity(d.cat))


def sem_partition(derivs) -> list[list[Derivation]]:
    """Group derivations into classes of equivalent semantics."""
    classes: dict = {}
    for d in derivs:
        classes.setdefault(sem_key(d), []).append(d)
    return list(classes.values())
