"""Rewriting left-nested derivations towards right-branching normal form.

Forward redex (``a`` = W/X, outer degree n, inner degree m >= 1)::

    (a >m b) >n c   ->   a >(m+n-1) (b >n c)

Backward redex (inner degree n, outer degree k >= n)::

    (a <n b) <k c   ->   a <n (b <(k-n+1) c)

Here ``a``, ``b`` and ``c`` are the left-left grandchild, left-right
grandchild and right child of the redex.  Contractum degrees are recomputed
from the categories; the degree side conditions only exclude same-direction
nestings whose categories cannot be reassociated (e.g. an application
nested under an application).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .derivation import (Derivation, DerivationError, Leaf, Node, Position,
                         internal_count, make_node, positions, replace, sigma, subtree)
from .rules import FWD, RuleConfig, RuleUse, forced_degree


class RewriteError(ValueError):
    pass


class RewriteObstructed(RewriteError):
    """A contraction needs a rule instance the grammar's RuleConfig refuses."""


@dataclass(frozen=True)
class RootFirst:
    """Contract the redex closest to the root (leftmost on ties)."""
    name = "root-first"

    def choose(self, d: Derivation, redexes: list[Position]) -> Position:
        return min(redexes, key=len)


@dataclass(frozen=True)
class LeftmostInnermost:
    """Contract the first redex met in postorder, which has no redex below it."""
    name = "leftmost-innermost"

    def choose(self, d: Derivation, redexes: list[Position]) -> Position:
        found = set(redexes)
        for p in _postorder(d):
            if p in found:
                return p
        raise RewriteError("no redex")


@dataclass
class RandomSeeded:
    seed: int
    rng: random.Random = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    @property
    def name(self) -> str:
        return f"random:{self.seed}"

    def choose(self, d: Derivation, redexes: list[Position]) -> Position:
        return self.rng.choice(redexes)


def strategy_from_name(name: str):
    if name in ("root-first", "rootfirst"):
        return RootFirst()
    if name in ("leftmost-innermost", "innermost"):
        return LeftmostInnermost()
    if name.startswith("random"):
        _, _, seed = name.partition(":")
        return RandomSeeded(int(seed or 0))
    raise ValueError(f"unknown strategy {name!r}")


def default_strategies(n_random: int = 10) -> list:
    return [RootFirst(), LeftmostInnermost()] + [RandomSeeded(s) for s in range(n_random)]


@dataclass
class RewriteReport:
    normal_form: Derivation
    steps: int
    sigma_trace: list
    positions: list = field(default_factory=list)


def _postorder(d: Derivation, prefix: Position = ()):
    if isinstance(d, Node):
        yield from _postorder(d.left, prefix + ("L",))
        yield from _postorder(d.right, prefix + ("R",))
        yield prefix


def _redex_shape(node: Derivation) -> bool:
    if not isinstance(node, Node) or not isinstance(node.left, Node):
        return False
    inner = node.left
    if inner.rule.direction != node.rule.direction:
        return False
    if node.rule.direction == FWD:
        return inner.rule.degree >= 1
    return node.rule.degree >= inner.rule.degree


def is_redex(d: Derivation, p: Position = ()) -> bool:
    return _redex_shape(subtree(d, p))


def find_redexes(d: Derivation) -> list[Position]:
    """Preorder positions of every redex in ``d``."""
    return [p for p in positions(d) if _redex_shape(subtree(d, p))]


def is_normal_form(d: Derivation) -> bool:
    return not find_redexes(d)


def contract_node(node: Node, config: RuleConfig | None = None) -> Node:
    if not _redex_shape(node):
        raise RewriteError("not a redex")
    a, b, c = node.left.left, node.left.right, node.right
    direction = node.rule.direction
    inner_deg = forced_degree(b.cat, c.cat, direction)
    if inner_deg is None:
        raise RewriteError("contractum categories do not combine")
    inner_rule = RuleUse(direction, inner_deg)
    try:
        inner = make_node(inner_rule, b, c, config)
    except DerivationError as exc:
        raise RewriteObstructed(str(exc)) from exc
    outer_deg = forced_degree(a.cat, inner.cat, direction)
    if outer_deg is None:
        raise RewriteError("contractum categories do not combine")
    try:
        outer = make_node(RuleUse(direction, outer_deg), a, inner, config)
    except DerivationError as exc:
        raise RewriteObstructed(str(exc)) from exc
    if outer.cat != node.cat:
        raise RewriteError("contraction changed the category")
    return outer


def contract(d: Derivation, p: Position, config: RuleConfig | None = None) -> Derivation:
    return replace(d, p, contract_node(subtree(d, p), config))


def normalize(d: Derivation, strategy=None, config: RuleConfig | None = None,
              max_steps: int | None = None) -> RewriteReport:
    """Contract redexes chosen by ``strategy`` (RootFirst by default) until none remain."""
    strategy = strategy or RootFirst()
    trace = [sigma(d)]
    chosen = []
    n = internal_count(d)
    limit = max_steps if max_steps is not None else n * (n - 1) // 2
    while True:
        redexes = find_redexes(d)
        if not redexes:
            break
        if len(chosen) >= limit:
            raise RewriteError(f"no normal form within {limit} steps")
        p = strategy.choose(d, redexes)
        d = contract(d, p, config)
        chosen.append(p)
        trace.append(sigma(d))
    return RewriteReport(d, len(chosen), trace, chosen)


def check_confluence(d: Derivation, strategies=None, config: RuleConfig | None = None) -> bool:
    strategies = strategies if strategies is not None else default_strategies()
    forms = {normalize(d, s, config).normal_form for s in strategies}
    return len(forms) == 1


def sigma_drop(d: Derivation, p: Position) -> int:
    """Predicted decrease of sigma for contracting at ``p``: #(a) + 1."""
    return internal_count(subtree(d, p).left.left) + 1


def is_leaf(d: Derivation) -> bool:
    return isinstance(d, Leaf)
