"""Derivation trees over lexical leaves.

Every node caches its category and semantic term.  Positions are paths of
``"L"``/``"R"`` steps from the root, so derivations stay plain values and
rewritten trees can share untouched subtrees with the original.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Union

from .categories import Category, arity, format_category, parse_category
from .rules import FWD, RuleConfig, RuleUse, match_rule
from .semantics import Const, SemTerm, format_term, sem_of_combination

Position = tuple  # of "L" / "R"
ROOT: Position = ()


class DerivationError(ValueError):
    pass


@dataclass(frozen=True, eq=True)
class Leaf:
    word: str
    cat: Category
    sem: SemTerm = None

    def __post_init__(self):
        if self.sem is None:
            object.__setattr__(self, "sem", Const(self.word))

    @cached_property
    def _hash(self):
        return hash(("leaf", self.word, self.cat, self.sem))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=False)
class Node:
    rule: RuleUse
    left: "Derivation"
    right: "Derivation"
    cat: Category
    sem: SemTerm = field(repr=False)

    @cached_property
    def _hash(self):
        return hash(("node", self.rule, self.left, self.right, self.cat))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Node) or self._hash != other._hash:
            return False
        return (self.rule == other.rule and self.cat == other.cat
                and self.left == other.left and self.right == other.right
                and self.sem == other.sem)

    @cached_property
    def size(self) -> int:
        return 1 + internal_count(self.left) + internal_count(self.right)

    @property
    def functor(self) -> "Derivation":
        return self.left if self.rule.direction == FWD else self.right

    @property
    def argument(self) -> "Derivation":
        return self.right if self.rule.direction == FWD else self.left


Derivation = Union[Leaf, Node]


def leaf(word: str, category: str | Category, sem: SemTerm | None = None) -> Leaf:
    if isinstance(category, str):
        category = parse_category(category)
    return Leaf(word, category, sem)


def make_node(rule: RuleUse, left: Derivation, right: Derivation,
              config: RuleConfig | None = None) -> Node:
    m = match_rule(left.cat, right.cat, rule)
    if m is None:
        raise DerivationError(
            f"{rule.name} cannot combine {format_category(left.cat)} "
            f"and {format_category(right.cat)}")
    if config is not None and not config.permits(m):
        raise DerivationError(f"{rule.name} blocked on {format_category(left.cat)} "
                              f"and {format_category(right.cat)}")
    if rule.direction == FWD:
        sem = sem_of_combination(rule, left.sem, right.sem)
    else:
        sem = sem_of_combination(rule, right.sem, left.sem)
    return Node(rule, left, right, m.result, sem)


def internal_count(d: Derivation) -> int:
    return 0 if isinstance(d, Leaf) else d.size


def sigma(d: Derivation) -> int:
    """Termination score: sum over internal nodes of the left child's internal count."""
    if isinstance(d, Leaf):
        return 0
    return sigma(d.left) + sigma(d.right) + internal_count(d.left)


def leaves(d: Derivation) -> list[Leaf]:
    if isinstance(d, Leaf):
        return [d]
    return leaves(d.left) + leaves(d.right)


def frontier(d: Derivation) -> list[tuple[str, Category]]:
    return [(lf.word, lf.cat) for lf in leaves(d)]


def words(d: Derivation) -> list[str]:
    return [lf.word for lf in leaves(d)]


def subtree(d: Derivation, p: Position) -> Derivation:
    for step in p:
        if isinstance(d, Leaf):
            raise DerivationError(f"position {''.join(p)} runs past a leaf")
        d = d.left if step == "L" else d.right
    return d


def replace(d: Derivation, p: Position, new: Derivation) -> Derivation:
    """Substitute ``new`` at ``p`` and rebuild the ancestors with their own rules."""
    if not p:
        return new
    if isinstance(d, Leaf):
        raise DerivationError("position runs past a leaf")
    if p[0] == "L":
        return make_node(d.rule, replace(d.left, p[1:], new), d.right)
    return make_node(d.rule, d.left, replace(d.right, p[1:], new))


def positions(d: Derivation, prefix: Position = ()) -> Iterator[Position]:
    """Preorder positions of internal nodes."""
    if isinstance(d, Node):
        yield prefix
        yield from positions(d.left, prefix + ("L",))
        yield from positions(d.right, prefix + ("R",))


def right_frontier(d: Derivation) -> list[tuple[Position, Category]]:
    out = []
    p: Position = ()
    while True:
        out.append((p, d.cat))
        if isinstance(d, Leaf):
            return out
        d = d.right
        p = p + ("R",)


def well_formed(d: Derivation, config: RuleConfig | None = None) -> bool:
    """Recompute every node's category and semantics from its children."""
    if isinstance(d, Leaf):
        return True
    if not (well_formed(d.left, config) and well_formed(d.right, config)):
        return False
    try:
        fresh = make_node(d.rule, d.left, d.right, config)
    except DerivationError:
        return False
    return fresh.cat == d.cat and fresh.sem == d.sem


def is_left_comb(d: Derivation) -> bool:
    return isinstance(d, Leaf) or (isinstance(d.right, Leaf) and is_left_comb(d.left))


def is_right_comb(d: Derivation) -> bool:
    return isinstance(d, Leaf) or (isinstance(d.left, Leaf) and is_right_comb(d.right))


def shape(d: Derivation):
    """Bracketing with leaves as None, e.g. ``((None, None), None)``."""
    if isinstance(d, Leaf):
        return None
    return (shape(d.left), shape(d.right))


def to_record(d: Derivation) -> dict:
    if isinstance(d, Leaf):
        rec = {"word": d.word, "cat": format_category(d.cat)}
        if d.sem != Const(d.word):
            rec["sem"] = format_term(d.sem)
        return rec
    return {"rule": d.rule.name, "cat": format_category(d.cat),
            "left": to_record(d.left), "right": to_record(d.right)}


def from_record(rec: dict) -> Derivation:
    """Rebuild a derivation, rechecking every node; a recorded ``cat`` must agree."""
    if "word" in rec:
        sem = Const(rec["sem"]) if "sem" in rec else None
        return leaf(rec["word"], rec["cat"], sem)
    node = make_node(RuleUse.from_name(rec["rule"]),
                     from_record(rec["left"]), from_record(rec["right"]))
    if "cat" in rec and parse_category(rec["cat"]) != node.cat:
        raise DerivationError(
            f"recorded category {rec['cat']} but rule yields {format_category(node.cat)}")
    return node


def digest(d: Derivation) -> str:
    blob = json.dumps(to_record(d), sort_keys=True, separators=(",", ":"))
    return hashlib.sha1(blob.encode("utf-8")).hexdigest()[:12]


def bracketed(d: Derivation) -> str:
    """One-line rendering, e.g. ``((John >1 loves) >0 Mary)``."""
    if isinstance(d, Leaf):
        return d.word
    return f"({bracketed(d.left)} {d.rule.name} {bracketed(d.right)})"


def pretty(d: Derivation) -> str:
    """Indented rendering, one node per line: category, rule, span, words."""
    lines = []

    def walk(node, depth, start):
        ws = words(node)
        end = start + len(ws)
        rule = "lex" if isinstance(node, Leaf) else node.rule.name
        lines.append(f"{'  ' * depth}{format_category(node.cat)}  {rule}  "
                     f"[{start},{end})  {' '.join(ws)}")
        if isinstance(node, Node):
            walk(node.left, depth + 1, start)
            walk(node.right, depth + 1, start + len(words(node.left)))

    walk(d, 0, 0)
    return "\n".join(lines)


def sem_arity(d: Derivation) -> int:
    return arity(d.cat)
