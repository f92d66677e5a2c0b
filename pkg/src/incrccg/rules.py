"""Generalized forward/backward application and composition.

Forward degree n:   X/Y  Y|Z1..|Zn  ->  X|Z1..|Zn     (">n")
Backward degree n:  Y|Z1..|Zn  X\\Y  ->  X|Z1..|Zn     ("<n")

Degree 0 is function application.  Each Zi keeps its own slash, so crossed
composition is allowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .categories import BACKWARD, FORWARD, Category, Complex, peel, rebuild

FWD = "forward"
BWD = "backward"


@dataclass(frozen=True, order=True)
class RuleUse:
    direction: str
    degree: int

    def __post_init__(self):
        if self.direction not in (FWD, BWD):
            raise ValueError(f"bad direction {self.direction!r}")
        if self.degree < 0:
            raise ValueError("degree must be non-negative")

    @property
    def name(self) -> str:
        return (">" if self.direction == FWD else "<") + str(self.degree)

    def __str__(self):
        return self.name

    @classmethod
    def from_name(cls, name: str) -> "RuleUse":
        name = name.strip()
        if len(name) < 2 or name[0] not in "<>" or not name[1:].isdigit():
            raise ValueError(f"bad rule name {name!r}")
        return cls(FWD if name[0] == ">" else BWD, int(name[1:]))


class RuleMatch(NamedTuple):
    """Bindings of a successful rule instance."""
    rule: RuleUse
    x: Category
    y: Category
    zs: list  # (slash, category) pairs, outermost first
    result: Category


Predicate = Callable[[RuleMatch], bool]


@dataclass
class RuleConfig:
    """Which rule instances the grammar admits.

    ``predicates`` maps a RuleUse (or None for every rule) to a callable over
    the matched bindings; all applicable predicates must hold.
    """
    max_degree: int = 3
    blocked: frozenset = frozenset()
    predicates: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.blocked = frozenset(
            RuleUse.from_name(b) if isinstance(b, str) else b for b in self.blocked)

    def rules(self) -> list[RuleUse]:
        out = [RuleUse(d, n) for d in (FWD, BWD) for n in range(self.max_degree + 1)]
        return [r for r in out if r not in self.blocked]

    def permits(self, m: RuleMatch) -> bool:
        if m.rule.degree > self.max_degree or m.rule in self.blocked:
            return False
        for key in (None, m.rule):
            pred = self.predicates.get(key)
            if pred is not None and not pred(m):
                return False
        return True

    def to_dict(self) -> dict:
        return {"max_degree": self.max_degree,
                "blocked": sorted(r.name for r in self.blocked)}

    @classmethod
    def from_dict(cls, data: dict) -> "RuleConfig":
        return cls(max_degree=int(data.get("max_degree", 3)),
                   blocked=frozenset(data.get("blocked", ())))


DEFAULT_CONFIG = RuleConfig()


def match_rule(left: Category, right: Category, rule: RuleUse) -> RuleMatch | None:
    if rule.direction == FWD:
        functor, other, slash = left, right, FORWARD
    else:
        functor, other, slash = right, left, BACKWARD
    if not isinstance(functor, Complex) or functor.slash != slash:
        return None
    peeled = peel(other, rule.degree)
    if peeled is None:
        return None
    y, zs = peeled
    if y != functor.argument:
        return None
    x = functor.result
    return RuleMatch(rule, x, y, zs, rebuild(x, zs))


def apply_rule(left: Category, right: Category, rule: RuleUse,
               config: RuleConfig | None = None) -> Category | None:
    """Result category of combining ``left`` and ``right`` by ``rule``, or None."""
    m = match_rule(left, right, rule)
    if m is None or (config is not None and not config.permits(m)):
        return None
    return m.result


def enumerate_combinations(left: Category, right: Category,
                           config: RuleConfig = DEFAULT_CONFIG) -> list[tuple[RuleUse, Category]]:
    out = []
    for rule in config.rules():
        m = match_rule(left, right, rule)
        if m is not None and config.permits(m):
            out.append((rule, m.result))
    return out


def can_combine(left: Category, right: Category, config: RuleConfig = DEFAULT_CONFIG) -> bool:
    return bool(enumerate_combinations(left, right, config))


def forced_degree(left: Category, right: Category, direction: str) -> int | None:
    """The unique degree (if any) at which ``direction`` combines the pair.

    Peeling strictly shrinks a category, so at most one degree can match.
    """
    functor, other = (left, right) if direction == FWD else (right, left)
    slash = FORWARD if direction == FWD else BACKWARD
    if not isinstance(functor, Complex) or functor.slash != slash:
        return None
    n = 0
    c = other
    while True:
        if c == functor.argument:
            return n
        if not isinstance(c, Complex):
            return None
        c = c.result
        n += 1


def solve_left(result: Category, right: Category, rule: RuleUse) -> Category | None:
    """Recover the left input from the result and right input."""
    if rule.direction == FWD:
        r = peel(result, rule.degree)
        pr = peel(right, rule.degree)
        if r is None or pr is None or r[1] != pr[1]:
            return None
        cand = Complex(r[0], FORWARD, pr[0])
    else:
        if not isinstance(right, Complex) or right.slash != BACKWARD:
            return None
        r = peel(result, rule.degree)
        if r is None or r[0] != right.result:
            return None
        cand = rebuild(right.argument, r[1])
    return cand if apply_rule(cand, right, rule) == result else None


def solve_right(result: Category, left: Category, rule: RuleUse) -> Category | None:
    """Recover the right input from the result and left input."""
    if rule.direction == FWD:
        if not isinstance(left, Complex) or left.slash != FORWARD:
            return None
        r = peel(result, rule.degree)
        if r is None or r[0] != left.result:
            return None
        cand = rebuild(left.argument, r[1])
    else:
        r = peel(result, rule.degree)
        pl = peel(left, rule.degree)
        if r is None or pl is None or r[1] != pl[1]:
            return None
        cand = Complex(r[0], BACKWARD, pl[0])
    return cand if apply_rule(left, cand, rule) == result else None


def all_rules(max_degree: int) -> Iterable[RuleUse]:
    return RuleConfig(max_degree=max_degree).rules()
