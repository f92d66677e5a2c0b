"""Derivation generators for property checks: shapes, combs and random trees."""

from __future__ import annotations

import random
from functools import lru_cache

from .categories import Atom, Category, Complex, FORWARD, SLASHES, peel, rebuild
from .derivation import Derivation, Leaf, make_node
from .rules import BWD, FWD, RuleUse, enumerate_combinations, forced_degree
from .oracle import chain_items

ATOMS = ("a", "b", "c", "d", "e")


@lru_cache(maxsize=None)
def shapes(n_leaves: int) -> tuple:
    """Every binary bracketing of ``n_leaves`` leaves (leaves are None)."""
    if n_leaves == 1:
        return (None,)
    out = []
    for k in range(1, n_leaves):
        for left in shapes(k):
            for right in shapes(n_leaves - k):
                out.append((left, right))
    return tuple(out)


def shape_leaves(shape) -> int:
    return 1 if shape is None else shape_leaves(shape[0]) + shape_leaves(shape[1])


def left_comb_shape(n_leaves: int):
    s = None
    for _ in range(n_leaves - 1):
        s = (s, None)
    return s


def right_comb_shape(n_leaves: int):
    s = None
    for _ in range(n_leaves - 1):
        s = (None, s)
    return s


def build(shape, items, direction: str | None = FWD) -> Derivation:
    """Lay ``items`` (Leaf or (word, Category)) under ``shape``.

    Each node uses the first rule that combines its children (restricted to
    ``direction`` unless None); raises ValueError if some node cannot combine.
    """
    leaves = [x if isinstance(x, Leaf) else Leaf(x[0], x[1]) for x in items]
    it = iter(leaves)

    def go(s):
        if s is None:
            return next(it)
        left, right = go(s[0]), go(s[1])
        for rule, _ in enumerate_combinations(left.cat, right.cat):
            if direction is None or rule.direction == direction:
                return make_node(rule, left, right)
        raise ValueError(f"cannot combine {left.cat} and {right.cat}")

    d = go(shape)
    if next(it, None) is not None:
        raise ValueError("more items than shape leaves")
    return d


def chain_derivation(shape) -> Derivation:
    """Uniform forward chain x0/x1, x1/x2, ... laid out under ``shape``."""
    return build(shape, chain_items(shape_leaves(shape)))


def left_comb(n_leaves: int) -> Derivation:
    return chain_derivation(left_comb_shape(n_leaves))


def right_comb(n_leaves: int) -> Derivation:
    return chain_derivation(right_comb_shape(n_leaves))


def backward_chain_items(n: int) -> list:
    """Mirror of the forward chain: x1, x2\\x1, x3\\x2, ... all composable backwards."""
    from .categories import parse_category
    items = []
    for i in range(n):
        items.append((f"w{i}", parse_category(f"x{i + 1}\\x{i}")))
    return items


def random_category(rng: random.Random, depth: int = 2, atoms=ATOMS,
                    p_complex: float = 0.3) -> Category:
    if depth <= 0 or rng.random() >= p_complex:
        return Atom(rng.choice(atoms))
    return Complex(random_category(rng, depth - 1, atoms, p_complex), rng.choice(SLASHES),
                   random_category(rng, depth - 1, atoms, p_complex))


def random_shape(rng: random.Random, n_internal: int):
    if n_internal == 0:
        return None
    k = rng.randrange(n_internal)
    return (random_shape(rng, k), random_shape(rng, n_internal - 1 - k))


def random_derivation(rng: random.Random, n_internal: int, shape=None,
                      root: Category | None = None, max_degree: int = 3,
                      p_same: float = 0.6) -> Derivation:
    """A well-formed derivation built top-down by splitting categories.

    At each node a rule is chosen and the parent category is split into the
    two inputs that rule needs, inventing the cancelled category Y at random.
    ``p_same`` biases a node towards its parent's direction with composition,
    so same-direction nestings (redexes) are common.
    """
    shape = shape if shape is not None else random_shape(rng, n_internal)
    root = root if root is not None else random_category(rng, 2, p_complex=0.5)
    counter = iter(range(10_000))

    def go(s, c: Category, parent_dir: str | None):
        if s is None:
            i = next(counter)
            return Leaf(f"w{i}", c)
        n_args = len(_args(c))
        if parent_dir is not None and rng.random() < p_same:
            direction = parent_dir
        else:
            direction = rng.choice((FWD, BWD))
        degree = rng.randint(0, min(max_degree, n_args))
        if rng.random() < 0.6 and n_args >= 1 and degree == 0:
            degree = rng.randint(1, min(max_degree, n_args))
        x, zs = peel(c, degree)
        y = random_category(rng, 1, p_complex=0.25)
        if direction == FWD:
            left_cat, right_cat = Complex(x, FORWARD, y), rebuild(y, zs)
        else:
            left_cat, right_cat = rebuild(y, zs), Complex(x, "\\", y)
        # left subtree first so leaf numbering follows the frontier
        left = go(s[0], left_cat, direction)
        right = go(s[1], right_cat, direction)
        return make_node(RuleUse(direction, degree), left, right)

    return go(shape, root, None)


def _args(c: Category) -> list:
    out = []
    while isinstance(c, Complex):
        out.append(c.argument)
        c = c.result
    return out


def random_derivations(seed: int, count: int, max_internal: int = 12, min_internal: int = 1):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_derivation(rng, rng.randint(min_internal, max_internal))


def relabel_free(d: Derivation) -> Derivation:
    """Re-lay ``d``'s shape over a fresh associative chain of distinct atoms."""
    from .derivation import shape as shape_of
    return chain_derivation(shape_of(d))


def combine_direction_forced(left: Derivation, right: Derivation, direction: str) -> Derivation:
    deg = forced_degree(left.cat, right.cat, direction)
    if deg is None:
        raise ValueError("no combination")
    return make_node(RuleUse(direction, deg), left, right)
