"""Applicative semantic terms with generalized composition.

``Comp(n, f, g)`` stands for the combinator B^n f g, i.e.
``B^n f g z1 .. zn = f (g z1 .. zn)``.  Equivalence of two terms of the same
category is decided by applying both to the same fresh variables and reducing
every composition away.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .rules import RuleUse


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class App:
    fun: "SemTerm"
    arg: "SemTerm"

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Comp:
    n: int
    f: "SemTerm"
    g: "SemTerm"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("composition degree must be >= 1")

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Lam:
    """Only produced by eta-expanding a composition left in argument position."""
    params: tuple
    body: "SemTerm"

    def __str__(self):
        return format_term(self)


SemTerm = Union[Const, Var, App, Comp, Lam]


class ArityError(ValueError):
    """Saturation left a pending composition at the head: category/semantics mismatch."""


def sem_of_combination(rule: RuleUse, functor_sem: SemTerm, argument_sem: SemTerm) -> SemTerm:
    if rule.degree == 0:
        return App(functor_sem, argument_sem)
    return Comp(rule.degree, functor_sem, argument_sem)


def format_term(t: SemTerm) -> str:
    if isinstance(t, (Const, Var)):
        return t.name
    if isinstance(t, App):
        head, args = _spine(t)
        return "(" + " ".join(format_term(x) for x in [head, *args]) + ")"
    if isinstance(t, Comp):
        return f"(B{t.n} {format_term(t.f)} {format_term(t.g)})"
    params = " ".join(p.name for p in t.params)
    return f"(\\{params}. {format_term(t.body)})"


def _spine(t: SemTerm) -> tuple[SemTerm, list[SemTerm]]:
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


def _apply(head: SemTerm, args) -> SemTerm:
    for a in args:
        head = App(head, a)
    return head


class _Reducer:
    def __init__(self):
        self.bound = itertools.count(1)
        self.steps = 0

    def head(self, t: SemTerm) -> SemTerm:
        """Contract compositions on the application spine until none is applied."""
        head, args = _spine(t)
        while isinstance(head, Comp) and args:
            self.steps += 1
            x, rest = args[0], args[1:]
            if head.n == 1:
                new = App(head.f, App(head.g, x))
            else:
                new = Comp(head.n - 1, head.f, App(head.g, x))
            head, more = _spine(new)
            args = more + rest
        if isinstance(head, Lam):
            raise ArityError("lambda in head position")
        return head, args

    def full(self, t: SemTerm) -> SemTerm:
        head, args = self.head(t)
        if isinstance(head, Comp):
            raise ArityError(f"unsaturated composition {format_term(head)}")
        return _apply(head, [self.argument(a) for a in args])

    def argument(self, t: SemTerm) -> SemTerm:
        head, args = self.head(t)
        if not isinstance(head, Comp):
            return _apply(head, [self.argument(a) for a in args])
        params = []
        while isinstance(head, Comp):
            fresh = [Var(f"u{next(self.bound)}") for _ in range(head.n)]
            params.extend(fresh)
            head, args = self.head(_apply(head, fresh))
        body = _apply(head, [self.argument(a) for a in args])
        return Lam(tuple(params), body)


def fresh_vars(n: int) -> list[Var]:
    return [Var(f"v{i}") for i in range(1, n + 1)]


def _rename_bound(t: SemTerm, mapping: dict, counter) -> SemTerm:
    if isinstance(t, Const):
        return t
    if isinstance(t, Var):
        return mapping.get(t, t)
    if isinstance(t, App):
        return App(_rename_bound(t.fun, mapping, counter), _rename_bound(t.arg, mapping, counter))
    if isinstance(t, Comp):
        return Comp(t.n, _rename_bound(t.f, mapping, counter), _rename_bound(t.g, mapping, counter))
    inner = dict(mapping)
    params = []
    for p in t.params:
        q = Var(f"u{next(counter)}")
        inner[p] = q
        params.append(q)
    return Lam(tuple(params), _rename_bound(t.body, inner, counter))


def saturate_reduce(t: SemTerm, arity: int) -> SemTerm:
    """Apply ``t`` to ``arity`` fresh variables and reduce every composition.

    Compositions that survive in argument position are eta-expanded into a
    ``Lam`` whose bound variables are renamed canonically, so equivalent terms
    reduce to identical results.
    """
    r = _Reducer()
    out = r.full(_apply(t, fresh_vars(arity)))
    return _rename_bound(out, {}, itertools.count(1))


def reduction_steps(t: SemTerm, arity: int) -> int:
    r = _Reducer()
    r.full(_apply(t, fresh_vars(arity)))
    return r.steps


def composition_weight(t: SemTerm) -> int:
    """Sum of composition degrees: an upper bound on head-reduction steps."""
    if isinstance(t, (Const, Var)):
        return 0
    if isinstance(t, App):
        return composition_weight(t.fun) + composition_weight(t.arg)
    if isinstance(t, Comp):
        return t.n + composition_weight(t.f) + composition_weight(t.g)
    return composition_weight(t.body)


def sem_equiv(t1: SemTerm, t2: SemTerm, arity: int) -> bool:
    return saturate_reduce(t1, arity) == saturate_reduce(t2, arity)


def strip_modifier(t: SemTerm, name: str) -> SemTerm:
    """Replace every ``App(Const(name), x)`` by ``x``: undoes an adjunction."""
    if isinstance(t, App):
        if t.fun == Const(name):
            return strip_modifier(t.arg, name)
        return App(strip_modifier(t.fun, name), strip_modifier(t.arg, name))
    if isinstance(t, Comp):
        return Comp(t.n, strip_modifier(t.f, name), strip_modifier(t.g, name))
    if isinstance(t, Lam):
        return Lam(t.params, strip_modifier(t.body, name))
    return t


def modifier_removals(t: SemTerm, name: str):
    """Every term obtained by undoing exactly one ``App(Const(name), x)``."""
    if isinstance(t, App):
        if t.fun == Const(name):
            yield t.arg
        for f in modifier_removals(t.fun, name):
            yield App(f, t.arg)
        for a in modifier_removals(t.arg, name):
            yield App(t.fun, a)
    elif isinstance(t, Comp):
        for f in modifier_removals(t.f, name):
            yield Comp(t.n, f, t.g)
        for g in modifier_removals(t.g, name):
            yield Comp(t.n, t.f, g)
    elif isinstance(t, Lam):
        for b in modifier_removals(t.body, name):
            yield Lam(t.params, b)


def constants(t: SemTerm) -> list[str]:
    if isinstance(t, Const):
        return [t.name]
    if isinstance(t, Var):
        return []
    if isinstance(t, App):
        return constants(t.fun) + constants(t.arg)
    if isinstance(t, Comp):
        return constants(t.f) + constants(t.g)
    return constants(t.body)
