"""CCG categories: atoms closed under forward and backward slash.

Notation is left-associative, so ``s\\np/pp`` is ``(s\\np)/pp``; parentheses
override.  Printing uses the fewest parentheses that reparse to the same tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

FORWARD = "/"
BACKWARD = "\\"
SLASHES = (FORWARD, BACKWARD)


class CategoryParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("atom name must be non-empty")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Complex:
    result: "Category"
    slash: str
    argument: "Category"

    def __post_init__(self):
        if self.slash not in SLASHES:
            raise ValueError(f"bad slash {self.slash!r}")

    def __str__(self):
        return format_category(self)


Category = Union[Atom, Complex]


def is_complex(c: Category) -> bool:
    return isinstance(c, Complex)


def forward(result: Category, argument: Category) -> Complex:
    return Complex(result, FORWARD, argument)


def backward(result: Category, argument: Category) -> Complex:
    return Complex(result, BACKWARD, argument)


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            tokens.append(("atom", m.group(1), start))
        elif m.group(2) in "()/\\":
            tokens.append((m.group(2), m.group(2), start))
        elif m.group(2).isspace():
            pass
        else:
            raise CategoryParseError(f"illegal character {m.group(2)!r}", text, start)
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


@lru_cache(maxsize=4096)
def parse_category(text: str) -> Category:
    """Parse category notation such as ``q/(s/np)/n``.

    Raises CategoryParseError (a ValueError) carrying the offending position.
    """
    if not text or not text.strip():
        raise CategoryParseError("empty category", text, 0)
    tokens = _tokenize(text)
    i = 0

    def primary():
        nonlocal i
        kind, value, pos = tokens[i]
        if kind == "atom":
            i += 1
            return Atom(value)
        if kind == "(":
            i += 1
            inner = expression()
            if tokens[i][0] != ")":
                raise CategoryParseError("unbalanced parenthesis", text, tokens[i][2])
            i += 1
            return inner
        if kind == "end":
            raise CategoryParseError("missing category", text, pos)
        raise CategoryParseError(f"unexpected {value!r}", text, pos)

    def expression():
        nonlocal i
        c = primary()
        while tokens[i][0] in SLASHES:
            slash = tokens[i][0]
            i += 1
            c = Complex(c, slash, primary())
        return c

    c = expression()
    if tokens[i][0] != "end":
        kind, value, pos = tokens[i]
        msg = "unbalanced parenthesis" if kind == ")" else f"unexpected {value!r}"
        raise CategoryParseError(msg, text, pos)
    return c


def format_category(c: Category) -> str:
    if isinstance(c, Atom):
        return c.name
    arg = format_category(c.argument)
    if isinstance(c.argument, Complex):
        arg = f"({arg})"
    return f"{format_category(c.result)}{c.slash}{arg}"


def decompose(c: Category) -> tuple[Category, list[tuple[str, Category]]]:
    """Split ``c`` into its innermost result and its arguments, outermost first.

    >>> target, args = decompose(parse_category("s\\\\np/pp"))
    >>> str(target), [(s, str(a)) for s, a in args]
    ('s', [('/', 'pp'), ('\\\\', 'np')])
    """
    args = []
    while isinstance(c, Complex):
        args.append((c.slash, c.argument))
        c = c.result
    return c, args


def peel(c: Category, n: int) -> tuple[Category, list[tuple[str, Category]]] | None:
    """Remove the ``n`` outermost arguments; None when ``c`` has fewer than ``n``."""
    args = []
    for _ in range(n):
        if not isinstance(c, Complex):
            return None
        args.append((c.slash, c.argument))
        c = c.result
    return c, args


def rebuild(target: Category, args: list[tuple[str, Category]]) -> Category:
    """Inverse of decompose/peel: ``args`` are outermost first."""
    for slash, arg in reversed(args):
        target = Complex(target, slash, arg)
    return target


def arity(c: Category) -> int:
    return len(decompose(c)[1])


def atoms(c: Category) -> set[str]:
    if isinstance(c, Atom):
        return {c.name}
    return atoms(c.result) | atoms(c.argument)


def size(c: Category) -> int:
    if isinstance(c, Atom):
        return 1
    return 1 + size(c.result) + size(c.argument)


def is_endocentric(c: Category, slash: str | None = BACKWARD) -> bool:
    """True for modifier shapes X\\X (or X/X when ``slash`` is FORWARD, any when None)."""
    return (isinstance(c, Complex) and c.result == c.argument
            and (slash is None or c.slash == slash))


def leftward(c: Category) -> bool:
    return isinstance(c, Complex) and c.slash == BACKWARD


def cat(text: str | Category) -> Category:
    """Coerce notation or a Category to a Category."""
    if isinstance(text, (Atom, Complex)):
        return text
    return parse_category(text)
