"""Lexicon files.

Format, one directive per line::

    # comment
    @goal s q
    @atoms n np s pp
    fred := np | s/(s\\np)

Repeated word lines merge their entries.  Each entry's semantics is the
constant named after the word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .categories import Atom, Category, CategoryParseError, atoms, format_category, parse_category
from .derivation import Leaf
from .semantics import Const

DEFAULT_GOALS = (Atom("s"), Atom("q"))


class LexiconError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = [source] if source else []
        if line is not None:
            where.append(f"line {line}")
        super().__init__(", ".join(where) + ": " + message if where else message)
        self.line = line


class UnknownWordError(KeyError):
    def __init__(self, word: str, position: int | None = None):
        at = f" at position {position}" if position is not None else ""
        super().__init__(f"unknown word {word!r}{at}")
        self.word = word
        self.position = position

    def __str__(self):
        return self.args[0]


@dataclass
class Lexicon:
    entries: dict = field(default_factory=dict)  # word -> [(Category, SemTerm)]
    goals: list = field(default_factory=lambda: list(DEFAULT_GOALS))
    basic: frozenset | None = None

    def add(self, word: str, category: Category | str, sem=None) -> None:
        if isinstance(category, str):
            category = parse_category(category)
        if self.basic is not None:
            unknown = atoms(category) - self.basic
            if unknown:
                raise LexiconError(f"undeclared atoms {sorted(unknown)} in {word}")
        entry = (category, sem if sem is not None else Const(word))
        bucket = self.entries.setdefault(word, [])
        if entry not in bucket:
            bucket.append(entry)

    def lookup(self, word: str, position: int | None = None) -> list[Leaf]:
        try:
            bucket = self.entries[word]
        except KeyError:
            raise UnknownWordError(word, position) from None
        return [Leaf(word, c, s) for c, s in bucket]

    def categories(self, word: str) -> list[Category]:
        return [c for c, _ in self.entries.get(word, [])]

    def __contains__(self, word):
        return word in self.entries

    def is_goal(self, category: Category) -> bool:
        return category in self.goals

    def dumps(self) -> str:
        lines = ["@goal " + " ".join(format_category(g) for g in self.goals)]
        if self.basic is not None:
            lines.append("@atoms " + " ".join(sorted(self.basic)))
        for word, bucket in self.entries.items():
            lines.append(f"{word} := " + " | ".join(format_category(c) for c, _ in bucket))
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def loads_lexicon(text: str, source: str | None = None) -> Lexicon:
    lex = Lexicon()
    goals = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            directive, *rest = line.split()
            try:
                if directive == "@goal":
                    if not rest:
                        raise LexiconError("@goal needs at least one category", lineno, source)
                    goals = [parse_category(g) for g in rest]
                elif directive == "@atoms":
                    lex.basic = frozenset(rest)
                else:
                    raise LexiconError(f"unknown directive {directive}", lineno, source)
            except CategoryParseError as exc:
                raise LexiconError(str(exc), lineno, source) from None
            continue
        if ":=" not in line:
            raise LexiconError("expected 'word := category | ...'", lineno, source)
        word, _, rhs = line.partition(":=")
        word = word.strip()
        if not word or any(ch.isspace() for ch in word):
            raise LexiconError(f"bad word {word!r}", lineno, source)
        alternatives = [alt.strip() for alt in rhs.split("|")]
        if not any(alternatives):
            raise LexiconError(f"no categories for {word!r}", lineno, source)
        for alt in alternatives:
            try:
                lex.add(word, parse_category(alt))
            except (CategoryParseError, LexiconError) as exc:
                raise LexiconError(str(exc), lineno, source) from None
    if not lex.entries:
        raise LexiconError("empty lexicon", None, source)
    if goals is not None:
        lex.goals = goals
    if lex.basic is not None:
        for g in lex.goals:
            if atoms(g) - lex.basic:
                raise LexiconError(f"goal {format_category(g)} uses undeclared atoms",
                                   None, source)
    return lex


def load_lexicon(path) -> Lexicon:
    path = Path(path)
    return loads_lexicon(path.read_text(encoding="utf-8"), source=str(path))


def bundled_names() -> list[str]:
    files = resources.files("incrccg") / "data"
    return sorted(p.name[:-4] for p in files.iterdir() if p.name.endswith(".lex"))


def bundled_lexicon(name: str) -> Lexicon:
    res = resources.files("incrccg") / "data" / f"{name}.lex"
    return loads_lexicon(res.read_text(encoding="utf-8"), source=f"{name}.lex")


def bundled_sentences(name: str) -> list[list[str]]:
    res = resources.files("incrccg") / "data" / f"{name}.txt"
    if not res.is_file():
        return []
    return read_corpus_text(res.read_text(encoding="utf-8"))


def read_corpus_text(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def read_corpus(path) -> list[list[str]]:
    return read_corpus_text(Path(path).read_text(encoding="utf-8"))


def chain_lexicon(n: int, prefix: str = "w") -> Lexicon:
    """Words w0..w{n-1} with categories x0/x1, x1/x2, ...; goal x0/x{n}."""
    lex = Lexicon(goals=[parse_category(f"x0/x{n}")])
    for i in range(n):
        lex.add(f"{prefix}{i}", parse_category(f"x{i}/x{i + 1}"))
    return lex
