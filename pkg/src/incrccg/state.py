"""Analyses, parser state and trace events shared by the parser and the filter."""

from __future__ import annotations

from dataclasses import dataclass, field

from .categories import format_category
from .derivation import Derivation, digest, leaves

EVENT_KINDS = ("scanned", "combined", "revealed", "attached", "discarded_viability",
               "discarded_eager", "refused_nonendocentric")


@dataclass(frozen=True)
class Analysis:
    """A sequence of derivations whose frontiers concatenate to the prefix read so far."""
    constituents: tuple

    def __post_init__(self):
        if not self.constituents:
            raise ValueError("an analysis needs at least one constituent")
        object.__setattr__(self, "constituents", tuple(self.constituents))

    def __len__(self):
        return len(self.constituents)

    def __getitem__(self, i):
        return self.constituents[i]

    @property
    def categories(self) -> list[str]:
        return [format_category(d.cat) for d in self.constituents]

    @property
    def words(self) -> list[str]:
        return [lf.word for d in self.constituents for lf in leaves(d)]

    def signature(self, k: int = 2) -> tuple:
        return tuple(self.categories[-k:]) if k > 0 else ()

    def spans(self) -> list[tuple[int, Derivation]]:
        out, start = [], 0
        for d in self.constituents:
            out.append((start, d))
            start += len(leaves(d))
        return out

    def replace_last(self, count: int, *new: Derivation) -> "Analysis":
        return Analysis(self.constituents[:len(self.constituents) - count] + tuple(new))

    def summary(self) -> dict:
        return {"categories": self.categories,
                "digests": [digest(d) for d in self.constituents]}


@dataclass(frozen=True)
class TraceEvent:
    kind: str
    word_index: int
    categories: tuple = ()
    digests: tuple = ()
    detail: str = ""

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise ValueError(f"unknown trace event kind {self.kind!r}")

    @classmethod
    def of(cls, kind: str, word_index: int, analysis: Analysis | None = None,
           detail: str = "") -> "TraceEvent":
        if analysis is None:
            return cls(kind, word_index, detail=detail)
        s = analysis.summary()
        return cls(kind, word_index, tuple(s["categories"]), tuple(s["digests"]), detail)

    def to_record(self) -> dict:
        rec = {"event": self.kind, "word_index": self.word_index,
               "categories": list(self.categories), "digests": list(self.digests)}
        if self.detail:
            rec["detail"] = self.detail
        return rec


@dataclass
class ParserState:
    analyses: list = field(default_factory=list)
    consumed: tuple = ()
    trace: list = field(default_factory=list)

    @property
    def word_index(self) -> int:
        return len(self.consumed) - 1

    def derive(self, analyses, events=()) -> "ParserState":
        return ParserState(list(analyses), self.consumed, self.trace + list(events))


def dedup(analyses) -> list:
    seen = set()
    out = []
    for a in analyses:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return out
