"""Learned viability criterion over the categories of an analysis's last constituents.

A signature (the last ``k`` constituent categories) becomes non-viable once it
has been seen failing at least ``threshold`` times and has never succeeded.
Training parses a corpus exhaustively and labels each per-word analysis a
success when it is an ancestor of some complete goal derivation.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .derivation import Derivation, Node
from .state import Analysis, ParserState, TraceEvent

log = logging.getLogger(__name__)

DEFAULT_K = 2
DEFAULT_THRESHOLD = 3


@dataclass
class ViabilityModel:
    counts: dict = field(default_factory=dict)  # signature -> [failures, successes]
    threshold: float = DEFAULT_THRESHOLD
    k: int = DEFAULT_K
    skipped: int = field(default=0, compare=False)

    def signature(self, a: Analysis) -> tuple:
        return a.signature(self.k)

    def record(self, signature: tuple, success: bool) -> None:
        entry = self.counts.setdefault(tuple(signature), [0, 0])
        entry[1 if success else 0] += 1

    def failures(self, signature) -> int:
        return self.counts.get(tuple(signature), (0, 0))[0]

    def successes(self, signature) -> int:
        return self.counts.get(tuple(signature), (0, 0))[1]

    def copy(self) -> "ViabilityModel":
        return ViabilityModel({s: list(c) for s, c in self.counts.items()},
                              self.threshold, self.k)

    def dumps(self) -> str:
        lines = [f"# k={self.k}", f"# threshold={self.threshold:g}"]
        for sig in sorted(self.counts):
            fail, succ = self.counts[sig]
            lines.append("\t".join([*sig, str(fail), str(succ)]))
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def loads_model(text: str) -> ViabilityModel:
    m = ViabilityModel()
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        if raw.startswith("#"):
            key, _, value = raw[1:].strip().partition("=")
            if key == "k":
                m.k = int(value)
            elif key == "threshold":
                m.threshold = float(value)
            continue
        fields = raw.split("\t")
        if len(fields) < 3:
            raise ValueError(f"line {lineno}: expected categories then two counts")
        try:
            fail, succ = int(fields[-2]), int(fields[-1])
        except ValueError:
            raise ValueError(f"line {lineno}: counts must be integers") from None
        if fail < 0 or succ < 0:
            raise ValueError(f"line {lineno}: negative count")
        m.counts[tuple(fields[:-2])] = [fail, succ]
    return m


def load_model(path) -> ViabilityModel:
    return loads_model(Path(path).read_text(encoding="utf-8"))


def is_viable(m: ViabilityModel, a: Analysis) -> bool:
    sig = m.signature(a)
    return not (m.failures(sig) >= m.threshold and m.successes(sig) == 0)


def filter_state(state: ParserState, m: ViabilityModel) -> ParserState:
    kept, events = [], []
    index = state.word_index
    for a in state.analyses:
        if is_viable(m, a):
            kept.append(a)
        else:
            events.append(TraceEvent.of("discarded_viability", index, a,
                                        "signature " + " ".join(m.signature(a))))
    return state.derive(kept, events)


def _spanned_subtrees(d: Derivation, start: int = 0, out: set | None = None) -> set:
    out = set() if out is None else out
    out.add((start, d))
    if isinstance(d, Node):
        _spanned_subtrees(d.left, start, out)
        n_left = sum(1 for _ in _leaves_iter(d.left))
        _spanned_subtrees(d.right, start + n_left, out)
    return out


def _leaves_iter(d: Derivation):
    if isinstance(d, Node):
        yield from _leaves_iter(d.left)
        yield from _leaves_iter(d.right)
    else:
        yield d


def label_snapshots(snapshots, complete) -> list[list[tuple[Analysis, bool]]]:
    """Mark each per-word analysis by whether some complete derivation extends it."""
    pieces = [_spanned_subtrees(d) for d in complete]
    labelled = []
    for snap in snapshots:
        row = []
        for a in snap:
            spans = a.spans()
            ok = any(all(s in p for s in spans) for p in pieces)
            row.append((a, ok))
        labelled.append(row)
    return labelled


def train(corpus, lex, m: ViabilityModel | None = None, config=None) -> ViabilityModel:
    """Count outcomes of every intermediate analysis over ``corpus`` (lists of words).

    Sentences with unknown words or without a complete derivation are skipped;
    ``skipped`` on the returned model counts them.
    """
    from .parser import ParsePolicy, StuckError, parse
    from .lexicon import UnknownWordError

    m = m.copy() if m is not None else ViabilityModel()
    policy = ParsePolicy.exhaustive(rules=config) if config else ParsePolicy.exhaustive()
    skipped = 0
    for sentence in corpus:
        try:
            result = parse(sentence, lex, policy)
        except (UnknownWordError, StuckError) as exc:
            log.warning("skipping %r: %s", " ".join(sentence), exc)
            skipped += 1
            continue
        if not result.complete:
            log.warning("skipping %r: no complete derivation", " ".join(sentence))
            skipped += 1
            continue
        for row in label_snapshots(result.snapshots, result.complete):
            for a, ok in row:
                m.record(m.signature(a), ok)
    m.skipped = skipped
    return m


def outcome_counts(m: ViabilityModel) -> Counter:
    c = Counter()
    for fail, succ in m.counts.values():
        c["failures"] += fail
        c["successes"] += succ
    return c
