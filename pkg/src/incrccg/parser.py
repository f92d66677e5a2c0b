"""Incremental parallel scan/combine parsing.

Every slot holds one analysis of the prefix read so far.  ``scan`` extends
each analysis by every lexical entry of the next word; ``combine_closure``
adds every combination of the two rightmost constituents until nothing new
appears.  In eager mode, analyses that leave a possible combination untaken
are dropped, and a leftward-looking modifier that cannot combine directly
triggers revealing: the neighbouring derivation is rewritten to normal form
and the modifier is adjoined on its right frontier.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .categories import arity, format_category, is_endocentric, leftward
from .derivation import Derivation, DerivationError, make_node, replace, right_frontier, subtree
from .lexicon import Lexicon
from .rewrite import RewriteError, RootFirst, normalize
from .rules import BWD, DEFAULT_CONFIG, RuleConfig, RuleUse, enumerate_combinations, forced_degree
from .semantics import Const, modifier_removals, saturate_reduce
from .state import Analysis, ParserState, TraceEvent, dedup
from .viability import ViabilityModel, filter_state

EXHAUSTIVE = "exhaustive"
EAGER = "eager"


class StuckError(RuntimeError):
    def __init__(self, word_index: int, word: str, trace: list):
        super().__init__(f"stuck at word {word_index} ({word!r}): no analyses remain")
        self.word_index = word_index
        self.word = word
        self.trace = trace


@dataclass
class ParsePolicy:
    mode: str = EAGER
    reveal_enabled: bool = True
    endocentric_only: bool = True
    viability: ViabilityModel | None = None
    rules: RuleConfig = field(default_factory=lambda: DEFAULT_CONFIG)

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE, EAGER):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.reveal_enabled and self.mode != EAGER:
            raise ValueError("revealing requires eager mode")

    @classmethod
    def exhaustive(cls, **kw) -> "ParsePolicy":
        return cls(mode=EXHAUSTIVE, reveal_enabled=False, **kw)


@dataclass
class ParseResult:
    words: list
    snapshots: list  # per word: list of Analysis after that word
    analyses: list
    complete: list   # single-constituent derivations with a goal category
    trace: list

    @property
    def succeeded(self) -> bool:
        return bool(self.complete)


def scan(state: ParserState, word: str, lex: Lexicon) -> ParserState:
    index = len(state.consumed)
    entries = lex.lookup(word, index)
    previous = state.analyses if state.consumed else [None]
    out, events = [], []
    for a in previous:
        for lf in entries:
            new = Analysis((lf,)) if a is None else Analysis(a.constituents + (lf,))
            out.append(new)
            events.append(TraceEvent.of("scanned", index, new))
    return ParserState(dedup(out), state.consumed + (word,), state.trace + events)


def _combinations(a: Analysis, config: RuleConfig):
    if len(a) < 2:
        return []
    left, right = a[-2], a[-1]
    out = []
    for rule, _ in enumerate_combinations(left.cat, right.cat, config):
        out.append(a.replace_last(2, make_node(rule, left, right)))
    return out


def _closure(analyses, config, index, events):
    seen = set(analyses)
    ordered = list(analyses)
    work = list(analyses)
    while work:
        a = work.pop(0)
        for new in _combinations(a, config):
            if new not in seen:
                seen.add(new)
                ordered.append(new)
                work.append(new)
                events.append(TraceEvent.of("combined", index, new))
    return ordered


def _eager_prune(analyses, config, index, events):
    kept = []
    for a in analyses:
        if _combinations(a, config):
            events.append(TraceEvent.of("discarded_eager", index, a))
        else:
            kept.append(a)
    return kept


def combine_closure(state: ParserState, policy: ParsePolicy | None = None) -> ParserState:
    policy = policy or ParsePolicy()
    index = state.word_index
    events: list = []
    analyses = _closure(state.analyses, policy.rules, index, events)
    if policy.mode == EAGER:
        lower = _lower_sites(analyses, policy, index, events) if policy.reveal_enabled else []
        analyses = _eager_prune(analyses, policy.rules, index, events)
        if policy.reveal_enabled:
            analyses = _reveal_round(dedup(analyses + lower), policy, index, events)
    return ParserState(analyses, state.consumed, state.trace + events)


def _lower_sites(analyses, policy, index, events):
    """Attachments below the root for modifiers that also combine directly.

    Direct combination only reaches the root of the neighbour; the revealed
    sites underneath would otherwise be lost to eager pruning.
    """
    out = []
    for a in analyses:
        if len(a) < 2 or not leftward(a[-1].cat) or not _combinations(a, policy.rules):
            continue
        if policy.endocentric_only and not is_endocentric(a[-1].cat):
            continue
        attached = reveal_attach(a, policy, events, index, below_root=True)
        if attached:
            grown = _closure(attached, policy.rules, index, events)
            out.extend(_eager_prune(grown, policy.rules, index, events))
    return out


def _reveal_round(analyses, policy, index, events):
    done: set = set()
    while True:
        out, changed = [], False
        for a in analyses:
            if a in done or len(a) < 2 or not leftward(a[-1].cat):
                out.append(a)
                continue
            done.add(a)
            attached = reveal_attach(a, policy, events, index)
            if attached:
                changed = True
                events.append(TraceEvent.of("discarded_eager", index, a, "superseded by revealing"))
                grown = _closure(attached, policy.rules, index, events)
                out.extend(_eager_prune(grown, policy.rules, index, events))
            else:
                out.append(a)
        analyses = dedup(out)
        if not changed:
            return analyses


def reveal_attach(a: Analysis, policy: ParsePolicy | None = None,
                  events: list | None = None, index: int = -1,
                  below_root: bool = False) -> list[Analysis]:
    """Adjoin the rightmost (leftward-looking) constituent inside its neighbour.

    Returns one analysis per matching right-frontier site of the neighbour's
    normal form (skipping the root when ``below_root``); ``[]`` when nothing
    attaches or the modifier is refused.
    """
    policy = policy or ParsePolicy()
    events = events if events is not None else []
    if len(a) < 2 or not leftward(a[-1].cat):
        return []
    mod, target = a[-1], a[-2]
    if policy.endocentric_only and not is_endocentric(mod.cat):
        events.append(TraceEvent.of("refused_nonendocentric", index, a,
                                    f"{format_category(mod.cat)} is not of the form X\\X"))
        return []
    try:
        nf = normalize(target, RootFirst(), policy.rules).normal_form
    except RewriteError:
        return []
    events.append(TraceEvent.of("revealed", index, a.replace_last(2, nf, mod)))
    wanted = mod.cat.argument
    results = []
    for pos, c in right_frontier(nf):
        if c != wanted or (below_root and not pos):
            continue
        site = subtree(nf, pos)
        degree = forced_degree(site.cat, mod.cat, BWD)
        if degree is None:
            continue
        try:
            adjoined = make_node(RuleUse(BWD, degree), site, mod, policy.rules)
            rebuilt = replace(nf, pos, adjoined)
        except DerivationError:
            continue
        new = a.replace_last(2, rebuilt)
        results.append(new)
        events.append(TraceEvent.of("attached", index, new, "site " + ("".join(pos) or "root")))
    return results


def parse_state(words, lex: Lexicon, policy: ParsePolicy | None = None,
                on_word=None) -> ParserState:
    """Run the parser over ``words``; ``on_word(index, state)`` sees each per-word state."""
    policy = policy or ParsePolicy()
    state = ParserState()
    for i, word in enumerate(words):
        state = scan(state, word, lex)
        if policy.viability is not None:
            state = filter_state(state, policy.viability)
        state = combine_closure(state, policy)
        if not state.analyses:
            raise StuckError(i, word, state.trace)
        if on_word is not None:
            on_word(i, state)
    return state


def parse(words, lex: Lexicon, policy: ParsePolicy | None = None) -> ParseResult:
    words = list(words)
    snapshots: list = []
    state = parse_state(words, lex, policy, lambda i, s: snapshots.append(list(s.analyses)))
    complete = complete_derivations(state.analyses, lex)
    return ParseResult(words, snapshots, list(state.analyses), complete, state.trace)


def complete_derivations(analyses, lex: Lexicon) -> list[Derivation]:
    out = []
    for a in analyses:
        if len(a) == 1 and lex.is_goal(a[0].cat) and a[0] not in out:
            out.append(a[0])
    return out


def commitments_preserved(before: Derivation, after: Derivation, modifier: Derivation) -> bool:
    """True when ``after`` is ``before`` plus one adjoined ``modifier`` and nothing else.

    Undoing one application of the modifier in ``after``'s semantics must give
    exactly ``before``'s reduced semantics, so no functor changed the argument
    it consumed.
    """
    if not isinstance(modifier.sem, Const):
        raise ValueError("modifier semantics must be a constant")
    n = arity(before.cat)
    if arity(after.cat) != n:
        return False
    target = saturate_reduce(before.sem, n)
    return any(saturate_reduce(t, n) == target
               for t in modifier_removals(after.sem, modifier.sem.name))
