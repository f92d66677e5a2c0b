"""Invariant suites for the rewrite system and the parser.

Each suite returns a SuiteResult; ``run_all`` is what ``incrccg check`` runs.
Case sets are deterministic for a given seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .categories import arity
from .derivation import frontier, internal_count, sigma
from .generate import (backward_chain_items, build, chain_derivation, left_comb_shape,
                       random_derivation, shapes)
from .lexicon import bundled_lexicon, bundled_names, bundled_sentences, chain_lexicon
from .oracle import enumerate_sentence, explore_rewrites
from .parser import ParsePolicy, parse
from .rewrite import contract, default_strategies, find_redexes, normalize, sigma_drop
from .rules import BWD
from .semantics import sem_equiv


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    violations: int
    elapsed: float
    details: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict, repr=False)

    def to_record(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "cases": self.cases,
                "violations": self.violations, "elapsed_s": round(self.elapsed, 3),
                **self.details}


def bound(n: int) -> int:
    return n * (n - 1) // 2


def shape_cases(max_leaves: int = 6, seed: int = 0) -> list:
    """Every shape over 1..max_leaves leaves, each laid over a forward chain,
    a backward chain and one random mixed-direction labelling."""
    rng = random.Random(seed)
    out = []
    for n in range(1, max_leaves + 1):
        for s in shapes(n):
            out.append(chain_derivation(s))
            out.append(build(s, backward_chain_items(n), direction=BWD))
            out.append(random_derivation(rng, n - 1, shape=s))
    return out


def random_cases(count: int = 1000, seed: int = 0, min_internal: int = 1,
                 max_internal: int = 12) -> list:
    rng = random.Random(seed)
    return [random_derivation(rng, rng.randint(min_internal, max_internal))
            for _ in range(count)]


def _timed(name, fn):
    t0 = time.perf_counter()
    passed, cases, violations, details, data = fn()
    return SuiteResult(name, passed, cases, violations, time.perf_counter() - t0, details, data)


def sigma_descent(cases) -> SuiteResult:
    """Each contraction lowers sigma by exactly #(a) + 1."""
    def run():
        contractions = violations = 0
        for d in cases:
            current = d
            while True:
                redexes = find_redexes(current)
                if not redexes:
                    break
                for p in redexes:
                    after = contract(current, p)
                    contractions += 1
                    if sigma(after) != sigma(current) - sigma_drop(current, p):
                        violations += 1
                current = contract(current, redexes[0])
        return violations == 0, len(cases), violations, {"contractions": contractions}, {}
    return _timed("sigma_descent", run)


def termination_bound(cases, strategies=None, exhaustive_max: int = 6) -> SuiteResult:
    """Every normalization within n(n-1)/2 steps; exhaustive search is tight on left-combs."""
    strategies = strategies if strategies is not None else default_strategies()

    def run():
        violations = 0
        samples = []
        runs = 0
        for d in cases:
            n = internal_count(d)
            for s in strategies:
                r = normalize(d, s, max_steps=10 * n * n + 10)
                runs += 1
                samples.append((n, s.name, r.steps))
                if r.steps > bound(n):
                    violations += 1
        searched = 0
        tight = {}
        for leaves in range(1, exhaustive_max + 2):
            for s in shapes(leaves):
                d = chain_derivation(s)
                lengths, _ = explore_rewrites(d, exhaustive_max)
                searched += 1
                if max(lengths) > bound(internal_count(d)):
                    violations += 1
            d = chain_derivation(left_comb_shape(leaves))
            lengths, _ = explore_rewrites(d, exhaustive_max)
            n = internal_count(d)
            tight[n] = max(lengths)
            if max(lengths) != bound(n):
                violations += 1
        details = {"normalizations": runs, "shapes_searched": searched,
                   "left_comb_max": {str(k): v for k, v in tight.items()}}
        return violations == 0, len(cases), violations, details, {"samples": samples}
    return _timed("termination_bound", run)


def root_first_linear(cases) -> SuiteResult:
    """Root-first normalization needs at most #(d) steps."""
    from .rewrite import RootFirst

    def run():
        violations = 0
        worst = 0.0
        for d in cases:
            n = internal_count(d)
            steps = normalize(d, RootFirst(), max_steps=10 * n * n + 10).steps
            if steps > n:
                violations += 1
            if n:
                worst = max(worst, steps / n)
        return violations == 0, len(cases), violations, {"max_steps_per_node": round(worst, 3)}, {}
    return _timed("root_first_linear", run)


def confluence(cases, strategies=None, exhaustive_max: int = 5) -> SuiteResult:
    """All strategies reach one normal form; exhaustive search finds a unique terminal."""
    strategies = strategies if strategies is not None else default_strategies()

    def run():
        violations = 0
        for d in cases:
            forms = {normalize(d, s, max_steps=10 * internal_count(d) ** 2 + 10).normal_form
                     for s in strategies}
            if len(forms) != 1:
                violations += 1
        searched = 0
        for leaves in range(1, exhaustive_max + 2):
            for s in shapes(leaves):
                for d in (chain_derivation(s), build(s, backward_chain_items(leaves), BWD)):
                    _, forms = explore_rewrites(d, exhaustive_max)
                    searched += 1
                    if len(forms) != 1:
                        violations += 1
        return (violations == 0, len(cases), violations,
                {"strategies": len(strategies), "exhaustive_searches": searched}, {})
    return _timed("confluence", run)


def preservation(cases, strategies=None) -> SuiteResult:
    """Normal forms keep the root category, the frontier and the semantics."""
    strategies = strategies if strategies is not None else default_strategies()

    def run():
        violations = runs = 0
        for d in cases:
            n_args = arity(d.cat)
            for s in strategies:
                nf = normalize(d, s, max_steps=10 * internal_count(d) ** 2 + 10).normal_form
                runs += 1
                if (nf.cat != d.cat or frontier(nf) != frontier(d)
                        or not sem_equiv(nf.sem, d.sem, n_args) or find_redexes(nf)):
                    violations += 1
        return violations == 0, len(cases), violations, {"normalizations": runs}, {}
    return _timed("preservation", run)


def oracle_equivalence(max_words: int = 8, chain_max: int = 8) -> SuiteResult:
    """Exhaustive parsing finds exactly the oracle's complete derivations."""
    def run():
        violations = cases = 0
        failures = []
        work = [(name, bundled_lexicon(name), s)
                for name in bundled_names() for s in bundled_sentences(name)]
        for n in range(1, chain_max + 1):
            work.append((f"chain{n}", chain_lexicon(n), [f"w{i}" for i in range(n)]))
        for name, lex, sentence in work:
            if len(sentence) > max_words:
                continue
            cases += 1
            found = parse(sentence, lex, ParsePolicy.exhaustive()).complete
            expected = enumerate_sentence(sentence, lex)
            if set(found) != set(expected) or len(found) != len(expected):
                violations += 1
                failures.append(f"{name}: {' '.join(sentence)}")
        return violations == 0, cases, violations, {"failures": failures}, {}
    return _timed("oracle_equivalence", run)


def run_all(seed: int = 0, random_count: int = 1000) -> list[SuiteResult]:
    shaped = shape_cases(6, seed)
    rand = random_cases(random_count, seed)
    larger = random_cases(random_count, seed + 1, min_internal=6, max_internal=12)
    everything = shaped + rand
    return [
        sigma_descent(everything),
        termination_bound(everything),
        root_first_linear(everything + larger),
        confluence(shaped + larger),
        preservation(everything + larger),
        oracle_equivalence(),
    ]
