"""Command line: parse | normalize | enumerate | train | check.

Standard output carries one JSON object per line.  Pretty trees go to
standard error.  Exit status: 0 success, 1 parse failure or failed check,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .categories import CategoryParseError, format_category, parse_category
from .config import ConfigError, EngineConfig, load_config
from .derivation import DerivationError, from_record, pretty, to_record
from .generate import chain_derivation, left_comb_shape, random_shape, right_comb_shape
from .lexicon import (Lexicon, LexiconError, UnknownWordError, bundled_lexicon, bundled_names,
                      load_lexicon, read_corpus)
from .oracle import GuardError, chain_items, enumerate_all, enumerate_sentence, sem_partition
from .parser import EAGER, EXHAUSTIVE, ParsePolicy, StuckError, parse
from .rewrite import RewriteError, normalize, strategy_from_name
from .viability import ViabilityModel, load_model, train

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def emit(record: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(record, ensure_ascii=False) + "\n")


def _load_lexicon(name: str) -> Lexicon:
    path = Path(name)
    if path.exists():
        return load_lexicon(path)
    if name in bundled_names():
        return bundled_lexicon(name)
    raise FileNotFoundError(f"no lexicon file or bundled lexicon named {name!r}")


def _engine_config(args) -> EngineConfig:
    return load_config(args.config) if args.config else EngineConfig()


def _sentence(parts) -> list[str]:
    return " ".join(parts).split()


def cmd_parse(args) -> int:
    cfg = _engine_config(args)
    lex = _load_lexicon(args.lexicon)
    goals = args.goal or cfg.goals
    if goals:
        lex.goals = [parse_category(g) for g in goals]
    mode = args.policy or cfg.policy
    reveal = mode == EAGER and not args.no_reveal and cfg.reveal
    model = None
    model_path = args.model or cfg.model_path
    if model_path:
        model = load_model(model_path)
    policy = ParsePolicy(mode=mode, reveal_enabled=reveal, endocentric_only=cfg.endocentric_only,
                         viability=model, rules=cfg.rules)
    words = _sentence(args.sentence)
    if not words:
        raise UsageError("empty sentence")
    try:
        result = parse(words, lex, policy)
    except UnknownWordError as exc:
        emit({"type": "result", "status": "unknown_word", "word": exc.word,
              "word_index": exc.position, "message": str(exc)})
        return EXIT_FAIL
    except StuckError as exc:
        if args.trace:
            for ev in exc.trace:
                emit({"type": "event", **ev.to_record()})
        emit({"type": "result", "status": "stuck", "word": exc.word,
              "word_index": exc.word_index, "message": str(exc)})
        return EXIT_FAIL
    for i, snap in enumerate(result.snapshots):
        for j, a in enumerate(snap):
            emit({"type": "snapshot", "word_index": i, "word": words[i], "analysis": j,
                  **a.summary()})
    if args.trace:
        for ev in result.trace:
            emit({"type": "event", **ev.to_record()})
    status = "ok" if result.complete else "incomplete"
    emit({"type": "result", "status": status, "words": words,
          "final_analyses": [a.categories for a in result.analyses],
          "complete": len(result.complete),
          "derivations": [to_record(d) for d in result.complete]})
    if args.pretty:
        for d in result.complete:
            print(pretty(d) + "\n", file=sys.stderr)
    if args.figure:
        from .report import plot_analysis_counts
        series = {f"{mode}": [len(s) for s in result.snapshots]}
        if mode == EAGER:
            ex = parse(words, lex, ParsePolicy.exhaustive(rules=cfg.rules))
            series["exhaustive"] = [len(s) for s in ex.snapshots]
        plot_analysis_counts(series, words, args.figure)
    return EXIT_OK if result.complete else EXIT_FAIL


def _read_derivation(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"derivation is not valid JSON: {exc}") from None
    return from_record(rec)


def cmd_normalize(args) -> int:
    cfg = _engine_config(args)
    if args.input:
        d = _read_derivation(args.input)
    elif args.chain:
        if args.shape == "left":
            shape = left_comb_shape(args.chain)
        elif args.shape == "right":
            shape = right_comb_shape(args.chain)
        else:
            import random
            shape = random_shape(random.Random(args.seed), args.chain - 1)
        d = chain_derivation(shape)
    else:
        raise UsageError("normalize needs --input or --chain")
    strategy = strategy_from_name(args.strategy)
    report = normalize(d, strategy, cfg.rules)
    for i, (pos, s) in enumerate(zip(report.positions, report.sigma_trace[1:]), 1):
        emit({"type": "step", "step": i, "position": "".join(pos) or "root", "sigma": s})
    emit({"type": "report", "strategy": strategy.name, "steps": report.steps,
          "sigma_trace": report.sigma_trace, "root": format_category(d.cat),
          "input": to_record(d), "normal_form": to_record(report.normal_form)})
    if args.pretty:
        print(pretty(d) + "\n\n" + pretty(report.normal_form), file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = _engine_config(args)
    if args.chain:
        derivs = enumerate_all(chain_items(args.chain), cfg.rules, limit=cfg.max_enumerate)
        source = f"chain {args.chain}"
    elif args.lexicon and args.sentence:
        lex = _load_lexicon(args.lexicon)
        words = _sentence(args.sentence)
        derivs = enumerate_sentence(words, lex, cfg.rules, goal_only=not args.all,
                                    limit=cfg.max_enumerate)
        source = " ".join(words)
    else:
        raise UsageError("enumerate needs --chain N or --lexicon LEX SENTENCE")
    classes = sem_partition(derivs) if derivs else []
    rec = {"type": "enumerate", "source": source, "count": len(derivs), "classes": len(classes)}
    emit(rec)
    if args.trees:
        for i, d in enumerate(derivs):
            emit({"type": "derivation", "index": i, "derivation": to_record(d)})
            print(pretty(d) + "\n", file=sys.stderr)
    return EXIT_OK


def cmd_train(args) -> int:
    lex = _load_lexicon(args.lexicon)
    corpus = read_corpus(args.corpus)
    model = load_model(args.model) if args.model else ViabilityModel(k=args.k,
                                                                     threshold=args.threshold)
    model = train(corpus, lex, model)
    model.save(args.out)
    emit({"type": "train", "sentences": len(corpus), "skipped": model.skipped,
          "signatures": len(model.counts), "model": str(args.out),
          "k": model.k, "threshold": model.threshold})
    return EXIT_OK


def cmd_check(args) -> int:
    from .checks import run_all
    results = run_all(seed=args.seed, random_count=args.samples)
    for r in results:
        emit(r.to_record())
    if args.figures:
        from .report import render_check_figures
        for p in render_check_figures(results, args.figures):
            emit({"type": "figure", "path": str(p)})
    ok = all(r.passed for r in results)
    emit({"type": "summary", "passed": ok, "elapsed_s": round(sum(r.elapsed for r in results), 3)})
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="incrccg", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="engine configuration (JSON)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a sentence incrementally")
    p.add_argument("--lexicon", required=True, help="lexicon file or bundled name")
    p.add_argument("--policy", choices=[EXHAUSTIVE, EAGER])
    p.add_argument("--no-reveal", action="store_true")
    p.add_argument("--goal", action="append", metavar="CAT")
    p.add_argument("--model", help="viability model (tab-separated table)")
    p.add_argument("--trace", action="store_true", help="also emit trace events")
    p.add_argument("--pretty", action="store_true", help="pretty trees on stderr")
    p.add_argument("--figure", help="write a per-word analysis-count plot here")
    p.add_argument("sentence", nargs="+")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("normalize", help="rewrite a derivation to right-branching normal form")
    p.add_argument("--input", help="derivation record (JSON), '-' for stdin")
    p.add_argument("--chain", type=int, help="use a uniform forward chain of N items")
    p.add_argument("--shape", choices=["left", "right", "random"], default="left")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", default="root-first",
                   help="root-first | leftmost-innermost | random:SEED")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("enumerate", help="count all derivations (oracle)")
    p.add_argument("--chain", type=int)
    p.add_argument("--lexicon")
    p.add_argument("--all", action="store_true", help="keep non-goal root categories")
    p.add_argument("--trees", action="store_true")
    p.add_argument("sentence", nargs="*")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("train", help="train the viability model on a corpus")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--model", help="start from this model")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--threshold", type=float, default=3)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("check", help="run the invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--figures", help="directory for report figures")
    p.set_defaults(func=cmd_check)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ConfigError, LexiconError, CategoryParseError, GuardError,
            DerivationError, RewriteError, OSError, ValueError) as exc:
        print(f"incrccg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
