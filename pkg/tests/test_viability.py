import math

import pytest

from incrccg.derivation import leaf
from incrccg.lexicon import bundled_lexicon, read_corpus_text
from incrccg.parser import ParsePolicy, parse
from incrccg.state import Analysis, ParserState
from incrccg.viability import (ViabilityModel, filter_state, is_viable, label_snapshots,
                               load_model, loads_model, outcome_counts, train)

from importlib import resources

DET_VERB = ("np/n", "s\\np/np")


def analysis(*cats):
    return Analysis(tuple(leaf(f"w{i}", c) for i, c in enumerate(cats)))


@pytest.fixture(scope="module")
def corpus():
    text = (resources.files("incrccg") / "data" / "insults_corpus.txt").read_text()
    return read_corpus_text(text)


@pytest.fixture(scope="module")
def trained(corpus):
    return train(corpus, bundled_lexicon("insults"))


def test_empty_model_is_permissive():
    assert is_viable(ViabilityModel(), analysis("np/n", "s\\np/np"))


def test_failures_only_is_not_viable():
    m = ViabilityModel({DET_VERB: [5, 0]}, threshold=3)
    assert not is_viable(m, analysis(*DET_VERB))
    assert is_viable(m, analysis("np/n", "n"))


def test_one_success_keeps_it_viable():
    m = ViabilityModel({DET_VERB: [5, 1]}, threshold=3)
    assert is_viable(m, analysis(*DET_VERB))


def test_below_threshold_is_viable():
    m = ViabilityModel({DET_VERB: [2, 0]}, threshold=3)
    assert is_viable(m, analysis(*DET_VERB))


def test_signature_uses_last_k():
    a = analysis("s/s", "np/n", "s\\np/np")
    assert a.signature(2) == DET_VERB
    assert a.signature(1) == ("s\\np/np",)
    assert analysis("n").signature(2) == ("n",)


def test_filter_state_examples():
    keep, drop = analysis("np/n", "n"), analysis(*DET_VERB)
    state = ParserState([keep, drop], ("w0", "w1"))
    out = filter_state(state, ViabilityModel({DET_VERB: [5, 0]}))
    assert out.analyses == [keep]
    (event,) = out.trace
    assert event.kind == "discarded_viability" and event.word_index == 1
    assert filter_state(state, ViabilityModel()).analyses == [keep, drop]
    assert filter_state(state, ViabilityModel({DET_VERB: [5, 1]})).analyses == [keep, drop]


def test_filter_can_empty_a_state():
    drop = analysis(*DET_VERB)
    out = filter_state(ParserState([drop], ("w0", "w1")), ViabilityModel({DET_VERB: [3, 0]}))
    assert out.analyses == []


def test_training_learns_determiner_verb(trained):
    assert trained.skipped == 2
    for det in ("np/n", "s/(s\\np)/n"):
        sig = (det, "s\\np/np")
        assert trained.successes(sig) == 0 and trained.failures(sig) >= trained.threshold
        assert not is_viable(trained, analysis(*sig))
        assert is_viable(trained, analysis(det, "n"))
        assert trained.successes((det, "n")) > 0


def test_empty_corpus_leaves_model_unchanged():
    m = ViabilityModel({DET_VERB: [1, 2]})
    assert train([], bundled_lexicon("insults"), m) == m


def test_training_is_additive(corpus):
    lex = bundled_lexicon("insults")
    first, second = corpus[:10], corpus[10:]
    assert train(second, lex, train(first, lex)) == train(corpus, lex)


def test_training_does_not_mutate_input(corpus):
    m = ViabilityModel()
    train(corpus[:3], bundled_lexicon("insults"), m)
    assert m.counts == {}


def test_infinite_threshold_is_identity(corpus, trained):
    lex = bundled_lexicon("insults")
    m = trained.copy()
    m.threshold = math.inf
    for sentence in corpus[:8] + [["the", "insults", "the", "new", "students", "shouted",
                                   "were", "appalling"]]:
        try:
            plain = parse(sentence, lex, ParsePolicy.exhaustive())
        except KeyError:
            continue
        filtered = parse(sentence, lex, ParsePolicy.exhaustive(viability=m))
        assert filtered.snapshots == plain.snapshots
        assert not [e for e in filtered.trace if e.kind == "discarded_viability"]


def test_no_in_sample_false_positives(corpus, trained):
    lex = bundled_lexicon("insults")
    checked = 0
    for sentence in corpus:
        if not all(w in lex for w in sentence):
            continue
        r = parse(sentence, lex, ParsePolicy.exhaustive())
        for row in label_snapshots(r.snapshots, r.complete):
            for a, ok in row:
                if ok:
                    checked += 1
                    assert is_viable(trained, a)
        filtered = parse(sentence, lex, ParsePolicy.exhaustive(viability=trained))
        assert set(filtered.complete) == set(r.complete)
    assert checked > 50


@pytest.mark.parametrize("mode", ["eager", "exhaustive"])
def test_verb_reading_discarded_within_one_word(trained, mode):
    words = "the insults the new students shouted were appalling".split()
    lex = bundled_lexicon("insults")
    policy = ParsePolicy(viability=trained) if mode == "eager" else \
        ParsePolicy.exhaustive(viability=trained)
    r = parse(words, lex, policy)
    dropped = [e for e in r.trace if e.kind == "discarded_viability" and e.word_index == 1]
    assert any(e.categories[-1] == "s\\np/np" for e in dropped)
    assert all("s\\np/np" != a.categories[-1] for a in r.snapshots[1])
    baseline = parse(words, lex, ParsePolicy() if mode == "eager" else ParsePolicy.exhaustive())
    assert set(r.complete) == set(baseline.complete)


def test_labels_follow_complete_derivations():
    lex = bundled_lexicon("insults")
    r = parse("the insults were appalling".split(), lex, ParsePolicy.exhaustive())
    labels = label_snapshots(r.snapshots, r.complete)
    first = dict((a.categories[-1], ok) for a, ok in labels[1] if len(a) == 2)
    assert first.get("s\\np/np") is False
    assert first.get("n") is True


def test_save_load_round_trip(tmp_path, trained):
    path = tmp_path / "model.tsv"
    trained.save(path)
    loaded = load_model(path)
    assert loaded == trained
    assert loaded.k == trained.k and loaded.threshold == trained.threshold
    line = next(l for l in path.read_text().splitlines() if not l.startswith("#"))
    assert len(line.split("\t")) == trained.k + 2


def test_infinite_threshold_round_trip():
    m = ViabilityModel({DET_VERB: [4, 0]}, threshold=math.inf)
    assert loads_model(m.dumps()).threshold == math.inf


@pytest.mark.parametrize("text", ["a\tb\t1\n", "a\tb\tx\t1\n", "a\tb\t-1\t0\n"])
def test_malformed_model(text):
    with pytest.raises(ValueError):
        loads_model(text)


def test_outcome_counts(trained):
    c = outcome_counts(trained)
    assert c["failures"] > c["successes"] > 0
