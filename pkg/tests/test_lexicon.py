import pytest

from incrccg.categories import cat
from incrccg.lexicon import (LexiconError, UnknownWordError, bundled_lexicon, bundled_names,
                             bundled_sentences, chain_lexicon, load_lexicon, loads_lexicon,
                             read_corpus)


def test_type_raised_proper_name():
    lex = loads_lexicon("fred := np | s/(s\\np)\n")
    assert lex.categories("fred") == [cat("np"), cat("s/(s\\np)")]


def test_single_entry():
    assert loads_lexicon("sent := s\\np/pp").categories("sent") == [cat("s\\np/pp")]


def test_missing_separator_reports_line():
    with pytest.raises(LexiconError) as err:
        loads_lexicon("# header\nfred := np\nsent s\\np/pp\n")
    assert err.value.line == 3
    assert "line 3" in str(err.value)


@pytest.mark.parametrize("text", [
    "", "# only a comment\n", "x := \n", "x := np |\n", "x := (np\n", "two words := np\n",
    "@goal\nx := np\n", "@frobnicate s\nx := np\n", "@atoms s\nx := np\n",
    "@atoms s np\n@goal q\nx := np\n",
])
def test_malformed(text):
    with pytest.raises(LexiconError):
        loads_lexicon(text)


def test_duplicate_lines_merge():
    lex = loads_lexicon("x := np\nx := s/(s\\np) | np\n")
    assert lex.categories("x") == [cat("np"), cat("s/(s\\np)")]


def test_goals_and_default():
    assert loads_lexicon("x := np").goals == [cat("s"), cat("q")]
    lex = loads_lexicon("@goal np s\nx := np")
    assert lex.is_goal(cat("np")) and not lex.is_goal(cat("q"))


def test_round_trip(tmp_path):
    for name in bundled_names():
        lex = bundled_lexicon(name)
        path = tmp_path / f"{name}.lex"
        lex.save(path)
        again = load_lexicon(path)
        assert again == lex


def test_unknown_word():
    lex = bundled_lexicon("madly")
    with pytest.raises(UnknownWordError) as err:
        lex.lookup("bob", 4)
    assert err.value.word == "bob" and err.value.position == 4
    assert "bob" in str(err.value)


def test_bundled_data():
    assert {"flowers", "whose", "madly", "bcbc", "reanalysis", "insults", "pp"} <= \
        set(bundled_names())
    for name in bundled_names():
        lex = bundled_lexicon(name)
        for sentence in bundled_sentences(name):
            assert all(w in lex for w in sentence)


def test_corpus_reader(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("# comment\n the  cat sat \n\nx y\n", encoding="utf-8")
    assert read_corpus(path) == [["the", "cat", "sat"], ["x", "y"]]


def test_chain_lexicon():
    lex = chain_lexicon(3)
    assert lex.categories("w2") == [cat("x2/x3")]
    assert lex.goals == [cat("x0/x3")]
