import pytest
from hypothesis import strategies as st

from incrccg.categories import Atom, BACKWARD, Complex, FORWARD
from incrccg.derivation import leaf, make_node
from incrccg.rules import BWD, FWD, RuleUse

F0, F1, B0, B1 = RuleUse(FWD, 0), RuleUse(FWD, 1), RuleUse(BWD, 0), RuleUse(BWD, 1)


def categories(max_depth=6, atoms=("a", "b", "c", "d")):
    base = st.sampled_from(atoms).map(Atom)
    return st.recursive(
        base,
        lambda inner: st.builds(Complex, inner, st.sampled_from((FORWARD, BACKWARD)), inner),
        max_leaves=2 ** max_depth,
    )


@pytest.fixture
def flowers_derivation():
    """the flowers sent, as built by the eager parser."""
    return make_node(F1, make_node(F0, leaf("the", "s/(s\\np)/n"), leaf("flowers", "n")),
                     leaf("sent", "s\\np/pp"))


@pytest.fixture
def whose_derivation():
    return make_node(
        F0,
        make_node(F0, leaf("whose", "q/(s/np)/n"), leaf("cat", "n")),
        make_node(F1, make_node(F1, leaf("did", "s/s"), leaf("fred", "s/(s\\np)")),
                  leaf("find", "s\\np/np")))


@pytest.fixture
def john_left():
    return make_node(F0, make_node(F1, leaf("john", "s/vp"), leaf("loves", "vp/np")),
                     leaf("mary", "np"))


@pytest.fixture
def john_right():
    return make_node(F0, leaf("john", "s/vp"),
                     make_node(F0, leaf("loves", "vp/np"), leaf("mary", "np")))


@pytest.fixture
def bcbc_derivation():
    """ab (c dc bd): the b\\c constituent is hidden under two backward applications."""
    inner = make_node(B0, make_node(B0, leaf("c", "c"), leaf("dc", "d\\c")), leaf("bd", "b\\d"))
    return make_node(F0, leaf("ab", "a/b"), inner)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
