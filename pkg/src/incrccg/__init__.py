"""Incremental CCG parsing over left-branching analyses, with right-normal-form revealing."""

from .categories import Atom, Complex, CategoryParseError, format_category, parse_category
from .derivation import Leaf, Node, internal_count, leaf, make_node, pretty, sigma
from .lexicon import Lexicon, bundled_lexicon, load_lexicon, loads_lexicon
from .parser import EAGER, EXHAUSTIVE, ParsePolicy, ParseResult, StuckError, parse
from .rewrite import LeftmostInnermost, RandomSeeded, RootFirst, find_redexes, normalize
from .rules import RuleConfig, RuleUse, apply_rule, enumerate_combinations
from .viability import ViabilityModel, load_model, train

__version__ = "0.1.0"

__all__ = [
    "Atom", "Complex", "CategoryParseError", "format_category", "parse_category",
    "Leaf", "Node", "internal_count", "leaf", "make_node", "pretty", "sigma",
    "Lexicon", "bundled_lexicon", "load_lexicon", "loads_lexicon",
    "EAGER", "EXHAUSTIVE", "ParsePolicy", "ParseResult", "StuckError", "parse",
    "LeftmostInnermost", "RandomSeeded", "RootFirst", "find_redexes", "normalize",
    "RuleConfig", "RuleUse", "apply_rule", "enumerate_combinations",
    "ViabilityModel", "load_model", "train",
]
