"""Words with a twisted product, their rational spans, and finite models.

The free structure lives on bracketed words: sequences of generators, each
carrying a bit, with an involution that flips every bit and a product that
twists the left factor as it folds in.  Finite Cayley-table structures act
as extension targets, small censuses classify every table of a given order
against the laws, and a tiny expression language drives it all from text.
"""

from .algebra import AlgebraElement, add, alpha_alg, diamond_alg, equals, scale
from .census import Census, canonical_form, census, iter_matching
from .expressions import (
    ModeError,
    ParseError,
    eval_algebra,
    eval_word,
    generator_expression,
    parse_expression,
    render_expr,
)
from .finite import (
    FiniteHomMagma,
    LawReport,
    adjoin_zero,
    check_associative,
    check_hom_associative,
    check_involutive_alpha,
    check_multiplicative,
    classify,
    fixture,
    has_zero,
    relabel,
    structure_from_dict,
    structure_to_dict,
)
from .universal import GeneratorAssignment, extend, verify_morphism, verify_uniqueness
from .words import (
    Letter,
    Word,
    alpha_power,
    alpha_word,
    concat,
    diamond,
    diamond_closed,
    embed,
    iter_words,
    parse_word,
    render_word,
    word_length,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "Census",
    "FiniteHomMagma",
    "GeneratorAssignment",
    "LawReport",
    "Letter",
    "ModeError",
    "ParseError",
    "Word",
    "add",
    "adjoin_zero",
    "alpha_alg",
    "alpha_power",
    "alpha_word",
    "canonical_form",
    "census",
    "check_associative",
    "check_hom_associative",
    "check_involutive_alpha",
    "check_multiplicative",
    "classify",
    "concat",
    "diamond",
    "diamond_alg",
    "diamond_closed",
    "embed",
    "equals",
    "eval_algebra",
    "eval_word",
    "extend",
    "fixture",
    "generator_expression",
    "has_zero",
    "iter_matching",
    "iter_words",
    "parse_expression",
    "parse_word",
    "relabel",
    "render_expr",
    "render_word",
    "scale",
    "structure_from_dict",
    "structure_to_dict",
    "verify_morphism",
    "verify_uniqueness",
    "word_length",
]
