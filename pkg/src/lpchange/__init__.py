"""Belief change for logic programs under the answer-set semantics, via SE models."""

from ._backend import NAME as BACKEND
from .canonical import CanonicalProgram, canonical_dlp, canonical_glp
from .change import ChangeResult, expand, revise, revise_card, revise_weak
from .merge import MergeResult, arbitrate, join, meet, merge_basic
from .orders import min_a, min_b, sigma_card, sigma_subset
from .semantics import (
    MAX_ATOMS,
    CapacityError,
    IncompleteError,
    ModelSet,
    NotWellDefinedError,
    SEModelSet,
    answer_sets,
    classical_models,
    complete_closure,
    entails_s,
    is_complete,
    is_well_defined,
    parse_se_text,
    read_se,
    reduct,
    render_se,
    se_models,
    strongly_equivalent,
)
from .syntax import (
    Alphabet,
    AlphabetError,
    BeliefProfile,
    ParseError,
    Program,
    Rule,
    effective_alphabet,
    parse_program,
    read_program,
    render_program,
    rule,
)

__all__ = [
    "BACKEND",
    "MAX_ATOMS",
    "Alphabet",
    "AlphabetError",
    "BeliefProfile",
    "CanonicalProgram",
    "CapacityError",
    "ChangeResult",
    "IncompleteError",
    "MergeResult",
    "ModelSet",
    "NotWellDefinedError",
    "ParseError",
    "Program",
    "Rule",
    "SEModelSet",
    "answer_sets",
    "arbitrate",
    "canonical_dlp",
    "canonical_glp",
    "classical_models",
    "complete_closure",
    "effective_alphabet",
    "entails_s",
    "expand",
    "is_complete",
    "is_well_defined",
    "join",
    "meet",
    "merge_basic",
    "min_a",
    "min_b",
    "parse_program",
    "parse_se_text",
    "read_program",
    "read_se",
    "reduct",
    "render_program",
    "render_se",
    "revise",
    "revise_card",
    "revise_weak",
    "rule",
    "se_models",
    "sigma_card",
    "sigma_subset",
    "strongly_equivalent",
]
