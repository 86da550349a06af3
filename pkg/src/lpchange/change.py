"""Expansion and revision of programs, computed on SE-model sets.

Each operator has a set-level core (``*_sets``) working on SE-model sets
directly and a program-level wrapper that enumerates the operands' SE
models over a common alphabet and attaches a canonical program.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Literal

from .canonical import CanonicalProgram, canonical_glp
from .orders import sigma_card, sigma_subset
from .semantics import MAX_ATOMS, SEModelSet, se_models
from .syntax import Alphabet, Program, effective_alphabet

Operator = Literal["expand", "revise", "revise_weak", "revise_card"]


@dataclass(frozen=True)
class ChangeResult:
    se: SEModelSet
    program: CanonicalProgram
    operator: str
    alphabet: Alphabet


def expand_sets(sp: SEModelSet, sq: SEModelSet) -> SEModelSet:
    return sp & sq


def _revise_with(sp: SEModelSet, sq: SEModelSet, sigma: Callable) -> SEModelSet:
    if not sp:
        return sq
    there = sigma(sq.models(), sp.models()).masks
    selected = sigma(sq, sp).pairs
    pairs = {(y, y) for y in there}
    pairs |= {(x, y) for x, y in selected if x != y and y in there}
    return SEModelSet(sq.alphabet, frozenset(pairs))


def revise_sets(sp: SEModelSet, sq: SEModelSet) -> SEModelSet:
    return _revise_with(sp, sq, sigma_subset)


def revise_card_sets(sp: SEModelSet, sq: SEModelSet) -> SEModelSet:
    return _revise_with(sp, sq, sigma_card)


def revise_weak_sets(sp: SEModelSet, sq: SEModelSet) -> SEModelSet:
    if not sp:
        return sq
    selected = sigma_subset(sq, sp).pairs
    return SEModelSet(sq.alphabet, selected | {(y, y) for _, y in selected})


SET_OPERATORS: dict[str, Callable[[SEModelSet, SEModelSet], SEModelSet]] = {
    "expand": expand_sets,
    "revise": revise_sets,
    "revise_weak": revise_weak_sets,
    "revise_card": revise_card_sets,
}


def apply(
    operator: Operator,
    p: Program,
    q: Program,
    alphabet: Alphabet | Iterable[str] | None = None,
    max_atoms: int | None = MAX_ATOMS,
) -> ChangeResult:
    a = effective_alphabet([p, q], alphabet)
    se = SET_OPERATORS[operator](se_models(p, a, max_atoms), se_models(q, a, max_atoms))
    return ChangeResult(se, canonical_glp(se), operator, a)


def expand(p: Program, q: Program, alphabet=None, max_atoms: int | None = MAX_ATOMS) -> ChangeResult:
    return apply("expand", p, q, alphabet, max_atoms)


def revise(p: Program, q: Program, alphabet=None, max_atoms: int | None = MAX_ATOMS) -> ChangeResult:
    """Revision of p by q under inclusion-minimal change."""
    return apply("revise", p, q, alphabet, max_atoms)


def revise_weak(p: Program, q: Program, alphabet=None, max_atoms: int | None = MAX_ATOMS) -> ChangeResult:
    return apply("revise_weak", p, q, alphabet, max_atoms)


def revise_card(p: Program, q: Program, alphabet=None, max_atoms: int | None = MAX_ATOMS) -> ChangeResult:
    """Revision of p by q under cardinality-minimal change."""
    return apply("revise_card", p, q, alphabet, max_atoms)
