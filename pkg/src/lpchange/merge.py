"""Meet, join, arbitration and constraint-based (basic) merging of programs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canonical import CanonicalProgram, canonical_glp
from .change import ChangeResult
from .orders import MAX_TUPLES, coord_zero, min_a, min_b, tuple_union
from .semantics import MAX_ATOMS, SEModelSet, se_models
from .syntax import Alphabet, BeliefProfile, Program, effective_alphabet


@dataclass(frozen=True)
class MergeResult:
    se: SEModelSet
    program: CanonicalProgram
    operator: str
    alphabet: Alphabet
    # profile positions of unsatisfiable members left out of the merge
    dropped: tuple[int, ...] = field(default=())


def meet(p: Program, q: Program, alphabet=None, max_atoms: int | None = MAX_ATOMS) -> ChangeResult:
    a = effective_alphabet([p, q], alphabet)
    se = se_models(p, a, max_atoms) & se_models(q, a, max_atoms)
    return ChangeResult(se, canonical_glp(se), "meet", a)


def join(p: Program, q: Program, alphabet=None, max_atoms: int | None = MAX_ATOMS) -> ChangeResult:
    a = effective_alphabet([p, q], alphabet)
    se = se_models(p, a, max_atoms) | se_models(q, a, max_atoms)
    return ChangeResult(se, canonical_glp(se), "join", a)


def _combine(there: frozenset[int], pairs: frozenset[tuple[int, int]], alphabet: Alphabet) -> SEModelSet:
    out = {(y, y) for y in there}
    out |= {(x, y) for x, y in pairs if x != y and y in there}
    return SEModelSet(alphabet, frozenset(out))


def arbitrate_sets(sets: Sequence[SEModelSet], cap: int | None = MAX_TUPLES) -> tuple[SEModelSet, tuple[int, ...]]:
    """Arbitration on SE-model sets; returns the result and the dropped positions."""
    alphabet = sets[0].alphabet
    dropped = tuple(i for i, s in enumerate(sets) if not s)
    kept = [s for s in sets if s]
    if not kept:
        return SEModelSet(alphabet, frozenset()), dropped
    there = tuple_union(min_a([s.models() for s in kept], cap), alphabet, se=False)
    pairs = tuple_union(min_a(kept, cap), alphabet, se=True)
    return _combine(there.masks, pairs.pairs, alphabet), dropped


def merge_basic_sets(sets: Sequence[SEModelSet], cap: int | None = MAX_TUPLES) -> tuple[SEModelSet, tuple[int, ...]]:
    """Basic merging on SE-model sets; ``sets[0]`` is the constraints program."""
    alphabet = sets[0].alphabet
    if not sets[0]:
        return SEModelSet(alphabet, frozenset()), ()
    dropped = tuple(i for i, s in enumerate(sets) if i > 0 and not s)
    kept = [sets[0]] + [s for i, s in enumerate(sets) if i > 0 and s]
    there = coord_zero(min_b([s.models() for s in kept], cap), alphabet, se=False)
    pairs = coord_zero(min_b(kept, cap), alphabet, se=True)
    return _combine(there.masks, pairs.pairs, alphabet), dropped


def _profile_sets(programs: Sequence[Program], alphabet, max_atoms) -> tuple[Alphabet, list[SEModelSet]]:
    a = effective_alphabet(programs, alphabet)
    return a, [se_models(p, a, max_atoms) for p in programs]


def arbitrate(
    profile: BeliefProfile | Sequence[Program],
    alphabet: Alphabet | Iterable[str] | None = None,
    max_atoms: int | None = MAX_ATOMS,
    cap: int | None = MAX_TUPLES,
) -> MergeResult:
    programs = list(profile.programs if isinstance(profile, BeliefProfile) else profile)
    if isinstance(profile, BeliefProfile) and profile.has_constraints:
        raise ValueError("arbitration takes a profile without a constraints program")
    a, sets = _profile_sets(programs, alphabet, max_atoms)
    se, dropped = arbitrate_sets(sets, cap)
    return MergeResult(se, canonical_glp(se), "arbitrate", a, dropped)


def merge_basic(
    profile: BeliefProfile | Sequence[Program],
    alphabet: Alphabet | Iterable[str] | None = None,
    max_atoms: int | None = MAX_ATOMS,
    cap: int | None = MAX_TUPLES,
) -> MergeResult:
    """Merge ``profile[1:]`` subject to the constraints program ``profile[0]``."""
    if isinstance(profile, BeliefProfile):
        if not profile.has_constraints:
            raise ValueError("basic merging needs a constraints program at position 0")
        programs = list(profile.programs)
    else:
        programs = list(profile)
    a, sets = _profile_sets(programs, alphabet, max_atoms)
    se, dropped = merge_basic_sets(sets, cap)
    return MergeResult(se, canonical_glp(se), "merge_basic", a, dropped)
