"""Programs realizing a given SE-model set.

For a well-defined set S over alphabet A the GLP has

* ``:- Y, not (A - Y).`` for every Y with (Y, Y) not in S, and
* ``(Y - X) ; not Y :- X, not (A - Y).`` for every X ⊂ Y with (X, Y) not in S
  but (Y, Y) in S.

For a complete set the second kind drops the negated head, giving a DLP.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .semantics import IncompleteError, SEModelSet, completeness_witness, well_definedness_witness
from .semantics import NotWellDefinedError
from .syntax import Program, Rule


@dataclass(frozen=True)
class CanonicalProgram:
    program: Program
    source: SEModelSet
    kind: Literal["glp", "dlp"]

    def __str__(self) -> str:
        return str(self.program)


def _missing(s: SEModelSet) -> list[tuple[int, int]]:
    """SE interpretations outside s, ordered by (|Y|, Y, |X|, X)."""
    full = s.alphabet.full
    out = []
    for y in range(full + 1):
        x = 0
        while True:
            if (x, y) not in s.pairs:
                if x == y or (y, y) in s.pairs:
                    out.append((x, y))
            if x == y:
                break
            x = (x - y) & y
    out.sort(key=lambda p: (p[1].bit_count(), p[1], p[0].bit_count(), p[0]))
    return out


def _build(s: SEModelSet, negated_head: bool) -> Program:
    a = s.alphabet
    m = a.members
    rules = []
    for x, y in _missing(s):
        outside = m(a.full & ~y)
        if x == y:
            rules.append(Rule(body_pos=m(y), body_neg=outside))
        else:
            rules.append(
                Rule(
                    head_pos=m(y & ~x),
                    head_neg=m(y) if negated_head else frozenset(),
                    body_pos=m(x),
                    body_neg=outside,
                )
            )
    return Program.of(rules, a.atoms)


def canonical_glp(s: SEModelSet) -> CanonicalProgram:
    witness = well_definedness_witness(s)
    if witness is not None:
        raise NotWellDefinedError(witness)
    return CanonicalProgram(_build(s, negated_head=True), s, "glp")


def canonical_dlp(s: SEModelSet) -> CanonicalProgram:
    witness = completeness_witness(s)
    if witness is not None:
        raise IncompleteError(witness)
    return CanonicalProgram(_build(s, negated_head=False), s, "dlp")
