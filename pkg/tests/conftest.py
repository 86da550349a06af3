import re

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from lpchange import Program, Rule, SEModelSet, parse_program
from lpchange.encodings import solver_available
from lpchange.syntax import Alphabet

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_COMPACT_PAIR = re.compile(r"\(\s*([a-z∅]*)\s*,\s*([a-z∅]*)\s*\)")


def prog(text: str) -> Program:
    return parse_program(text)


def interp(text: str) -> frozenset:
    """Compact interpretation: ``"pq"`` is {p, q}, ``""`` or ``"∅"`` is empty."""
    return frozenset(c for c in text if c != "∅")


def pairs(text: str) -> set:
    """Compact SE listing, e.g. ``"(∅,q) (q,q)"``."""
    return {(interp(x), interp(y)) for x, y in _COMPACT_PAIR.findall(text)}


def named(s) -> set:
    """An SEModelSet or ModelSet as a plain set of frozensets / frozenset pairs."""
    return set(s.named())


def se_set(atoms, text_or_pairs) -> SEModelSet:
    ps = pairs(text_or_pairs) if isinstance(text_or_pairs, str) else text_or_pairs
    return SEModelSet.of(Alphabet.of(atoms), ps)


def atom_sets(atoms, max_size=None):
    return st.frozensets(st.sampled_from(list(atoms)), max_size=max_size)


@st.composite
def programs(draw, atoms=("p", "q", "r"), max_rules=4, head_negation=True):
    part = atom_sets(atoms, max_size=2)
    rules = []
    for _ in range(draw(st.integers(0, max_rules))):
        hn = draw(part) if head_negation else frozenset()
        rules.append(Rule(draw(part), hn, draw(part), draw(part)))
    return Program.of(rules)


@st.composite
def well_defined_sets(draw, atoms=("p", "q", "r")):
    """Random well-defined SE set: choose totals, then any here-parts below them."""
    a = Alphabet.of(atoms)
    ys = draw(st.sets(st.integers(0, a.full)))
    out = set()
    for y in ys:
        out.add((y, y))
        for x in range(y):
            if x & ~y == 0 and draw(st.booleans()):
                out.add((x, y))
    return SEModelSet(a, frozenset(out))


requires_solver = pytest.mark.skipif(not solver_available(), reason="no ASP solver configured")
