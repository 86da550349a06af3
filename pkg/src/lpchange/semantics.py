"""Classical models, reducts, answer sets and SE models by exhaustive enumeration.

Interpretations are bitmasks over an :class:`Alphabet`; an SE interpretation
is a pair ``(x, y)`` of masks with ``x`` a submask of ``y``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._backend import kernels
from .syntax import Alphabet, AlphabetError, Program, Rule, effective_alphabet

MAX_ATOMS = 14


class CapacityError(RuntimeError):
    """The alphabet (or a tuple product) is too large for exhaustive enumeration."""


class NotWellDefinedError(ValueError):
    def __init__(self, pair: tuple[frozenset[str], frozenset[str]]):
        self.pair = pair
        x, y = pair
        super().__init__(f"SE set is not well-defined: contains {format_pair(x, y)} but not {format_pair(y, y)}")


class IncompleteError(ValueError):
    def __init__(self, triple: tuple[frozenset[str], frozenset[str], frozenset[str]]):
        self.triple = triple
        x, y, z = triple
        super().__init__(
            f"SE set is not complete: has {format_pair(x, y)} and {format_pair(z, z)} but not {format_pair(x, z)}"
        )


def check_capacity(alphabet: Alphabet, max_atoms: int | None = MAX_ATOMS) -> None:
    if max_atoms is not None and len(alphabet) > max_atoms:
        raise CapacityError(
            f"alphabet has {len(alphabet)} atoms, above the enumeration cap of {max_atoms} (see --max-atoms)"
        )


def rule_masks(program: Program, alphabet: Alphabet) -> list[tuple[int, int, int, int]]:
    return [tuple(alphabet.mask(part) for part in r.parts) for r in program.rules]  # type: ignore[misc]


def _alphabet_for(program: Program, alphabet: Alphabet | Iterable[str] | None) -> Alphabet:
    return effective_alphabet([program], alphabet)


@dataclass(frozen=True)
class ModelSet:
    """A set of classical interpretations over a fixed alphabet."""

    alphabet: Alphabet
    masks: frozenset[int]

    @classmethod
    def of(cls, alphabet: Alphabet, interpretations: Iterable[Iterable[str]]) -> "ModelSet":
        return cls(alphabet, frozenset(alphabet.mask(i) for i in interpretations))

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.masks))

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, int):
            return item in self.masks
        return self.alphabet.mask(item) in self.masks  # type: ignore[arg-type]

    def named(self) -> list[frozenset[str]]:
        return [self.alphabet.members(m) for m in self]

    def __str__(self) -> str:
        return "\n".join(format_set(self.alphabet.members(m)) for m in self)


@dataclass(frozen=True)
class SEModelSet:
    """A set of SE interpretations over a fixed alphabet.

    Iteration is sorted by ``(there, here)`` on the integer bit vectors.
    """

    alphabet: Alphabet
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        full = self.alphabet.full
        for x, y in self.pairs:
            if x & ~y or y & ~full:
                raise ValueError(f"not an SE interpretation over the alphabet: {(x, y)}")

    @classmethod
    def of(cls, alphabet: Alphabet, pairs: Iterable[tuple[Iterable[str], Iterable[str]]]) -> "SEModelSet":
        return cls(alphabet, frozenset((alphabet.mask(x), alphabet.mask(y)) for x, y in pairs))

    @classmethod
    def everything(cls, alphabet: Alphabet) -> "SEModelSet":
        pairs = []
        for y in range(alphabet.full + 1):
            x = 0
            while True:
                pairs.append((x, y))
                if x == y:
                    break
                x = (x - y) & y
        return cls(alphabet, frozenset(pairs))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs, key=lambda p: (p[1], p[0])))

    def __len__(self) -> int:
        return len(self.pairs)

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def __contains__(self, item: object) -> bool:
        x, y = item  # type: ignore[misc]
        if not isinstance(x, int):
            x, y = self.alphabet.mask(x), self.alphabet.mask(y)
        return (x, y) in self.pairs

    def named(self) -> list[tuple[frozenset[str], frozenset[str]]]:
        return [(self.alphabet.members(x), self.alphabet.members(y)) for x, y in self]

    def models(self) -> ModelSet:
        """Classical models: the there-parts of total pairs ``(Y, Y)``."""
        return ModelSet(self.alphabet, frozenset(y for x, y in self.pairs if x == y))

    def _same(self, other: "SEModelSet") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("SE sets are over different alphabets")

    def __and__(self, other: "SEModelSet") -> "SEModelSet":
        self._same(other)
        return SEModelSet(self.alphabet, self.pairs & other.pairs)

    def __or__(self, other: "SEModelSet") -> "SEModelSet":
        self._same(other)
        return SEModelSet(self.alphabet, self.pairs | other.pairs)

    def __sub__(self, other: "SEModelSet") -> "SEModelSet":
        self._same(other)
        return SEModelSet(self.alphabet, self.pairs - other.pairs)

    def __le__(self, other: "SEModelSet") -> bool:
        self._same(other)
        return self.pairs <= other.pairs

    def __str__(self) -> str:
        return render_se(self)


# --- models ------------------------------------------------------------------


def classical_models(
    program: Program, alphabet: Alphabet | Iterable[str] | None = None, max_atoms: int | None = MAX_ATOMS
) -> ModelSet:
    a = _alphabet_for(program, alphabet)
    check_capacity(a, max_atoms)
    return ModelSet(a, frozenset(kernels.classical_models(len(a), rule_masks(program, a))))


def reduct(program: Program, y: Iterable[str]) -> Program:
    """Positive disjunctive program ``H+ :- B+`` for the rules Y does not block."""
    y = frozenset(y)
    kept = [
        Rule(r.head_pos, frozenset(), r.body_pos, frozenset(), r.id)
        for r in program.rules
        if r.head_neg <= y and not (r.body_neg & y)
    ]
    return Program(tuple(kept), program.declared_alphabet)


def se_models(
    program: Program, alphabet: Alphabet | Iterable[str] | None = None, max_atoms: int | None = MAX_ATOMS
) -> SEModelSet:
    a = _alphabet_for(program, alphabet)
    check_capacity(a, max_atoms)
    return SEModelSet(a, frozenset(kernels.se_models(len(a), rule_masks(program, a))))


def answer_sets(
    program: Program, alphabet: Alphabet | Iterable[str] | None = None, max_atoms: int | None = MAX_ATOMS
) -> ModelSet:
    a = _alphabet_for(program, alphabet)
    check_capacity(a, max_atoms)
    rules = rule_masks(program, a)
    out = []
    for y in kernels.classical_models(len(a), rules):
        reduced = [(hp, bp) for hp, hn, bp, bn in rules if not (hn & ~y) and not (bn & y)]
        # y is a model of the reduct; look for a smaller one
        x = (y - 1) & y if y else None
        minimal = True
        while x is not None:
            if all(bp & ~x or hp & x for hp, bp in reduced):
                minimal = False
                break
            x = None if x == 0 else (x - 1) & y
        if minimal:
            out.append(y)
    return ModelSet(a, frozenset(out))


# --- structural predicates ---------------------------------------------------


def well_definedness_witness(s: SEModelSet) -> tuple[frozenset[str], frozenset[str]] | None:
    for x, y in s:
        if (y, y) not in s.pairs:
            return s.alphabet.members(x), s.alphabet.members(y)
    return None


def is_well_defined(s: SEModelSet) -> bool:
    return well_definedness_witness(s) is None


def _require_well_defined(s: SEModelSet) -> None:
    witness = well_definedness_witness(s)
    if witness is not None:
        raise NotWellDefinedError(witness)


def completeness_witness(s: SEModelSet) -> tuple[frozenset[str], frozenset[str], frozenset[str]] | None:
    """A triple (X, Y, Z) with (X,Y), (Z,Z) in s, Y ⊆ Z, and (X,Z) missing."""
    _require_well_defined(s)
    totals = sorted(y for x, y in s.pairs if x == y)
    for x, y in s:
        for z in totals:
            if not (y & ~z) and (x, z) not in s.pairs:
                m = s.alphabet.members
                return m(x), m(y), m(z)
    return None


def is_complete(s: SEModelSet) -> bool:
    return completeness_witness(s) is None


def complete_closure(s: SEModelSet) -> SEModelSet:
    _require_well_defined(s)
    totals = [y for x, y in s.pairs if x == y]
    # one pass suffices: lifting to Z and then to Z' ⊇ Z equals lifting to Z'
    added = {(x, z) for x, y in s.pairs for z in totals if not (y & ~z)}
    return SEModelSet(s.alphabet, s.pairs | added)


def entails_s(
    p: Program, q: Program, alphabet: Alphabet | Iterable[str] | None = None, max_atoms: int | None = MAX_ATOMS
) -> bool:
    a = effective_alphabet([p, q], alphabet)
    return se_models(p, a, max_atoms) <= se_models(q, a, max_atoms)


def strongly_equivalent(
    p: Program, q: Program, alphabet: Alphabet | Iterable[str] | None = None, max_atoms: int | None = MAX_ATOMS
) -> bool:
    a = effective_alphabet([p, q], alphabet)
    return se_models(p, a, max_atoms) == se_models(q, a, max_atoms)


# --- text and JSON forms -----------------------------------------------------


def format_set(atoms: Iterable[str]) -> str:
    return "{" + ",".join(sorted(atoms)) + "}"


def format_pair(x: Iterable[str], y: Iterable[str]) -> str:
    return f"({format_set(x)},{format_set(y)})"


def render_se(s: SEModelSet, with_alphabet: bool = True) -> str:
    lines = []
    mentioned = 0
    for _, y in s.pairs:
        mentioned |= y
    if with_alphabet and mentioned != s.alphabet.full:
        lines.append("#alphabet " + ", ".join(s.alphabet.atoms) + ".")
    lines.extend(format_pair(x, y) for x, y in s.named())
    return "\n".join(lines) + ("\n" if lines else "")


def se_to_json(s: SEModelSet) -> list[list[list[str]]]:
    return [[sorted(x), sorted(y)] for x, y in s.named()]


_BRACED = re.compile(r"\(\s*\{([^{}]*)\}\s*,\s*\{([^{}]*)\}\s*\)")
_COMPACT = re.compile(r"\(\s*([a-z∅]*)\s*,\s*([a-z∅]*)\s*\)")
_DIRECTIVE = re.compile(r"#alphabet\b([^.]*)\.")


def _atoms_of(text: str) -> frozenset[str]:
    return frozenset(a.strip() for a in text.split(",") if a.strip())


def _compact_atoms(text: str) -> frozenset[str]:
    return frozenset(c for c in text if c != "∅")


def parse_se_text(text: str, alphabet: Iterable[str] | None = None, source: str | None = None) -> SEModelSet:
    """Read SE interpretations, one per line: ``({p},{p,q})`` or compact ``(p,pq)``.

    A JSON array of ``[[here...], [there...]]`` (optionally wrapped in an object
    with ``alphabet``/``se_models`` keys) is accepted as well.
    """
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{\""):
        return _parse_se_json(stripped, alphabet, source)
    pairs: list[tuple[frozenset[str], frozenset[str]]] = []
    declared: set[str] = set()
    where = f"{source}:" if source else ""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        m = _DIRECTIVE.fullmatch(line)
        if m:
            declared |= _atoms_of(m.group(1))
            continue
        m = _BRACED.fullmatch(line)
        if m:
            pair = (_atoms_of(m.group(1)), _atoms_of(m.group(2)))
        else:
            m = _COMPACT.fullmatch(line)
            if not m:
                raise ValueError(f"{where}{lineno}: cannot read SE interpretation {line!r}")
            pair = (_compact_atoms(m.group(1)), _compact_atoms(m.group(2)))
        if not pair[0] <= pair[1]:
            raise ValueError(f"{where}{lineno}: here-part is not a subset of there-part in {line!r}")
        pairs.append(pair)
    return _build(pairs, declared, alphabet)


def _parse_se_json(text: str, alphabet, source) -> SEModelSet:
    data = json.loads(text)
    declared: set[str] = set()
    if isinstance(data, dict):
        declared = set(data.get("alphabet", []))
        data = data.get("se_models", [])
    pairs = []
    for x, y in data:
        pair = (frozenset(x), frozenset(y))
        if not pair[0] <= pair[1]:
            raise ValueError(f"{source or 'input'}: here-part is not a subset of there-part in {[x, y]}")
        pairs.append(pair)
    return _build(pairs, declared, alphabet)


def _build(pairs, declared, alphabet) -> SEModelSet:
    needed = set(declared)
    for _, y in pairs:
        needed |= y
    if alphabet is None:
        a = Alphabet(tuple(needed))
    else:
        a = alphabet if isinstance(alphabet, Alphabet) else Alphabet(tuple(alphabet))
        missing = sorted(needed - set(a.atoms))
        if missing:
            raise AlphabetError(f"alphabet override is missing atom {missing[0]!r}")
    return SEModelSet.of(a, pairs)


def read_se(path, alphabet: Iterable[str] | None = None) -> SEModelSet:
    with open(path, encoding="utf-8") as fh:
        return parse_se_text(fh.read(), alphabet, str(path))
