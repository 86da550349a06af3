"""Propositional generalised logic programs: data types, parser and printer.

Surface syntax::

    #alphabet p, q, r.          % optional language declaration
    p ; not q :- r, not s.      % disjunctive head, default negation anywhere
    :- p, q.                    % integrity constraint
    p.                          % fact

Rules carry 1-based integer ids assigned in source order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
KEYWORDS = frozenset({"not"})


class ParseError(ValueError):
    """Syntax error with a source position."""

    def __init__(self, message: str, line: int, column: int, source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


class AlphabetError(ValueError):
    """An alphabet override does not cover the atoms of an operand."""


def check_atom(name: str) -> str:
    if not ATOM_RE.match(name) or name in KEYWORDS:
        raise ValueError(f"invalid atom name {name!r}")
    return name


@dataclass(frozen=True)
class Rule:
    """``head_pos ; not head_neg :- body_pos, not body_neg.``"""

    head_pos: frozenset[str] = frozenset()
    head_neg: frozenset[str] = frozenset()
    body_pos: frozenset[str] = frozenset()
    body_neg: frozenset[str] = frozenset()
    id: int = 0

    def __post_init__(self):
        for part in ("head_pos", "head_neg", "body_pos", "body_neg"):
            value = getattr(self, part)
            if not isinstance(value, frozenset):
                object.__setattr__(self, part, frozenset(value))

    @property
    def parts(self) -> tuple[frozenset[str], frozenset[str], frozenset[str], frozenset[str]]:
        return (self.head_pos, self.head_neg, self.body_pos, self.body_neg)

    def atoms(self) -> frozenset[str]:
        return self.head_pos | self.head_neg | self.body_pos | self.body_neg

    def is_constraint(self) -> bool:
        return not self.head_pos and not self.head_neg

    def is_disjunctive(self) -> bool:
        return not self.head_neg

    def with_id(self, rule_id: int) -> "Rule":
        return Rule(*self.parts, id=rule_id)


def rule(head: Iterable[str] = (), body: Iterable[str] = ()) -> Rule:
    """Build a rule from literal strings, e.g. ``rule(["p", "not q"], ["r"])``."""
    parts: list[set[str]] = [set(), set(), set(), set()]
    for offset, literals in ((0, head), (2, body)):
        for lit in literals:
            words = lit.split()
            if len(words) == 2 and words[0] == "not":
                parts[offset + 1].add(check_atom(words[1]))
            elif len(words) == 1:
                parts[offset].add(check_atom(words[0]))
            else:
                raise ValueError(f"bad literal {lit!r}")
    return Rule(*(frozenset(p) for p in parts))


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()
    declared_alphabet: frozenset[str] | None = None

    def __post_init__(self):
        rules = tuple(self.rules)
        ids = [r.id for r in rules]
        if len(set(ids)) != len(ids):
            rules = tuple(r.with_id(i) for i, r in enumerate(rules, 1))
        object.__setattr__(self, "rules", tuple(sorted(rules, key=lambda r: r.id)))
        if self.declared_alphabet is not None:
            declared = frozenset(self.declared_alphabet)
            object.__setattr__(self, "declared_alphabet", declared)
            missing = self.occurring_atoms() - declared
            if missing:
                raise AlphabetError(
                    f"declared alphabet lacks occurring atom {sorted(missing)[0]!r}"
                )

    @classmethod
    def of(cls, rules: Iterable[Rule], alphabet: Iterable[str] | None = None) -> "Program":
        """Program with ids renumbered 1..n in the given order."""
        numbered = tuple(r.with_id(i) for i, r in enumerate(rules, 1))
        return cls(numbered, None if alphabet is None else frozenset(alphabet))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def occurring_atoms(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for r in self.rules:
            out |= r.atoms()
        return out

    def atoms(self) -> frozenset[str]:
        """Occurring atoms plus any declared language."""
        if self.declared_alphabet is not None:
            return self.declared_alphabet
        return self.occurring_atoms()

    def union(self, other: "Program") -> "Program":
        alphabet = None
        if self.declared_alphabet is not None or other.declared_alphabet is not None:
            alphabet = self.atoms() | other.atoms()
        return Program.of(list(self.rules) + list(other.rules), alphabet)

    def is_disjunctive(self) -> bool:
        return all(r.is_disjunctive() for r in self.rules)

    def rule_parts(self) -> list[tuple[frozenset[str], ...]]:
        return [r.parts for r in self.rules]

    def __str__(self) -> str:
        return render_program(self)


@dataclass(frozen=True)
class Alphabet:
    """Finite, lexicographically ordered set of atoms; atom i is bit i."""

    atoms: tuple[str, ...] = ()
    index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        atoms = tuple(sorted(set(self.atoms)))
        for a in atoms:
            check_atom(a)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "index", {a: i for i, a in enumerate(atoms)})

    @classmethod
    def of(cls, atoms: Iterable[str]) -> "Alphabet":
        return cls(tuple(atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.index

    @property
    def full(self) -> int:
        return (1 << len(self.atoms)) - 1

    def mask(self, atoms: Iterable[str]) -> int:
        m = 0
        for a in atoms:
            try:
                m |= 1 << self.index[a]
            except KeyError:
                raise AlphabetError(f"atom {a!r} is not in the alphabet {{{', '.join(self.atoms)}}}") from None
        return m

    def members(self, mask: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.atoms) if mask >> i & 1)

    def sorted_members(self, mask: int) -> list[str]:
        return [a for i, a in enumerate(self.atoms) if mask >> i & 1]

    def union(self, other: "Alphabet | Iterable[str]") -> "Alphabet":
        return Alphabet(tuple(set(self.atoms) | set(other)))


def effective_alphabet(operands: Sequence[Program], override: Iterable[str] | None = None) -> Alphabet:
    """The override if given (checked for coverage), else the union of operand atoms."""
    needed: set[str] = set()
    for p in operands:
        needed |= p.atoms()
    if override is None:
        return Alphabet(tuple(needed))
    alphabet = override if isinstance(override, Alphabet) else Alphabet(tuple(override))
    missing = sorted(needed - set(alphabet.atoms))
    if missing:
        raise AlphabetError(f"alphabet override is missing atom {missing[0]!r}")
    return alphabet


@dataclass(frozen=True)
class BeliefProfile:
    programs: tuple[Program, ...]
    has_constraints: bool = False

    def __post_init__(self):
        object.__setattr__(self, "programs", tuple(self.programs))
        if not self.programs:
            raise ValueError("a belief profile needs at least one program")

    def __len__(self) -> int:
        return len(self.programs)

    def __iter__(self) -> Iterator[Program]:
        return iter(self.programs)

    def __getitem__(self, i: int) -> Program:
        return self.programs[i]

    @property
    def constraints(self) -> Program:
        if not self.has_constraints:
            raise ValueError("profile has no constraints program")
        return self.programs[0]

    @property
    def members(self) -> tuple[Program, ...]:
        return self.programs[1:] if self.has_constraints else self.programs


# --- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<directive>\#[a-z]+)
  | (?P<if>:-)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[.,;])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, source: str | None) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, source)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(_Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, source: str | None):
        self.tokens = _tokenize(text, source)
        self.pos = 0
        self.source = source

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, tok: _Token, message: str) -> ParseError:
        return ParseError(message, tok.line, tok.col, self.source)

    def expect_punct(self, text: str) -> None:
        tok = self.next()
        if tok.text != text:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(tok, f"expected {text!r}, found {found}")

    def atom(self) -> str:
        tok = self.next()
        if tok.kind != "word" or not ATOM_RE.match(tok.text) or tok.text in KEYWORDS:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(tok, f"expected an atom, found {found}")
        return tok.text

    def literal(self) -> tuple[bool, str]:
        tok = self.peek()
        if tok.kind == "word" and tok.text == "not":
            self.next()
            return False, self.atom()
        return True, self.atom()

    def literals(self, sep: str) -> tuple[set[str], set[str]]:
        pos: set[str] = set()
        neg: set[str] = set()
        while True:
            positive, a = self.literal()
            (pos if positive else neg).add(a)
            if self.peek().text != sep:
                return pos, neg
            self.next()

    def program(self) -> Program:
        rules: list[Rule] = []
        alphabet: set[str] | None = None
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "directive":
                self.next()
                if tok.text != "#alphabet":
                    raise self.error(tok, f"unknown directive {tok.text!r}")
                alphabet = set() if alphabet is None else alphabet
                if self.peek().text != ".":
                    alphabet.add(self.atom())
                    while self.peek().text == ",":
                        self.next()
                        alphabet.add(self.atom())
                self.expect_punct(".")
                continue
            hpos: set[str] = set()
            hneg: set[str] = set()
            bpos: set[str] = set()
            bneg: set[str] = set()
            if tok.kind != "if":
                hpos, hneg = self.literals(";")
            if self.peek().kind == "if":
                self.next()
                # an empty body after ':-' is accepted so that '⊥ ←' has a rendering
                if self.peek().text != ".":
                    bpos, bneg = self.literals(",")
            self.expect_punct(".")
            rules.append(Rule(frozenset(hpos), frozenset(hneg), frozenset(bpos), frozenset(bneg)))
        if alphabet is not None:
            occurring = set()
            for r in rules:
                occurring |= r.atoms()
            alphabet |= occurring
        return Program.of(rules, alphabet)


def parse_program(text: str, source: str | None = None) -> Program:
    return _Parser(text, source).program()


def read_program(path) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read(), str(path))


# --- printing ----------------------------------------------------------------


def render_rule(r: Rule) -> str:
    head = sorted(r.head_pos) + [f"not {a}" for a in sorted(r.head_neg)]
    body = sorted(r.body_pos) + [f"not {a}" for a in sorted(r.body_neg)]
    head_text = " ; ".join(head)
    if not body:
        return f"{head_text}." if head else ":- ."
    body_text = ", ".join(body)
    return f"{head_text} :- {body_text}." if head else f":- {body_text}."


def render_program(p: Program, with_alphabet: bool = True) -> str:
    lines = []
    if with_alphabet and p.declared_alphabet is not None and p.declared_alphabet != p.occurring_atoms():
        lines.append("#alphabet " + ", ".join(sorted(p.declared_alphabet)) + ".")
    lines.extend(render_rule(r) for r in p.rules)
    return "\n".join(lines) + ("\n" if lines else "")
