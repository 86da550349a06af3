"""Relational facts, non-ground meta-programs and solver cross-checks.

A belief profile is written as ground ``phead/nhead/pbody/nbody`` facts and
combined with a fixed meta-program whose answer sets carry one SE pair each
in ``resultH/1`` (here-part) and ``resultT/1`` (there-part).  The module
sources live in ``data/`` in DLV syntax; the clingo dialect is derived from
them by rewriting disjunctions and weak constraints.
"""

from __future__ import annotations

import importlib.util
import json
import os
import re
import shlex
import subprocess
import sys
import tempfile
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Literal, Sequence

from ..change import revise_card_sets, revise_sets
from ..merge import arbitrate_sets, merge_basic_sets
from ..semantics import MAX_ATOMS, SEModelSet, format_pair, se_models
from ..syntax import Alphabet, BeliefProfile, Program

Task = Literal["card-revision", "set-revision", "basic-merge", "arbitration"]
Dialect = Literal["dlv", "clingo"]

TASKS: dict[str, tuple[str, ...]] = {
    "card-revision": ("domain", "models", "result", "card"),
    "set-revision": ("domain", "models", "order", "result", "witness", "incl", "violation", "eq"),
    "basic-merge": ("domain", "models", "order", "result", "witness", "violation", "eq", "basic"),
    "arbitration": ("domain", "models", "order", "result_profile", "witness", "violation", "eq", "arbitration"),
}
DIALECTS = ("dlv", "clingo")
SOLVER_ENV = "LPCHANGE_SOLVER"
RESULT_PREDICATES = ("resultH", "resultT")

_PREDICATES = ("phead", "nhead", "pbody", "nbody")


class SolverError(RuntimeError):
    """The external solver is missing, failed, timed out or printed garbage."""


class CorruptRunError(SolverError):
    """An answer set decodes to a pair whose here-part is not inside its there-part."""


class CrosscheckPreconditionError(ValueError):
    """The profile is outside the fragment the meta-programs handle."""


# --- relational representation ---------------------------------------------------


@dataclass(frozen=True)
class RelationalFacts:
    facts: tuple[str, ...]
    index_range: tuple[int, int]
    max_rule_id: int

    @property
    def maxint(self) -> int:
        return max(self.index_range[1], self.max_rule_id)

    def text(self) -> str:
        return "".join(f + "\n" for f in self.facts)


def _rule_ids(program: Program) -> list[int]:
    ids = [r.id for r in program.rules]
    if all(i > 0 for i in ids):
        return ids
    return list(range(1, len(ids) + 1))


def relational_facts(psi: BeliefProfile | Sequence[Program], start: int | None = None) -> RelationalFacts:
    """Ground facts for ``psi``; programs are numbered from 0 when it carries constraints, else from 1."""
    programs = list(psi.programs if isinstance(psi, BeliefProfile) else psi)
    if start is None:
        start = 0 if isinstance(psi, BeliefProfile) and psi.has_constraints else 1
    facts: set[str] = set()
    max_id = 0
    for i, program in enumerate(programs, start):
        for rid, r in zip(_rule_ids(program), program.rules):
            max_id = max(max_id, rid)
            for pred, atoms in zip(_PREDICATES, (r.head_pos, r.head_neg, r.body_pos, r.body_neg)):
                facts.update(f"{pred}({i},{rid},{a})." for a in atoms)
    return RelationalFacts(tuple(sorted(facts)), (start, start + len(programs) - 1), max_id)


# --- meta-programs ----------------------------------------------------------------


@dataclass(frozen=True)
class MetaProgram:
    task: str
    text: str
    modules: tuple[str, ...]
    dialect: str = "dlv"


def module_source(name: str) -> str:
    return resources.files(__package__).joinpath("data", f"{name}.lp").read_text()


_VAR_RE = re.compile(r"\b[A-Z][A-Za-z0-9_]*")


def _to_clingo(source: str, counter: list[int]) -> str:
    out = []
    for line in source.splitlines():
        if line.startswith(":~"):
            counter[0] += 1
            body = line[2:].strip().rstrip(".")
            terms = ",".join([str(counter[0])] + list(dict.fromkeys(_VAR_RE.findall(body))))
            line = f":~ {body}. [1@0,{terms}]"
        else:
            line = line.replace(" | ", " ; ")
        out.append(line)
    return "\n".join(out) + "\n"


def emit_meta(task: Task, dialect: Dialect = "dlv") -> MetaProgram:
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}; expected one of {', '.join(TASKS)}")
    if dialect not in DIALECTS:
        raise ValueError(f"unknown dialect {dialect!r}")
    modules = TASKS[task]
    counter = [0]
    parts = []
    for name in modules:
        src = module_source(name)
        if dialect == "clingo":
            src = _to_clingo(src, counter)
        parts.append(f"% module {name}\n{src}")
    return MetaProgram(task, "\n".join(parts), modules, dialect)


def bound_directive(facts: RelationalFacts, dialect: Dialect) -> str:
    return f"#maxint={facts.maxint}.\n" if dialect == "dlv" else ""


# --- decoding ---------------------------------------------------------------------


_ATOM_RE = re.compile(r"(resultH|resultT)\(([a-z][A-Za-z0-9_]*)\)")


def extract_rho(answer_set: Iterable[str]) -> tuple[frozenset[str], frozenset[str]]:
    """The (here, there) pair carried by ``answer_set``."""
    here: set[str] = set()
    there: set[str] = set()
    for atom in answer_set:
        m = _ATOM_RE.fullmatch(atom.strip())
        if m:
            (here if m.group(1) == "resultH" else there).add(m.group(2))
    if not here <= there:
        raise CorruptRunError(f"answer set has here-part {sorted(here)} outside there-part {sorted(there)}")
    return frozenset(here), frozenset(there)


def _parse_clingo_json(out: str) -> list[list[str]]:
    try:
        data = json.loads(out)
    except json.JSONDecodeError as exc:
        raise SolverError(f"cannot parse solver output as JSON: {exc}") from None
    witnesses = [w for call in data.get("Call", []) for w in call.get("Witnesses", [])]
    if any("Costs" in w for w in witnesses):
        best = min(tuple(w["Costs"]) for w in witnesses)
        witnesses = [w for w in witnesses if tuple(w["Costs"]) == best]
    return [list(w.get("Value", [])) for w in witnesses]


def _parse_text(out: str) -> list[list[str]]:
    """Answer sets from ``{a, b}`` lines (DLV) or ``Answer:`` blocks (clingo text)."""
    sets: list[list[str]] = []
    lines = out.splitlines()
    for k, line in enumerate(lines):
        s = line.strip()
        if s.startswith("Best model:"):
            s = s[len("Best model:"):].strip()
        if s.startswith("{") and s.endswith("}"):
            inner = s[1:-1].strip()
            sets.append(re.findall(r"[A-Za-z_][A-Za-z0-9_]*(?:\([^()]*\))?", inner) if inner else [])
        elif s.startswith("Answer:") and k + 1 < len(lines):
            sets.append(lines[k + 1].split())
    return sets


def parse_answer_sets(out: str) -> list[list[str]]:
    if out.lstrip().startswith("{") and '"Call"' in out:
        return _parse_clingo_json(out)
    return _parse_text(out)


# --- solver invocation ------------------------------------------------------------


def default_solver() -> str | None:
    """Command template from the environment, else the clingo Python module if installed."""
    env = os.environ.get(SOLVER_ENV)
    if env:
        return env
    if importlib.util.find_spec("clingo") is not None:
        return f"{shlex.quote(sys.executable)} -m clingo --outf=2 --models=0 --opt-mode=optN {{files}}"
    return None


def solver_available(template: str | None = None) -> bool:
    template = template or default_solver()
    if template is None:
        return False
    argv = shlex.split(template)
    if not argv:
        return False
    if argv[0] == sys.executable and argv[1:3] == ["-m", "clingo"]:
        return importlib.util.find_spec("clingo") is not None
    return os.path.exists(argv[0]) or _which(argv[0])


def _which(cmd: str) -> bool:
    import shutil

    return shutil.which(cmd) is not None


def guess_dialect(template: str) -> Dialect:
    return "dlv" if "dlv" in Path(shlex.split(template)[0]).name.lower() else "clingo"


def run_solver(texts: Sequence[str], template: str | None = None, timeout: float | None = 60.0) -> str:
    """Write ``texts`` to temporary files and run the solver template on them."""
    template = template or default_solver()
    if template is None:
        raise SolverError(f"no solver configured; set {SOLVER_ENV} or install clingo")
    with tempfile.TemporaryDirectory(prefix="lpchange-") as tmp:
        paths = []
        for k, text in enumerate(texts):
            path = Path(tmp) / f"part{k}.lp"
            path.write_text(text)
            paths.append(str(path))
        files = " ".join(shlex.quote(p) for p in paths)
        if "{files}" in template:
            argv = shlex.split(template.replace("{files}", files))
        else:
            argv = shlex.split(template) + paths
        try:
            proc = subprocess.run(argv, capture_output=True, text=True, timeout=timeout)
        except FileNotFoundError:
            raise SolverError(f"solver executable not found: {argv[0]}") from None
        except subprocess.TimeoutExpired:
            raise SolverError(f"solver timed out after {timeout} s") from None
    # clingo reports satisfiability through exit codes 10/20/30; 33 and 65 are errors
    if proc.returncode in (1, 33, 65, 128) or (proc.returncode and not proc.stdout.strip()):
        raise SolverError(f"solver exited with {proc.returncode}: {proc.stderr.strip()[:500]}")
    return proc.stdout


# --- cross-checking ---------------------------------------------------------------


@dataclass(frozen=True)
class CrosscheckReport:
    task: str
    equal: bool
    solver_se: SEModelSet
    native_se: SEModelSet
    answer_sets: int
    # pairs the native engine has but the solver missed, and the reverse
    missing: tuple[tuple[int, int], ...] = field(default=())
    extra: tuple[tuple[int, int], ...] = field(default=())

    def describe(self) -> str:
        a = self.native_se.alphabet
        lines = [f"{self.task}: {'equal' if self.equal else 'UNEQUAL'} ({self.answer_sets} answer sets)"]
        for label, pairs in (("native only", self.missing), ("solver only", self.extra)):
            if pairs:
                lines.append(f"  {label}: " + " ".join(format_pair(a.members(x), a.members(y)) for x, y in pairs))
        return "\n".join(lines)


def _check_preconditions(programs: Sequence[Program], task: str, sets: Sequence[SEModelSet]) -> None:
    basic = task == "basic-merge"
    if task in ("card-revision", "set-revision") and len(programs) != 2:
        raise CrosscheckPreconditionError("revision takes exactly two programs")
    if basic and len(programs) < 2:
        raise CrosscheckPreconditionError("basic merging takes a constraints program and at least one member")
    for i, (p, s) in enumerate(zip(programs, sets)):
        if any(not r.atoms() for r in p.rules):
            raise CrosscheckPreconditionError(f"program {i} has a rule without atoms")
        if basic and i == 0:
            continue
        if not p.rules:
            raise CrosscheckPreconditionError(f"program {i} is empty and would vanish from the facts")
        if not s and (task in ("arbitration", "basic-merge") or i == 0):
            raise CrosscheckPreconditionError(f"program {i} is unsatisfiable")


def native_result(task: str, sets: Sequence[SEModelSet]) -> SEModelSet:
    if task == "card-revision":
        return revise_card_sets(sets[0], sets[1])
    if task == "set-revision":
        return revise_sets(sets[0], sets[1])
    if task == "basic-merge":
        return merge_basic_sets(sets)[0]
    if task == "arbitration":
        return arbitrate_sets(sets)[0]
    raise ValueError(f"unknown task {task!r}")


def decode_answer_sets(answer_sets: Iterable[Iterable[str]], alphabet: Alphabet) -> SEModelSet:
    pairs = set()
    for s in answer_sets:
        here, there = extract_rho(s)
        pairs.add((alphabet.mask(here), alphabet.mask(there)))
    return SEModelSet(alphabet, frozenset(pairs))


def crosscheck(
    psi: BeliefProfile | Sequence[Program],
    task: Task,
    solver: str | None = None,
    dialect: Dialect | None = None,
    timeout: float | None = 60.0,
    facts: RelationalFacts | None = None,
    max_atoms: int | None = MAX_ATOMS,
) -> CrosscheckReport:
    """Compare the solver's answer sets for ``task`` on ``psi`` with the native operator.

    Both sides are taken over the atoms occurring in ``psi``, which is the
    domain the meta-programs see.  ``facts`` replaces the generated facts,
    which is only useful for negative controls.
    """
    programs = list(psi.programs if isinstance(psi, BeliefProfile) else psi)
    alphabet = Alphabet(tuple(set().union(*(p.occurring_atoms() for p in programs))))
    sets = [se_models(p, alphabet, max_atoms) for p in programs]
    _check_preconditions(programs, task, sets)
    native = native_result(task, sets)

    template = solver or default_solver()
    if template is None:
        raise SolverError(f"no solver configured; set {SOLVER_ENV} or install clingo")
    dialect = dialect or guess_dialect(template)
    if facts is None:
        facts = relational_facts(programs, start=0 if task == "basic-merge" else 1)
    meta = emit_meta(task, dialect)
    extra_text = bound_directive(facts, dialect)
    if dialect == "clingo":
        extra_text += "".join(f"#show {p}/1.\n" for p in RESULT_PREDICATES)
    out = run_solver([meta.text, facts.text(), extra_text], template, timeout)
    answer_sets = parse_answer_sets(out)
    solver_se = decode_answer_sets(answer_sets, alphabet)
    return CrosscheckReport(
        task,
        solver_se == native,
        solver_se,
        native,
        len(answer_sets),
        tuple(sorted(native.pairs - solver_se.pairs, key=lambda p: (p[1], p[0]))),
        tuple(sorted(solver_se.pairs - native.pairs, key=lambda p: (p[1], p[0]))),
    )
