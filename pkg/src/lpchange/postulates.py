"""Executable checkers for the revision, arbitration and merging postulates.

Every checker evaluates the postulates as relations between SE-model sets
and returns a :class:`PostulateReport` with one verdict per postulate
(``pass``, ``fail`` or ``n/a`` when the premise does not hold).  Failing
verdicts carry a witness with the operand programs and the offending sets.

Syntax-independence postulates substitute the canonical program of each
operand's SE models, which is strongly equivalent but usually syntactically
different.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .canonical import canonical_glp
from .change import SET_OPERATORS, apply, expand_sets, revise_card_sets, revise_sets, revise_weak_sets
from .merge import arbitrate, arbitrate_sets, merge_basic, merge_basic_sets
from .semantics import SEModelSet, is_complete, is_well_defined, render_se, se_models
from .syntax import Alphabet, Program, Rule, effective_alphabet, render_program

GENERATOR_ATOMS = ("p", "q", "r", "s", "t", "u")
PASS, FAIL, NA = "pass", "fail", "n/a"

REVISION_OPERATORS = ("revise", "revise_weak", "revise_card")
SUITES = ("ra", "principles", "expansion", "ls", "ic", "containment", "identities")


@dataclass(frozen=True)
class GeneratorConfig:
    atom_count: int = 4
    max_rules: int = 4
    # each rule part draws between 0 and max_part atoms
    max_part: int = 2
    seed: int = 0
    allow_head_negation: bool = True

    def __post_init__(self):
        if not 1 <= self.atom_count <= len(GENERATOR_ATOMS):
            raise ValueError(f"atom_count must be between 1 and {len(GENERATOR_ATOMS)}")
        if self.max_rules < 0 or self.max_part < 0:
            raise ValueError("rule bounds must be non-negative")


def random_program(cfg: GeneratorConfig, rng: random.Random | None = None) -> Program:
    """A random program; deterministic for ``cfg.seed`` when no rng is passed."""
    rng = rng if rng is not None else random.Random(cfg.seed)
    atoms = GENERATOR_ATOMS[: cfg.atom_count]

    def part() -> frozenset[str]:
        return frozenset(rng.sample(atoms, rng.randint(0, min(cfg.max_part, len(atoms)))))

    rules = []
    for _ in range(rng.randint(0, cfg.max_rules)):
        head_pos = part()
        head_neg = part() if cfg.allow_head_negation else frozenset()
        rules.append(Rule(head_pos, head_neg, part(), part()))
    return Program.of(rules)


@dataclass
class PostulateReport:
    suite: str
    verdicts: dict[str, str] = field(default_factory=dict)
    witnesses: dict[str, dict] = field(default_factory=dict)
    alphabet: tuple[str, ...] = ()
    programs: dict[str, str] = field(default_factory=dict)
    seed: int | None = None
    trial: int | None = None

    def failures(self) -> list[str]:
        return [name for name, v in self.verdicts.items() if v == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trial": self.trial,
            "alphabet": list(self.alphabet),
            "verdicts": dict(self.verdicts),
            "programs": dict(self.programs),
            "witnesses": dict(self.witnesses),
        }


class _Recorder:
    def __init__(self, suite: str, alphabet: Alphabet, programs: dict[str, Program]):
        self.report = PostulateReport(
            suite,
            alphabet=alphabet.atoms,
            programs={k: render_program(v) for k, v in programs.items()},
        )

    def check(self, name: str, premise: bool, holds: Callable[[], bool], **sets: SEModelSet) -> None:
        if not premise:
            self.report.verdicts[name] = NA
            return
        if holds():
            self.report.verdicts[name] = PASS
        else:
            self.report.verdicts[name] = FAIL
            self.report.witnesses[name] = {k: render_se(v).splitlines() for k, v in sets.items()}


def _variant(p: Program, a: Alphabet) -> Program:
    """A strongly equivalent rewriting of p."""
    return canonical_glp(se_models(p, a, None)).program


def _se(a: Alphabet, *programs: Program) -> list[SEModelSet]:
    return [se_models(p, a, None) for p in programs]


# --- revision ----------------------------------------------------------------------


def check_ra(op: str, p: Program, q: Program, r: Program, alphabet=None) -> PostulateReport:
    if op not in REVISION_OPERATORS:
        raise ValueError(f"unknown revision operator {op!r}")
    a = effective_alphabet([p, q, r], alphabet)
    sp, sq, sr = _se(a, p, q, r)
    rev = SET_OPERATORS[op]
    pq = rev(sp, sq)
    rec = _Recorder("ra", a, {"P": p, "Q": q, "R": r})
    rec.check("RA1", True, lambda: pq <= sq, revision=pq, Q=sq)
    meet = sp & sq
    rec.check("RA2", bool(meet), lambda: pq == meet, revision=pq, expansion=meet)
    rec.check("RA3", bool(sq), lambda: bool(pq), revision=pq)
    swapped = apply(op, _variant(p, a), _variant(q, a), a, None).se
    rec.check("RA4", True, lambda: swapped == pq, revision=pq, variant_revision=swapped)
    lhs = pq & sr
    rhs = rev(sp, sq & sr)
    rec.check("RA5", True, lambda: lhs <= rhs, lhs=lhs, rhs=rhs)
    rec.check("RA6", bool(lhs), lambda: rhs <= lhs, lhs=rhs, rhs=lhs)
    return rec.report


def check_ra_sets(op: str, sp: SEModelSet, sq: SEModelSet, sr: SEModelSet) -> PostulateReport:
    """RA1-RA3, RA5, RA6 on SE-model sets given directly (RA4 needs programs)."""
    p, q, r = (canonical_glp(s).program for s in (sp, sq, sr))
    return check_ra(op, p, q, r, sp.alphabet)


def check_principles(op: str, p: Program, q: Program, r: Program, alphabet=None) -> PostulateReport:
    """Update principles read with strong equivalence.

    Tautology is only applicable to a satisfiable P: revising an
    unsatisfiable program yields the revising program itself.  Augmentation
    is applicable when R strongly entails Q (R has at most Q's SE models).
    """
    if op not in REVISION_OPERATORS:
        raise ValueError(f"unknown revision operator {op!r}")
    a = effective_alphabet([p, q, r], alphabet)
    sp, sq, sr = _se(a, p, q, r)
    rev = SET_OPERATORS[op]
    full = SEModelSet.everything(a)
    rec = _Recorder("principles", a, {"P": p, "Q": q, "R": r})

    init = rev(full, sp)
    rec.check("initialisation", True, lambda: init == sp, result=init, P=sp)
    idem = rev(sp, sp)
    rec.check("idempotency", True, lambda: idem == sp, result=idem, P=sp)
    taut = apply(op, p, Program(), a, None).se
    rec.check("tautology", bool(sp), lambda: taut == sp, result=taut, P=sp)

    sq_variant = se_models(_variant(q, a), a, None)
    pq = rev(sp, sq)
    absorbed = rev(pq, sq_variant)
    rec.check("absorption", True, lambda: absorbed == pq, result=absorbed, expected=pq)

    aug_lhs = rev(pq, sr)
    aug_rhs = rev(sp, sr)
    rec.check("augmentation", sr <= sq, lambda: aug_lhs == aug_rhs, lhs=aug_lhs, rhs=aug_rhs)

    wis = apply(op, p, _variant(q, a), a, None).se
    rec.check("wis", True, lambda: wis == pq, result=wis, expected=pq)
    return rec.report


def check_principles_sets(op: str, sp: SEModelSet, sq: SEModelSet, sr: SEModelSet) -> PostulateReport:
    p, q, r = (canonical_glp(s).program for s in (sp, sq, sr))
    return check_principles(op, p, q, r, sp.alphabet)


def check_expansion(p: Program, q: Program, r: Program, alphabet=None) -> PostulateReport:
    a = effective_alphabet([p, q, r], alphabet)
    sp, sq, sr = _se(a, p, q, r)
    rec = _Recorder("expansion", a, {"P": p, "Q": q, "R": r})
    pq = expand_sets(sp, sq)
    rec.check("commutative", True, lambda: pq == expand_sets(sq, sp), PQ=pq)
    rec.check(
        "associative",
        True,
        lambda: expand_sets(pq, sr) == expand_sets(sp, expand_sets(sq, sr)),
        left=expand_sets(pq, sr),
        right=expand_sets(sp, expand_sets(sq, sr)),
    )
    rec.check("entails_first", True, lambda: pq <= sp, PQ=pq, P=sp)
    rec.check("absorbs_consequence", sp <= sq, lambda: pq == sp, PQ=pq, P=sp)
    rec.check(
        "monotone",
        sp <= sq,
        lambda: expand_sets(sp, sr) <= expand_sets(sq, sr),
        PR=expand_sets(sp, sr),
        QR=expand_sets(sq, sr),
    )
    rec.check("well_defined", True, lambda: is_well_defined(pq), PQ=pq)
    rec.check("complete", is_complete(sp) and is_complete(sq), lambda: is_complete(pq), PQ=pq)
    tautology = expand(p, Program(), a)
    rec.check("tautology", True, lambda: tautology == sp, result=tautology, P=sp)
    return rec.report


def expand(p: Program, q: Program, a: Alphabet) -> SEModelSet:
    return apply("expand", p, q, a, None).se


def check_containment(p: Program, q: Program, alphabet=None) -> PostulateReport:
    """Strict revision entails weak revision; cardinality revision entails strict revision."""
    a = effective_alphabet([p, q], alphabet)
    sp, sq = _se(a, p, q)
    rec = _Recorder("containment", a, {"P": p, "Q": q})
    strict, weak, card = revise_sets(sp, sq), revise_weak_sets(sp, sq), revise_card_sets(sp, sq)
    rec.check("strict_entails_weak", True, lambda: strict <= weak, strict=strict, weak=weak)
    rec.check("card_entails_strict", True, lambda: card <= strict, card=card, strict=strict)
    return rec.report


# --- merging -------------------------------------------------------------------------


def check_ls(p1: Program, p2: Program, alphabet=None) -> PostulateReport:
    """Arbitration postulates on a pair.

    Satisfiability is checked in the form "the arbitration is unsatisfiable
    iff both programs are"; with exactly one unsatisfiable program the result
    must coincide with the other program.
    """
    a = effective_alphabet([p1, p2], alphabet)
    s1, s2 = _se(a, p1, p2)
    rec = _Recorder("ls", a, {"P1": p1, "P2": p2})
    arb = arbitrate_sets([s1, s2])[0]
    rev_arb = arbitrate_sets([s2, s1])[0]
    meet = s1 & s2
    rec.check("LS1", True, lambda: arb == rev_arb, P1P2=arb, P2P1=rev_arb)
    rec.check("LS2", True, lambda: meet <= arb, meet=meet, arbitration=arb)
    rec.check("LS3", bool(meet), lambda: arb <= meet, arbitration=arb, meet=meet)

    def ls4() -> bool:
        if bool(arb) != (bool(s1) or bool(s2)):
            return False
        if bool(s1) != bool(s2):
            return arb == (s1 or s2)
        return True

    rec.check("LS4", True, ls4, arbitration=arb, P1=s1, P2=s2)
    variant = arbitrate([_variant(p1, a), _variant(p2, a)], a, None).se
    rec.check("LS5", True, lambda: variant == arb, arbitration=arb, variant_arbitration=variant)
    rec.check("LS7", True, lambda: arb <= (s1 | s2), arbitration=arb, join=s1 | s2)
    rec.check("LS8", bool(s1) and bool(s2), lambda: bool(s1 & arb), arbitration=arb, P1=s1)
    return rec.report


def check_ic(
    p0: Program,
    psi: Sequence[Program],
    alphabet=None,
    psi2: Sequence[Program] | None = None,
    extra: Program | None = None,
    rng: random.Random | None = None,
) -> PostulateReport:
    """Basic-merging postulates for ``<p0, psi>``.

    ``psi2`` enables the concatenation postulate and ``extra`` the one that
    strengthens the constraints program.  The fairness postulate applies to
    two-member profiles whose members are satisfiable and entail ``p0``.
    """
    psi = list(psi)
    others = list(psi2 or []) + ([extra] if extra is not None else [])
    a = effective_alphabet([p0, *psi, *others], alphabet)
    s0 = se_models(p0, a, None)
    ss = _se(a, *psi)
    named = {"P0": p0, **{f"P{i}": p for i, p in enumerate(psi, 1)}}
    if psi2:
        named.update({f"Q{i}": p for i, p in enumerate(psi2, 1)})
    if extra is not None:
        named["E"] = extra
    rec = _Recorder("ic", a, named)
    delta = merge_basic_sets([s0, *ss])[0]

    rec.check("IC0", True, lambda: delta <= s0, merge=delta, P0=s0)
    satisfiable = bool(s0) and all(ss)
    rec.check("IC1", satisfiable, lambda: bool(delta), merge=delta)
    meet = s0
    for s in ss:
        meet = meet & s
    rec.check("IC2", bool(meet), lambda: delta == meet, merge=delta, meet=meet)
    variant = merge_basic([_variant(p, a) for p in [p0, *psi]], a, None).se
    rec.check("IC3", True, lambda: variant == delta, merge=delta, variant_merge=variant)
    fair = len(ss) == 2 and all(ss) and ss[0] <= s0 and ss[1] <= s0
    rec.check(
        "IC4",
        fair and bool(delta & ss[0]),
        lambda: bool(delta & ss[1]),
        merge=delta,
        P1=ss[0] if ss else s0,
        P2=ss[1] if len(ss) > 1 else s0,
    )
    if psi2:
        s_other = _se(a, *psi2)
        d2 = merge_basic_sets([s0, *s_other])[0]
        d12 = merge_basic_sets([s0, *ss, *s_other])[0]
        rec.check("IC5", True, lambda: (delta & d2) <= d12, lhs=delta & d2, rhs=d12)
    if extra is not None:
        se_extra = se_models(extra, a, None)
        lhs = delta & se_extra
        rhs = merge_basic_sets([s0 & se_extra, *ss])[0]
        rec.check("IC7", True, lambda: lhs <= rhs, lhs=lhs, rhs=rhs)
    order = list(range(len(ss)))
    (rng or random.Random(0)).shuffle(order)
    if len(order) > 1 and order == sorted(order):
        order.reverse()
    permuted = merge_basic_sets([s0, *(ss[i] for i in order)])[0]
    rec.check("IC9", True, lambda: permuted == delta, merge=delta, permuted_merge=permuted)
    return rec.report


def check_identities(p1: Program, p2: Program, alphabet=None) -> PostulateReport:
    """Merging versus revision on pairs, and arbitration entailing basic merging."""
    a = effective_alphabet([p1, p2], alphabet)
    s1, s2 = _se(a, p1, p2)
    rec = _Recorder("identities", a, {"P1": p1, "P2": p2})
    arb = arbitrate_sets([s1, s2])[0]
    both = revise_sets(s1, s2) | revise_sets(s2, s1)
    rec.check("arbitration_as_revisions", True, lambda: arb == both, arbitration=arb, revisions=both)
    basic = merge_basic_sets([s1, s2])[0]
    rev21 = revise_sets(s2, s1)
    rec.check("merge_as_revision", True, lambda: basic == rev21, merge=basic, revision=rev21)
    full = SEModelSet.everything(a)
    unconstrained = merge_basic_sets([full, s1, s2])[0]
    rec.check("arbitration_entails_merge", True, lambda: arb <= unconstrained, arbitration=arb, merge=unconstrained)
    return rec.report


# --- suites --------------------------------------------------------------------------


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{trial}")


def run_trial(suite: str, trial: int, seed: int = 0, atoms: int = 4, op: str = "revise", members: int = 0) -> PostulateReport:
    """One seeded trial of a suite; identical arguments give an identical report."""
    rng = trial_rng(seed, suite, trial)
    cfg = GeneratorConfig(atom_count=atoms, seed=seed)

    def gen() -> Program:
        return random_program(cfg, rng)

    alphabet = GENERATOR_ATOMS[:atoms]
    if suite == "ra":
        report = check_ra(op, gen(), gen(), gen(), alphabet)
    elif suite == "principles":
        report = check_principles(op, gen(), gen(), gen(), alphabet)
    elif suite == "expansion":
        report = check_expansion(gen(), gen(), gen(), alphabet)
    elif suite == "containment":
        report = check_containment(gen(), gen(), alphabet)
    elif suite == "ls":
        report = check_ls(gen(), gen(), alphabet)
    elif suite == "identities":
        report = check_identities(gen(), gen(), alphabet)
    elif suite == "ic":
        # an empty constraints program now and then makes the fairness premise reachable
        p0 = Program() if rng.random() < 0.3 else gen()
        n = members if members else rng.randint(2, 3)
        psi = [gen() for _ in range(n)]
        psi2 = [gen()]
        report = check_ic(p0, psi, alphabet, psi2=psi2, extra=gen(), rng=rng)
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    report.seed = seed
    report.trial = trial
    return report


def run_suite(
    suite: str, trials: int, seed: int = 0, atoms: int = 4, op: str = "revise", members: int = 0
) -> list[PostulateReport]:
    return [run_trial(suite, t, seed, atoms, op, members) for t in range(trials)]


def summarize(reports: Sequence[PostulateReport]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for rep in reports:
        for name, verdict in rep.verdicts.items():
            counts = out.setdefault(name, {PASS: 0, FAIL: 0, NA: 0})
            counts[verdict] += 1
    return out
