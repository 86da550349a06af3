import pytest
from hypothesis import given, settings

import oracles
from conftest import named, pairs, programs, prog, se_set
from lpchange import (
    Program,
    canonical_glp,
    expand,
    is_well_defined,
    revise,
    revise_card,
    revise_weak,
    se_models,
    strongly_equivalent,
)
from lpchange.change import revise_sets

# --- expansion -------------------------------------------------------------------


def test_expanding_fact_by_its_denial_has_no_se_models():
    assert len(expand(prog("p."), prog(":- p.")).se) == 0


def test_expansion_leaves_only_the_empty_pair():
    assert named(expand(prog("p :- q."), prog(":- p.")).se) == pairs("(∅,∅)")


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ("p.", "q :- p.", "p. q."),
        ("p :- not q.", "q :- not p.", "p :- not q. q :- not p."),
        ("p :- not q. q :- not p.", "p :- q.", "p :- q. p :- not q."),
        ("p :- not q. q :- not p.", "p ; q.", "p ; q."),
        ("p ; q.", ":- q.", "p. :- q."),
        ("p ; q.", ":- p, q.", "p ; q. :- p, q."),
    ],
)
def test_expansion_examples(p, q, expected):
    result = expand(prog(p), prog(q))
    assert result.se == se_models(prog(expected), result.alphabet)
    assert se_models(result.program.program, result.alphabet) == result.se


def test_expansion_by_fact_or_chained_fact_agree():
    assert expand(prog("p."), prog("q :- p.")).se == expand(prog("p."), prog("q.")).se


# --- revision ----------------------------------------------------------------------


def test_revision_over_wider_language():
    result = revise(prog("p :- not p."), prog(":- p."), ["p", "q"])
    assert named(result.se) == pairs("(∅,∅) (∅,q) (q,q)")
    assert strongly_equivalent(result.program.program, prog(":- p."), ["p", "q"])


def test_revising_facts_by_denial_of_one():
    result = revise(prog("p. q."), prog(":- q."))
    assert named(result.se) == pairs("(p,p)")
    assert strongly_equivalent(result.program.program, prog("p. :- q."), "pq")


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ("p. q.", ":- p, q.", "p ; q. :- p, q."),
        (":- not p. :- not q.", ":- p, q.", ":- not p, not q. :- p, q."),
        (":- p. :- q.", "p ; q.", "p ; q. :- p, q."),
    ],
)
def test_revision_examples(p, q, expected):
    result = revise(prog(p), prog(q))
    assert result.se == se_models(prog(expected), result.alphabet)


def test_cardinality_revision_differs_from_inclusion():
    p, q = prog("p. q. r."), prog("p ; q. r :- q. :- p, r.")
    assert named(se_models(p, "pqr")) == pairs("(pqr,pqr)")
    assert named(se_models(q, "pqr")) == pairs("(p,p) (qr,qr)")
    assert named(revise(p, q).se) == pairs("(p,p) (qr,qr)")
    assert named(revise_card(p, q).se) == pairs("(qr,qr)")


REVISION_EXAMPLES = [
    ("p :- not p.", ":- p.", ["p", "q"]),
    ("p. q.", ":- q.", None),
    ("p. q.", ":- p, q.", None),
    (":- not p. :- not q.", ":- p, q.", None),
    (":- p. :- q.", "p ; q.", None),
]


@pytest.mark.parametrize("p, q, alphabet", REVISION_EXAMPLES)
def test_cardinality_revision_agrees_on_the_five_examples(p, q, alphabet):
    assert revise_card(prog(p), prog(q), alphabet).se == revise(prog(p), prog(q), alphabet).se


WEAK_P, WEAK_Q = ":- p. :- q. :- r.", "r. p :- q. p :- not q."


def test_weak_revision_operands():
    assert named(se_models(prog(WEAK_P), "pqr")) == pairs("(∅,∅)")
    assert named(se_models(prog(WEAK_Q), "pqr")) == pairs("(r,pqr) (pr,pr) (pr,pqr) (pqr,pqr)")


def test_strict_revision_of_weak_example():
    result = revise(prog(WEAK_P), prog(WEAK_Q))
    assert named(result.se) == pairs("(pr,pr)")
    assert strongly_equivalent(result.program.program, prog("p. :- q. r."), "pqr")


def test_weak_revision_of_weak_example_follows_the_pair_order():
    # (pr,pr) differs from (∅,∅) on a strictly smaller there-part than every
    # other SE model of Q, so it is the only closest pair.
    result = revise_weak(prog(WEAK_P), prog(WEAK_Q))
    sq, sp = named(se_models(prog(WEAK_Q), "pqr")), named(se_models(prog(WEAK_P), "pqr"))
    assert named(result.se) == oracles.revise_weak(sp, sq) == pairs("(pr,pr)")


def test_unsatisfiable_first_operand_yields_second():
    q = prog("p ; q.")
    for op in (revise, revise_weak, revise_card):
        assert op(prog("p. :- p."), q).se == se_models(q, "pq")


def test_both_unsatisfiable_is_unsatisfiable():
    for op in (revise, revise_weak, revise_card):
        assert len(op(prog("p. :- p."), prog("q. :- q.")).se) == 0


RA6_P = "p ; not p. q :- p. r :- p. s :- p. :- not p, q. :- not p, r. :- not p, s."
RA6_Q = "p ; r. :- q. :- p, r. :- p, s. s ; not s :- r."
RA6_R = "p ; r. :- q. :- p, r. :- p, s. s :- r."


def test_ra6_counterexample_sets():
    p, q, r = prog(RA6_P), prog(RA6_Q), prog(RA6_R)
    a = "pqrs"
    left = revise(p, expand(q, r, a).program.program, a).se
    right = expand(revise(p, q, a).program.program, r, a).se
    assert named(left) == pairs("(rs,rs) (p,p)")
    assert named(right) == pairs("(p,p)")


AUG_P, AUG_Q, AUG_R = "(a,a) (ab,ab)", "(ab,ab) (ac,ac) (b,b)", "(ac,ac) (b,b)"


def aug_sets():
    return [se_set("abc", s) for s in (AUG_P, AUG_Q, AUG_R)]


def test_augmentation_example_first_step():
    sp, sq, _ = aug_sets()
    assert named(revise_sets(sp, sq)) == pairs("(ab,ab)")


def test_augmentation_example_under_inclusion_distance():
    # bc and a are incomparable distances from ab, so both models of R survive
    sp, sq, sr = aug_sets()
    twice = revise_sets(revise_sets(sp, sq), sr)
    once = revise_sets(sp, sr)
    assert named(twice) == named(once) == pairs("(ac,ac) (b,b)")


def test_augmentation_example_under_cardinality_distance():
    sp, sq, sr = aug_sets()
    p, q, r = (canonical_glp(s).program for s in (sp, sq, sr))
    twice = revise_card(revise_card(p, q, "abc").program.program, r, "abc").se
    assert named(twice) == pairs("(b,b)")
    assert named(revise_card(p, r, "abc").se) == pairs("(ac,ac) (b,b)")


# a seeded instance on which inclusion-based revision violates augmentation
AUG_FOUND = (
    "p ; not p :- not q, not r.\n:- p.\n:- not p, not r.\n",
    "p ; not p ; not r :- not q.\nq ; r :- p, r, not p.\nq ; not q :- not p.\n",
    "q ; not p :- not p, not r.\np ; r ; not q :- p, r, not p, not r.\np.\nq ; r :- not p, not q.\n",
)


def test_found_augmentation_violation():
    p, q, r = (prog(t) for t in AUG_FOUND)
    a = "pqr"
    assert se_models(r, a) <= se_models(q, a)
    twice = revise(revise(p, q, a).program.program, r, a).se
    once = revise(p, r, a).se
    assert named(twice) == pairs("(p,pr) (pr,pr) (pq,pqr) (pqr,pqr)")
    assert named(once) == pairs("(p,pr) (pr,pr) (p,pqr) (pq,pqr) (pr,pqr) (pqr,pqr)")


# --- properties --------------------------------------------------------------------

ATOMS = ("p", "q", "r")


@settings(max_examples=300)
@given(programs(), programs())
def test_operators_match_oracle(p, q):
    sp, sq = named(se_models(p, ATOMS)), named(se_models(q, ATOMS))
    assert named(expand(p, q, ATOMS).se) == oracles.expand(sp, sq)
    assert named(revise(p, q, ATOMS).se) == oracles.revise(sp, sq)
    assert named(revise_card(p, q, ATOMS).se) == oracles.revise_card(sp, sq)
    assert named(revise_weak(p, q, ATOMS).se) == oracles.revise_weak(sp, sq)


@settings(max_examples=200)
@given(programs(), programs())
def test_results_are_well_defined_and_represented(p, q):
    for op in (expand, revise, revise_weak, revise_card):
        result = op(p, q, ATOMS)
        assert is_well_defined(result.se)
        assert se_models(result.program.program, result.alphabet) == result.se


@settings(max_examples=200)
@given(programs(), programs())
def test_revision_containments(p, q):
    strict = revise(p, q, ATOMS).se
    assert strict <= revise_weak(p, q, ATOMS).se
    assert revise_card(p, q, ATOMS).se <= strict


def test_expanding_by_empty_program_is_identity():
    p = prog("p ; not q :- r.")
    assert expand(p, Program()).se == se_models(p)
