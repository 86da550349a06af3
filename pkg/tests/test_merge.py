import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import named, pairs, programs, prog
from lpchange import (
    Alphabet,
    BeliefProfile,
    Program,
    SEModelSet,
    arbitrate,
    expand,
    join,
    meet,
    merge_basic,
    revise,
    se_models,
    strongly_equivalent,
)
from lpchange.semantics import CapacityError

P1, P2 = "p. u.", ":- p. v."


def test_worked_arbitration():
    result = arbitrate([prog(P1), prog(P2)])
    assert named(result.se) == pairs("(puv,puv) (uv,uv)")
    assert strongly_equivalent(result.program.program, prog("p ; not p. u. v."), "puv")


def test_worked_basic_merge():
    result = merge_basic([Program(), prog(P1), prog(P2)])
    assert named(result.se) == pairs("(uv,uv) (uv,puv) (puv,puv)")
    assert strongly_equivalent(result.program.program, prog("u. v."), "puv")


def test_arbitration_as_union_of_revisions():
    a = Alphabet.of("puv")
    p1, p2 = prog(P1), prog(P2)
    union = join(revise(p1, p2, a).program.program, revise(p2, p1, a).program.program, a).se
    assert arbitrate([p1, p2], a).se == union


def test_contrast_arbitration():
    result = arbitrate([prog("p. q."), prog("not p. not q.")])
    assert named(result.se) == pairs("(pq,pq) (∅,∅)")


def test_contrast_basic_merge_is_tautology():
    result = merge_basic([Program(), prog("p. q."), prog("not p. not q.")])
    assert result.se == SEModelSet.everything(Alphabet.of("pq"))
    assert len(result.program.program) == 0


# rows: P1, P2, arbitration SE set, arbitration program
TABLE_ARBITRATION = [
    ("p.", "q.", "(pq,pq)", "p. q."),
    ("p.", ":- p.", "(p,p) (∅,∅)", "p ; not p."),
    ("p :- not p.", ":- p.", "(∅,p) (p,p) (∅,∅)", ""),
    ("p. q.", ":- p, q.", "(pq,pq) (p,p) (q,q)", "p ; q. p ; not p. q ; not q."),
    (":- not p. :- not q.", ":- p, q.", "(∅,p) (p,p) (∅,q) (q,q) (∅,pq) (p,pq) (q,pq) (pq,pq)", ":- not p, not q."),
    (":- p. :- q.", "p ; q.", "(∅,∅) (p,p) (q,q)", ":- p, q. p ; not p. q ; not q."),
]


@pytest.mark.parametrize("p1, p2, expected, program", TABLE_ARBITRATION)
def test_arbitration_table(p1, p2, expected, program):
    a = Alphabet.of(prog(p1).atoms() | prog(p2).atoms())
    result = arbitrate([prog(p1), prog(p2)], a)
    assert named(result.se) == pairs(expected)
    assert result.se == se_models(prog(program), a)


# rows: P1, P2, basic merge SE set with here-parts kept inside there-parts
TABLE_BASIC = [
    ("p.", "q.", "(pq,pq)"),
    ("p.", ":- p.", "(p,p) (∅,∅) (∅,p)"),
    ("p :- not p.", ":- p.", "(∅,p) (p,p) (∅,∅)"),
    ("p. q.", ":- p, q.", "(pq,pq) (p,p) (q,q) (p,pq) (q,pq)"),
    (":- not p. :- not q.", ":- p, q.", "(∅,p) (p,p) (∅,q) (q,q) (∅,pq) (p,pq) (q,pq) (pq,pq)"),
    (":- p. :- q.", "p ; q.", "(∅,∅) (p,p) (q,q) (∅,p) (∅,q)"),
]


@pytest.mark.parametrize("p1, p2, expected", TABLE_BASIC)
def test_basic_merge_table(p1, p2, expected):
    a = Alphabet.of(prog(p1).atoms() | prog(p2).atoms())
    ps = [Program(), prog(p1), prog(p2)]
    result = merge_basic(ps, a)
    assert named(result.se) == pairs(expected)
    assert named(result.se) == oracles.merge_basic([named(se_models(p, a)) for p in ps])


@pytest.mark.parametrize("p1, p2, expected, program", TABLE_ARBITRATION)
def test_basic_merge_drops_the_choice_rules_of_arbitration(p1, p2, expected, program):
    a = Alphabet.of(prog(p1).atoms() | prog(p2).atoms())
    kept = [r for r in prog(program) if not (r.head_pos and r.head_pos == r.head_neg and not r.body_pos | r.body_neg)]
    result = merge_basic([Program(), prog(p1), prog(p2)], a)
    assert result.se == se_models(Program.of(kept), a)


def test_meet_is_expansion_and_join_is_idempotent():
    p, q = prog("p ; q."), prog(":- p, q.")
    assert meet(p, q).se == expand(p, q).se
    assert join(p, p).se == se_models(p)


def test_unsatisfiable_member_is_dropped():
    result = arbitrate([prog("p. :- p."), prog("q ; r.")])
    assert result.dropped == (0,)
    assert result.se == se_models(prog("q ; r."), "pqr")


def test_all_members_unsatisfiable():
    result = arbitrate([prog("p. :- p."), prog("q. :- q.")])
    assert result.dropped == (0, 1)
    assert len(result.se) == 0


def test_unsatisfiable_constraints_give_unsatisfiable_merge():
    result = merge_basic([prog("p. :- p."), prog("q.")])
    assert len(result.se) == 0


def test_basic_merge_drops_unsatisfiable_members_only():
    result = merge_basic([prog(":- q."), prog("p. :- p."), prog("q ; r.")])
    assert result.dropped == (1,)
    assert result.se == revise(prog("q ; r."), prog(":- q."), "pqr").se


def test_singleton_profile_is_identity():
    p = prog("p ; not q :- r.")
    assert arbitrate([p]).se == se_models(p)


def test_profile_object_is_accepted():
    psi = BeliefProfile((Program(), prog(P1), prog(P2)), has_constraints=True)
    assert merge_basic(psi).se == merge_basic(list(psi)).se
    with pytest.raises(ValueError):
        arbitrate(psi)
    with pytest.raises(ValueError):
        merge_basic(BeliefProfile((prog(P1),)))


def test_tuple_cap():
    ps = [prog("p ; q ; r.")] * 4
    with pytest.raises(CapacityError):
        arbitrate(ps, cap=1000)


ATOMS = ("p", "q", "r")


# the oracle compares all pairs of product tuples, so profiles stay small
SMALL = ("p", "q")


@settings(max_examples=150)
@given(st.lists(programs(atoms=SMALL, max_rules=3), min_size=1, max_size=3))
def test_arbitration_matches_oracle(ps):
    assert named(arbitrate(ps, SMALL).se) == oracles.arbitrate([named(se_models(p, SMALL)) for p in ps])


@settings(max_examples=150)
@given(st.lists(programs(atoms=SMALL, max_rules=3), min_size=1, max_size=3))
def test_basic_merge_matches_oracle(ps):
    assert named(merge_basic(ps, SMALL).se) == oracles.merge_basic([named(se_models(p, SMALL)) for p in ps])


@settings(max_examples=100)
@given(programs(), programs())
def test_two_member_merges_match_oracle_on_three_atoms(p1, p2):
    sets = [named(se_models(p, ATOMS)) for p in (p1, p2)]
    assert named(arbitrate([p1, p2], ATOMS).se) == oracles.arbitrate(sets)
    assert named(merge_basic([p1, p2], ATOMS).se) == oracles.merge_basic(sets)


@settings(max_examples=150)
@given(programs(), programs())
def test_merging_pairs_as_revisions(p1, p2):
    arb = arbitrate([p1, p2], ATOMS).se
    assert arb == revise(p1, p2, ATOMS).se | revise(p2, p1, ATOMS).se
    assert merge_basic([p1, p2], ATOMS).se == revise(p2, p1, ATOMS).se


@settings(max_examples=100)
@given(st.lists(programs(max_rules=3), min_size=1, max_size=3))
def test_arbitration_entails_unconstrained_merge(ps):
    assert arbitrate(ps, ATOMS).se <= merge_basic([Program(), *ps], ATOMS).se


@settings(max_examples=100)
@given(st.lists(programs(max_rules=3), min_size=2, max_size=3))
def test_jointly_consistent_profile_merges_to_meet(ps):
    together = SEModelSet.everything(Alphabet.of(ATOMS))
    for p in ps:
        together = together & se_models(p, ATOMS)
    if together:
        assert arbitrate(ps, ATOMS).se == together
