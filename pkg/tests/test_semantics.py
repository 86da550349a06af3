import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import named, pairs, programs, prog, se_set, well_defined_sets
from lpchange import (
    CapacityError,
    NotWellDefinedError,
    Program,
    answer_sets,
    classical_models,
    complete_closure,
    entails_s,
    is_complete,
    is_well_defined,
    parse_se_text,
    reduct,
    render_program,
    render_se,
    se_models,
    strongly_equivalent,
)
from lpchange.postulates import GeneratorConfig, random_program

F = frozenset


def test_classical_models_of_disjunction():
    assert named(classical_models(prog("p ; q."), "pq")) == {F("p"), F("q"), F("pq")}


def test_classical_models_of_constraint_over_wider_language():
    assert named(classical_models(prog(":- p."), "pq")) == {F(), F("q")}


def test_classical_models_of_empty_program():
    assert named(classical_models(Program(), "p")) == {F(), F("p")}


def test_reduct_keeps_rule_when_negation_is_false():
    assert render_program(reduct(prog("p :- not q."), {"p"})) == "p.\n"


def test_reduct_drops_blocked_body():
    assert len(reduct(prog("p :- not q."), {"q"})) == 0


def test_reduct_drops_rule_whose_negated_head_is_not_contained():
    assert len(reduct(prog("p ; not p."), set())) == 0
    assert render_program(reduct(prog("p ; not p."), {"p"})) == "p.\n"


def test_answer_sets_of_disjunctive_program():
    got = answer_sets(prog("a. c ; d :- a, not b."), "abcd")
    assert named(got) == {F("ac"), F("ad")}


def test_answer_sets_change_when_adding_the_same_rules():
    extra = "p :- q. q :- p."
    assert named(answer_sets(prog("p ; q. " + extra))) == {F("pq")}
    assert named(answer_sets(prog("p :- not q. q :- not p. " + extra))) == set()


def test_program_with_se_models_but_no_answer_set():
    p = prog("p :- not p.")
    assert named(answer_sets(p, "p")) == set()
    assert named(se_models(p, "p")) == pairs("(∅,p) (p,p)")


def test_se_models_of_disjunction():
    assert named(se_models(prog("p ; q."), "pq")) == pairs("(p,p) (q,q) (p,pq) (q,pq) (pq,pq)")


def test_se_models_of_even_loop():
    got = se_models(prog("p :- not q. q :- not p."), "pq")
    assert named(got) == pairs("(p,p) (q,q) (p,pq) (q,pq) (pq,pq) (∅,pq)")


def test_se_listing_is_sorted_there_then_here():
    got = se_models(prog("p :- not q. q :- not p."), "pq")
    assert render_se(got).splitlines() == [
        "({p},{p})",
        "({q},{q})",
        "({},{p,q})",
        "({p},{p,q})",
        "({q},{p,q})",
        "({p,q},{p,q})",
    ]


def test_not_well_defined_pair():
    assert not is_well_defined(se_set("p", "(∅,p)"))


def test_empty_set_is_well_defined_and_complete():
    assert is_well_defined(se_set("pq", ""))
    assert is_complete(se_set("pq", ""))


S_EXAMPLE = "(p,p) (q,q) (p,pq) (q,pq) (pq,pq) (∅,p)"


def test_incomplete_example():
    assert not is_complete(se_set("pq", S_EXAMPLE))


def test_adding_missing_pair_completes_example():
    assert is_complete(se_set("pq", S_EXAMPLE + " (∅,pq)"))


def test_completion_of_example_adds_exactly_one_pair():
    s = se_set("pq", S_EXAMPLE)
    assert named(complete_closure(s)) == pairs(S_EXAMPLE + " (∅,pq)")


def test_closure_of_complete_set_is_identity():
    s = se_set("pq", S_EXAMPLE + " (∅,pq)")
    assert complete_closure(s) == s


def test_completeness_needs_well_definedness():
    with pytest.raises(NotWellDefinedError):
        is_complete(se_set("p", "(∅,p)"))
    with pytest.raises(NotWellDefinedError):
        complete_closure(se_set("p", "(∅,p)"))


@settings(max_examples=200)
@given(well_defined_sets(atoms=("p", "q", "r", "s")))
def test_closure_is_idempotent_and_complete(s):
    once = complete_closure(s)
    assert complete_closure(once) == once
    assert is_complete(once)
    assert s <= once
    assert oracles.complete(named(once))


def test_disjunction_and_even_loop_are_not_strongly_equivalent():
    assert not strongly_equivalent(prog("p ; q."), prog("p :- not q. q :- not p."))
    assert entails_s(prog("p ; q."), prog("p :- not q. q :- not p."))


def test_strong_equivalence_is_reflexive():
    p = prog("p :- not q. q ; r :- p.")
    assert strongly_equivalent(p, p)


def test_chained_fact_is_strongly_equivalent_to_facts():
    assert strongly_equivalent(prog("p. q :- p."), prog("p. q."))


def test_capacity_cap():
    p = prog(" ".join(f"a{i}." for i in range(15)))
    with pytest.raises(CapacityError):
        se_models(p)
    assert len(se_models(p, max_atoms=15)) == 1


def test_empty_alphabet_has_one_interpretation():
    assert named(classical_models(Program())) == {F()}
    assert named(se_models(Program())) == {(F(), F())}


def test_parse_se_compact_and_braced_forms():
    s = parse_se_text("(∅,p)\n({p},{p,q})\n(pq,pq)\n")
    assert named(s) == pairs("(∅,p) (p,pq) (pq,pq)")
    assert parse_se_text(render_se(s)) == s


def test_parse_se_json_form():
    s = parse_se_text('[[[], ["p"]], [["p"], ["p"]]]')
    assert named(s) == pairs("(∅,p) (p,p)")


def test_parse_se_keeps_declared_alphabet():
    s = parse_se_text("#alphabet p, q.\n(p,p)\n")
    assert s.alphabet.atoms == ("p", "q")
    assert render_se(s) == "#alphabet p, q.\n({p},{p})\n"


def test_parse_se_rejects_here_outside_there():
    with pytest.raises(ValueError, match="2:"):
        parse_se_text("(p,p)\n(q,p)\n")


# --- agreement with the definition-direct oracle -----------------------------------


@settings(max_examples=300)
@given(programs())
def test_se_models_match_oracle(p):
    atoms = ("p", "q", "r")
    assert named(se_models(p, atoms)) == oracles.se_models(p, atoms)


@settings(max_examples=300)
@given(programs())
def test_answer_sets_match_oracle(p):
    atoms = ("p", "q", "r")
    assert named(answer_sets(p, atoms)) == oracles.answer_sets(p, atoms)


@settings(max_examples=200)
@given(programs())
def test_models_are_the_total_se_models(p):
    atoms = ("p", "q", "r")
    se = se_models(p, atoms)
    assert named(classical_models(p, atoms)) == {y for x, y in named(se) if x == y}


@settings(max_examples=200)
@given(programs())
def test_answer_sets_are_the_totals_without_smaller_here(p):
    atoms = ("p", "q", "r")
    se = named(se_models(p, atoms))
    expected = {y for x, y in se if x == y and not any(x2 < y for x2, y2 in se if y2 == y)}
    assert named(answer_sets(p, atoms)) == expected


@settings(max_examples=200)
@given(programs())
def test_se_models_are_well_defined(p):
    assert is_well_defined(se_models(p, ("p", "q", "r")))


@settings(max_examples=200)
@given(programs(head_negation=False))
def test_disjunctive_programs_have_complete_se_models(p):
    assert is_complete(se_models(p, ("p", "q", "r")))


def test_generator_disjunctive_mode_gives_complete_sets():
    rng = random.Random(11)
    cfg = GeneratorConfig(atom_count=4, allow_head_negation=False)
    for _ in range(100):
        p = random_program(cfg, rng)
        assert p.is_disjunctive()
        assert is_complete(se_models(p, "pqrs"))
