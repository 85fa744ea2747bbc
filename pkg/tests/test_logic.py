import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modaltheory import oracles
from modaltheory.frames import KripkeFrame, cluster, full_general, powerset_frame, pretree_q, subalgebra_generated
from modaltheory.logic import (
    AXIOMS,
    S421_AXIOMS,
    And,
    Box,
    BudgetExceeded,
    Dia,
    FormulaSyntaxError,
    Iff,
    Imp,
    Not,
    Or,
    UnboundVariable,
    Var,
    axiom_battery,
    parse_formula,
    substitute,
    to_text,
    tokenize,
    truth_set,
    valid_in,
    variables,
)

VARS = ["p", "q"]

formulas = st.recursive(
    st.sampled_from([Var("p"), Var("q"), parse_formula("true"), parse_formula("false")]),
    lambda sub: st.one_of(
        st.builds(Not, sub),
        st.builds(Dia, sub),
        st.builds(Box, sub),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Imp, sub, sub),
        st.builds(Iff, sub, sub),
    ),
    max_leaves=6,
)


def random_frame(rng, n):
    return KripkeFrame(n, frozenset((a, b) for a in range(n) for b in range(n) if rng.random() < 0.4))


frames = st.builds(lambda seed, n: random_frame(random.Random(seed), n), st.integers(0, 10**6), st.integers(1, 4))


def test_parse_precedence():
    f = parse_formula("p & q | r -> s <-> t")
    assert isinstance(f, Iff) and isinstance(f.left, Imp) and isinstance(f.left.left, Or)


def test_implication_is_right_associative():
    f = parse_formula("p -> q -> r")
    assert f == Imp(Var("p"), Imp(Var("q"), Var("r")))


def test_prefix_operators_bind_tightest():
    assert parse_formula("~<>[]p & q") == And(Not(Dia(Box(Var("p")))), Var("q"))


def test_unicode_aliases():
    assert parse_formula("□◇p → ◇□p") == parse_formula("[]<>p -> <>[]p")
    assert parse_formula("¬p ∧ q ∨ r ↔ s") == parse_formula("~p & q | r <-> s")


def test_syntax_error_position():
    with pytest.raises(FormulaSyntaxError) as e:
        parse_formula("p -> -> q")
    assert e.value.token_index == 2


@pytest.mark.parametrize("text", ["", "p q", "(p", "p)", "p & ", "P", "<>"])
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_tokenize_positions():
    assert [t for t, _ in tokenize("[]p->q")] == ["[]", "p", "->", "q"]


@settings(max_examples=200, deadline=None)
@given(formulas)
def test_print_parse_roundtrip(f):
    assert parse_formula(to_text(f)) == f


def test_minimal_parentheses():
    assert to_text(parse_formula("(p -> q) -> r")) == "(p -> q) -> r"
    assert to_text(parse_formula("p -> (q -> r)")) == "p -> q -> r"
    assert to_text(parse_formula("<>(p | q)")) == "<>(p | q)"


def test_variables_sorted():
    assert variables(parse_formula("q & <>p | q")) == ["p", "q"]


def test_truth_set_rejects_inadmissible_values():
    g = subalgebra_generated(full_general(cluster(2)), [])
    with pytest.raises(ValueError):
        truth_set(g, {"p": [0]}, parse_formula("p"))
    with pytest.raises(UnboundVariable):
        truth_set(g, {}, parse_formula("p"))


@settings(max_examples=100, deadline=None)
@given(frames, formulas, st.integers(0, 255), st.integers(0, 255))
def test_truth_set_matches_world_clauses(f, phi, pm, qm):
    full = f.full
    val = {"p": pm & full, "q": qm & full}
    got = truth_set(f, val, phi)
    succ = [[y for y in range(f.size) if (x, y) in f.relation] for x in range(f.size)]
    sets = {k: {x for x in range(f.size) if (v >> x) & 1} for k, v in val.items()}
    for x in range(f.size):
        assert bool((got >> x) & 1) == oracles.world_truth(succ, sets, phi, x)


@settings(max_examples=100, deadline=None)
@given(frames, formulas, st.integers(0, 255))
def test_box_is_dual_of_diamond(f, phi, pm):
    val = {"p": pm & f.full, "q": (pm >> 2) & f.full}
    assert truth_set(f, val, Box(phi)) == truth_set(f, val, Not(Dia(Not(phi))))


@settings(max_examples=100, deadline=None)
@given(frames, st.integers(0, 255), st.integers(0, 255))
def test_diamond_is_monotone(f, a, b):
    a &= f.full
    b = (a | b) & f.full
    assert truth_set(f, {"p": a}, Dia(Var("p"))) & ~truth_set(f, {"p": b}, Dia(Var("p"))) == 0


@settings(max_examples=60, deadline=None)
@given(frames, formulas, formulas)
def test_validity_survives_substitution(f, phi, psi):
    if valid_in(f, phi):
        assert valid_in(f, substitute(phi, {"p": psi}))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), formulas)
def test_valid_in_matches_brute_force(seed, n, phi):
    rng = random.Random(seed)
    f = random_frame(rng, n)
    g = subalgebra_generated(full_general(f), [rng.randrange(1 << n)])
    members = [frozenset(x for x in range(n) if (m >> x) & 1) for m in g.algebra]
    assert valid_in(g, phi).valid == oracles.brute_valid(n, f.relation, members, phi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), formulas)
def test_sat_agrees_with_enumeration(seed, n, phi):
    rng = random.Random(seed)
    g = subalgebra_generated(full_general(random_frame(rng, n)), [rng.randrange(1 << n)])
    enum = valid_in(g, phi)
    sat = valid_in(g, phi, method="sat")
    assert enum.valid == sat.valid
    if not sat.valid:
        val = {k: list(v) for k, v in sat.countervaluation.items()}
        assert not (truth_set(g, val, phi) >> sat.world) & 1


def test_first_countervaluation_is_lexicographic():
    r = valid_in(pretree_q(2), "<>[]p -> []<>p")
    assert not r.valid
    assert r.countervaluation == {"p": (2, 3)} and r.world == 0
    assert r.checked == 0b1100 + 1


def test_budget_refusal_and_fallback():
    q3 = pretree_q(3)
    with pytest.raises(BudgetExceeded):
        valid_in(q3, "p -> <>p", budget=1000)
    r = valid_in(q3, "p -> <>p", budget=1000, method="auto")
    assert r.valid and r.method == "sat"


def test_axiom_texts_parse():
    for text in AXIOMS.values():
        parse_formula(text)


def test_q2_battery():
    rep = axiom_battery(full_general(pretree_q(2)))
    assert [r.name for r in rep.results if r.valid] == ["N", "K", "T", "4"]


def test_q2_with_top_battery():
    rep = axiom_battery(full_general(pretree_q(2, with_top=True)))
    assert [r.name for r in rep.results if not r.valid] == ["Grz", "TRIV"]


def test_q3_battery_by_sat():
    rep = axiom_battery(pretree_q(3), method="sat")
    assert [r.name for r in rep.results if r.valid] == ["N", "K", "T", "4"]


def test_grz_fails_on_a_two_cluster():
    assert not valid_in(cluster(2), AXIOMS["Grz"]).valid
    assert valid_in(cluster(1), AXIOMS["Grz"]).valid


def test_powerset_frame_s421():
    rep = axiom_battery(powerset_frame(4, reversed=True), S421_AXIOMS)
    assert all(r.valid for r in rep.results)
    assert not valid_in(powerset_frame(2, drop_empty=True, reversed=True), AXIOMS[".2"]).valid


def test_table_lists_every_axiom():
    table = axiom_battery(cluster(1)).table()
    assert all(name in table for name in AXIOMS)
