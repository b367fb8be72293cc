from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from lpequiv.bench import gen_random_program
from lpequiv.errors import WeightOverflowError
from lpequiv.program import MAX_NATURAL, Basic, Constraint, Weight, map_atoms
from lpequiv.search import enumerate_oracle
from lpequiv.semantics import (
    ReducedProgram,
    body_holds,
    compst,
    is_stable,
    least_model,
    nec_step,
    reduce,
    satisfies,
    satisfies_program,
    wsum,
)
from lpequiv.textio import parse_program

from conftest import atoms, names, prog

TEA_ORDER = ("acceptable", "happy", "lemon", "tea", "biscuit")

# reduct of the cafe program for TEA_ORDER, listed rule by rule
TEA_REDUCT = """
tea. biscuit.
cognac :- coffee.
lemon :- tea.
mess :- milk, lemon.
happy :- 1 { biscuit, cake, cognac }.
bankrupt :- 6 [ coffee=1, tea=1, biscuit=1, cake=2, cognac=4 ].
acceptable :- happy.
"""


def test_tea_order_is_stable(cafe):
    assert is_stable(cafe, atoms(cafe, *TEA_ORDER))


def test_tea_order_reduct_matches_listing(cafe):
    R = reduce(cafe, atoms(cafe, *TEA_ORDER))
    expected = parse_program(TEA_REDUCT)
    got = [map_atoms(r, cafe.name) for r in R]
    assert len(got) == 8
    assert got == [map_atoms(r, expected.name) for r in expected.rules]
    assert least_model(R) == atoms(cafe, *TEA_ORDER)


def test_wsum_and_overflow():
    assert wsum({1}, [(1, 3), (2, 5)], [(2, 4), (1, 9)]) == 7
    with pytest.raises(WeightOverflowError):
        wsum({1, 2}, [(1, MAX_NATURAL), (2, 1)])


def test_satisfaction_by_rule_form():
    P = prog("""
        h :- a, not b.
        k :- 2 { a, b, not c }.
        w :- 3 [ a=2, not c=1 ].
        { x } :- a.
        compute { a, not b }.
    """)
    I = atoms(P, "a")
    basic, cons, weight, choice, comp = P.rules
    assert not satisfies(I, basic) and satisfies(I | atoms(P, "h"), basic)
    assert body_holds(I, cons) and not satisfies(I, cons)
    assert body_holds(I, weight)
    assert satisfies(frozenset(), choice)
    assert satisfies(I, comp) and not satisfies(atoms(P, "a", "b"), comp)
    assert satisfies_program(P, atoms(P, "a", "h", "k", "w"))


def test_reduct_shapes():
    P = prog("""
        a :- not b.
        { c, d } :- a, not b.
        k :- 2 { a, not b, not c }.
        w :- 5 [ a=1, not b=3, not c=4 ].
        compute { a }.
    """)
    I = atoms(P, "a", "c")
    R = reduce(P, I)
    a, c, k, w = (P.symbols.id(n) for n in ("a", "c", "k", "w"))
    assert list(R) == [
        Basic(a, []),
        Basic(c, [a]),
        Constraint(k, 1, [a]),
        Weight(w, 2, [(a, 1)]),
    ]
    # a true negative literal removes the basic and choice rules
    assert list(reduce(P, atoms(P, "b"))) == [Constraint(k, 1, [a]), Weight(w, 1, [(a, 1)])]


def test_reduced_program_rejects_negation():
    with pytest.raises(ValueError):
        ReducedProgram([Basic(0, [], [1])])


def test_least_model_and_nec():
    P = prog("a. b :- a. c :- 2 { a, b, d }. e :- 3 [ a=1, c=1, d=5 ].")
    R = reduce(P, frozenset())
    assert names(P, least_model(R)) == {"a", "b", "c"}
    assert names(P, nec_step(R, frozenset())) == {"a"}
    assert names(P, nec_step(R, atoms(P, "a"))) == {"a", "b"}


def test_compute_atoms_collected():
    P = prog("a. compute { a, not b }. compute { c }.")
    cs = compst(P)
    assert names(P, cs.pos) == {"a", "c"} and names(P, cs.neg) == {"b"}
    assert not is_stable(P, atoms(P, "a"))


def test_hidden_choice_pair_models():
    P = prog("a :- b. a :- c. b :- not c. c :- not b. #hide b, c.")
    Q = prog("""{ b, c }. a :- b, c. a :- not b, not c.
                b :- c, not b. c :- b, not c. #hide b, c.""")
    as_names = lambda R: {frozenset(names(R, M)) for M in enumerate_oracle(R)}
    assert as_names(P) == {frozenset("ab"), frozenset("ac")}
    assert as_names(Q) == {frozenset("a"), frozenset("abc")}


def test_interpretation_outside_base_rejected():
    P = prog("a.")
    with pytest.raises(ValueError):
        is_stable(P, {5})


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_nec_fixpoint_agrees_with_linear_closure(seed):
    P = gen_random_program(seed, n_atoms=6, n_rules=7, compute=0)
    for M in [frozenset(), P.hb, frozenset(a for a in P.hb if a % 2)]:
        R = reduce(P, M)
        I = frozenset()
        while True:
            J = nec_step(R, I)
            if J == I:
                break
            I = J
        assert I == least_model(R)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_stable_models_are_classical_models(seed):
    P = gen_random_program(seed, n_atoms=5, n_rules=6)
    for M in enumerate_oracle(P):
        assert satisfies_program(P, M)
