from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lpequiv.bench import gen_random_wcp
from lpequiv.errors import ReservedNameError, WeightOverflowError
from lpequiv.program import MAX_NATURAL, Choice, SymbolTable
from lpequiv.search import enumerate_models, enumerate_oracle
from lpequiv.sns import ext, sns_compile, tr_sns, tr_sns_constraint
from lpequiv.textio import format_program, parse_wcp
from lpequiv.verify import Equivalent, verify_translation
from lpequiv.wcp import WCProgram, WeightConstraint, wc_is_stable

from conftest import names


def wc_models(P):
    atoms = sorted(P.hb)
    return [
        frozenset(c)
        for k in range(len(atoms) + 1)
        for c in itertools.combinations(atoms, k)
        if wc_is_stable(P, frozenset(c))
    ]


def _fresh():
    counter = itertools.count(10)
    return lambda kind: next(counter)


def test_constraint_rules():
    rules, sat, unsat = tr_sns_constraint(WeightConstraint(1, 1, [(0, 1)]), _fresh())
    assert [(r.head, r.bound, r.pos) for r in rules] == [(sat, 1, ((0, 1),)), (unsat, 2, ((0, 1),))]
    rules, _, _ = tr_sns_constraint(WeightConstraint(0, 0), _fresh())
    assert [r.bound for r in rules] == [0, 1]
    rules, _, unsat = tr_sns_constraint(WeightConstraint(0, None, [(0, 1)]), _fresh())
    assert len(rules) == 1 and unsat is None
    with pytest.raises(WeightOverflowError):
        tr_sns_constraint(WeightConstraint(0, MAX_NATURAL), _fresh())


def test_single_rule_translation():
    W = parse_wcp("1 { a=1 } 1 :- 0 {} 0.")
    T = tr_sns(W)
    text = format_program(T).splitlines()
    assert len(text) == 9  # seven rules, the compute statement, the #hide line
    assert text[4] == "{ a } :- __sat.2, not __unsat.2."
    assert text[7] == "compute { not __f }."
    assert [names(T, M & T.visible) for M in enumerate_oracle(T)] == [{"a"}]
    assert [names(W, M) for M in wc_models(W)] == [{"a"}]


def test_empty_program():
    T = tr_sns(WCProgram((), SymbolTable(), frozenset()))
    assert format_program(T) == "compute { not __f }.\n#hide __f.\n"
    assert list(enumerate_oracle(T)) == [frozenset()]


def test_generator_line_becomes_plain_choice():
    T = tr_sns(parse_wcp("0 { bit1=1, bit2=1, bit3=1 } 3."))
    choices = [r for r in T.rules if isinstance(r, Choice)]
    assert len(choices) == 1
    assert names(T, choices[0].heads) == {"bit1", "bit2", "bit3"}
    assert choices[0].pos == () and choices[0].neg == ()


def test_ext_examples():
    W = parse_wcp("0 { a=1 } 1. 2 { a=1 } 2 :- 1 { a=1 }.")
    T, m = sns_compile(W)
    (sat0, unsat0), = m.atoms[0]
    (sat1, unsat1), (sat2, unsat2) = m.atoms[1]
    assert ext(W, frozenset(), m) == {sat0}
    a = W.atoms(["a"])
    assert ext(W, a, m) == a | {sat0, sat2}


def test_reserved_names():
    W = parse_wcp("1 { __f=1 }.", allow_reserved=True)
    with pytest.raises(ReservedNameError):
        tr_sns(W)


def test_hidden_atoms_warn(bounds_wcp):
    W = parse_wcp("1 { a=1, h=1 }. #hide h.")
    with pytest.warns(UserWarning):
        tr_sns(W)


def test_bounds_file(bounds_wcp):
    T, m = sns_compile(bounds_wcp)
    got = {M & T.visible for M in enumerate_models(T)}
    assert got == set(wc_models(bounds_wcp))
    assert len(got) == 14


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_ext_is_a_bijection_onto_stable_models(seed):
    W = gen_random_wcp(seed, n_atoms=4, n_rules=3)
    T, m = sns_compile(W)
    source = wc_models(W)
    target = set(enumerate_models(T))
    image = {ext(W, M, m) for M in source}
    assert image == target and len(image) == len(source)
    assert all(N & T.visible == N & W.hb for N in target)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_translation_decides_wcp_equivalence(seed):
    W1 = gen_random_wcp(seed, n_atoms=3, n_rules=2)
    W2 = gen_random_wcp(seed + 1, n_atoms=3, n_rules=2)
    same = set(wc_models(W1)) == set(wc_models(W2))
    v = verify_translation(tr_sns(W1), tr_sns(W2))
    assert (v == Equivalent()) == same
