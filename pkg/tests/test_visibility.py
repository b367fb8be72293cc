from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from lpequiv.bench import gen_even_subsets, gen_random_program, gen_random_wcp
from lpequiv.errors import CapExceededError
from lpequiv.program import Basic
from lpequiv.search import enumerate_oracle
from lpequiv.sns import tr_sns
from lpequiv.visibility import (
    EvaStatus,
    eval_hidden,
    has_enough_visible_exact,
    has_enough_visible_overapprox,
    hidden_dependencies,
    is_separable,
    strongly_connected_components,
)

from conftest import atoms, names, prog

R_TEXT = "a :- not c. c :- not d. d :- b. #visible a, b."
ODD_LOOP = "a :- not a. b :- a, not b. #visible a."


def _single_model_names(P):
    models = list(enumerate_oracle(P))
    assert len(models) == 1
    return names(P, models[0])


def test_hidden_part_with_nothing_visible_true():
    R = prog(R_TEXT)
    H = eval_hidden(R, frozenset())
    c, d = R.symbols.id("c"), R.symbols.id("d")
    assert H.rules == (Basic(c, [], [d]),)
    assert _single_model_names(H) == {"c"}


def test_hidden_part_with_everything_visible_true():
    R = prog(R_TEXT)
    H = eval_hidden(R, atoms(R, "a", "b"))
    c, d = R.symbols.id("c"), R.symbols.id("d")
    assert H.rules == (Basic(c, [], [d]), Basic(d))
    assert _single_model_names(H) == {"d"}


def test_hidden_part_evaluates_bounds():
    P = prog("""
        h :- 2 { a, x, not b }.
        k :- 4 [ a=3, x=1, not b=2, not y=1 ].
        { a, x } :- a, not y.
        #hide h, k, x, y.
    """)
    H = eval_hidden(P, atoms(P, "a"))
    h, k, x, y = (P.symbols.id(n) for n in "hkxy")
    assert [type(r).__name__ for r in H.rules] == ["Constraint", "Weight", "Choice"]
    assert H.rules[0].bound == 0 and H.rules[0].pos == (x,)
    assert H.rules[1].bound == 0 and H.rules[1].neg == ((y, 1),)
    assert H.rules[2].heads == (x,) and H.rules[2].neg == (y,)
    assert H.visible == P.hidden


def test_hidden_part_of_visible_program_is_empty():
    P = prog("a :- not b. { c } :- a.")
    assert eval_hidden(P, atoms(P, "a")).rules == ()
    assert has_enough_visible_exact(P)
    assert has_enough_visible_overapprox(P) is EvaStatus.GUARANTEED


def test_hidden_part_rejects_non_visible_interpretation():
    R = prog(R_TEXT)
    with pytest.raises(ValueError):
        eval_hidden(R, atoms(R, "c"))


def test_odd_loop_separable_but_not_eva():
    P = prog(ODD_LOOP)
    assert not has_enough_visible_exact(P)
    assert has_enough_visible_overapprox(P) is EvaStatus.UNKNOWN
    assert is_separable(P)


def test_parity_chain_has_enough_visible_atoms():
    Q = gen_even_subsets("q", 3)
    assert has_enough_visible_exact(Q)
    assert has_enough_visible_overapprox(Q) is EvaStatus.GUARANTEED


def test_separability_examples():
    Q = prog("""{ b, c }. a :- b, c. a :- not b, not c.
                b :- c, not b. c :- b, not c. #hide b, c.""")
    assert not is_separable(Q)
    assert is_separable(prog("a :- not a."))


def test_hidden_choice_is_unknown():
    assert has_enough_visible_overapprox(prog("{ h }. #hide h.")) is EvaStatus.UNKNOWN


def test_positive_hidden_loop_is_guaranteed():
    P = prog("x :- y. y :- x. x :- a. z :- not x. #hide x, y, z.")
    assert has_enough_visible_overapprox(P) is EvaStatus.GUARANTEED
    assert has_enough_visible_exact(P)


def test_dependency_graph_edges():
    P = prog("x :- a, y, not z. z :- 1 [ x=1, not y=1 ]. #hide x, y, z.")
    x, y, z = (P.symbols.id(n) for n in "xyz")
    g = hidden_dependencies(P)
    assert g[x] == {(y, True), (z, False)}
    assert g[z] == {(x, True), (y, False)}
    assert g[y] == set()


def test_tarjan_components():
    succ = {1: [2], 2: [3], 3: [1, 4], 4: [5], 5: [4], 6: []}
    comps = strongly_connected_components(sorted(succ), lambda v: succ[v])
    assert sorted(sorted(c) for c in comps) == [[1, 2, 3], [4, 5], [6]]
    # sinks come out first
    assert sorted(comps[0]) == [4, 5]


def test_tarjan_handles_long_chains():
    n = 20000
    comps = strongly_connected_components(range(n), lambda v: [v + 1] if v + 1 < n else [0])
    assert len(comps) == 1


def test_exact_cap():
    P = prog(" ".join(f"{{ a{i} }}." for i in range(4)) + " h :- a0. #hide h.")
    with pytest.raises(CapExceededError):
        has_enough_visible_exact(P, cap=3)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 3))
def test_stable_models_restrict_to_hidden_part_models(seed, n_hidden):
    P = gen_random_program(seed, n_atoms=6, n_rules=7, n_hidden=n_hidden)
    for M in enumerate_oracle(P):
        H = eval_hidden(P, M & P.visible)
        assert M & P.hidden in set(enumerate_oracle(H))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 3))
def test_eva_implies_separable_and_overapprox_is_sound(seed, n_hidden):
    P = gen_random_program(seed, n_atoms=6, n_rules=7, n_hidden=n_hidden)
    exact = has_enough_visible_exact(P)
    if exact:
        assert is_separable(P)
    if has_enough_visible_overapprox(P) is EvaStatus.GUARANTEED:
        assert exact


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_sns_output_is_guaranteed(seed):
    T = tr_sns(gen_random_wcp(seed, n_atoms=4, n_rules=3))
    assert has_enough_visible_overapprox(T) is EvaStatus.GUARANTEED
    assert has_enough_visible_exact(T)
