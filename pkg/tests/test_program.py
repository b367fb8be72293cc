from __future__ import annotations

import pytest

from lpequiv.errors import DeclarationError
from lpequiv.program import (
    Basic,
    Choice,
    Compute,
    Constraint,
    SymbolTable,
    Weight,
    build_program,
    heads,
    map_atoms,
    project_hidden,
    project_visible,
    rule_atoms,
)

from conftest import names, prog


def test_default_everything_visible():
    P = prog("a :- not b.")
    assert P.visible_names == {"a", "b"}
    assert P.hidden == frozenset()


def test_hidden_declaration_makes_rest_visible():
    P = prog("a :- not b. #hide b.")
    assert P.visible_names == {"a"}
    assert P.hidden_names == {"b"}


def test_visible_declaration_with_unused_atom_goes_to_hba():
    # b hidden because undeclared, c declared but never used
    P = prog("a :- not b. #visible a, c.")
    assert P.visible_names == {"a", "c"}
    assert P.hidden_names == {"b"}
    assert names(P, P.hba) == {"c"}


def test_both_declarations_must_partition():
    with pytest.raises(Exception):
        prog("a :- not b, c. #visible a. #hide b.")
    with pytest.raises(Exception):
        prog("a :- not b. #visible a, b. #hide b.")


def test_build_program_checks_ids():
    st = SymbolTable(("a",))
    with pytest.raises(DeclarationError):
        build_program([Basic(0, [1])], st)
    with pytest.raises(DeclarationError):
        SymbolTable(("a", "a"))


def test_rule_validation():
    with pytest.raises(ValueError):
        Choice([])
    with pytest.raises(ValueError):
        Weight(0, 1, [(1, -2)])
    with pytest.raises(ValueError):
        Constraint(0, 2**63, [1])
    # duplicate literals collapse, weighted ones stay
    assert Basic(0, [1, 1, 2]).pos == (1, 2)
    assert len(Weight(0, 1, [(1, 1), (1, 1)]).pos) == 2


def test_rule_helpers():
    r = Choice([0, 1], [2], [3])
    assert heads(r) == (0, 1)
    assert rule_atoms(Compute([4], [5])) == (4, 5)
    assert map_atoms(Weight(0, 2, [(1, 3)], [(2, 1)]), lambda a: a + 10) == Weight(
        10, 2, [(11, 3)], [(12, 1)]
    )


def test_projections():
    P = prog("a :- not b. #hide b.")
    a, b = P.atoms(["a"]), P.atoms(["b"])
    assert project_visible(P, a | b) == a
    assert project_hidden(P, a | b) == b
    with pytest.raises(ValueError):
        project_visible(P, {99})
