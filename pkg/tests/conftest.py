from __future__ import annotations

from pathlib import Path

import pytest

from lpequiv.textio import parse_program, parse_wcp

DATA = Path(__file__).parent / "data"


def prog(text, **kw):
    return parse_program(text, **kw)


def names(P, M):
    """Atom ids to a set of names, for readable assertions."""
    return {P.name(a) for a in M}


def name_sets(P, models):
    return {frozenset(names(P, M)) for M in models}


def atoms(P, *ns):
    return P.atoms(ns)


@pytest.fixture
def cafe():
    return parse_program((DATA / "cafe.lp").read_text(), filename="cafe.lp")


@pytest.fixture
def hidden_pair():
    P = parse_program((DATA / "hidden_pair_p.lp").read_text())
    Q = parse_program((DATA / "hidden_pair_q.lp").read_text())
    return P, Q


@pytest.fixture
def bounds_wcp():
    return parse_wcp((DATA / "bounds.wlp").read_text())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(line)
