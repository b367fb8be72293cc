"""Compilation of weight constraint programs into smodels programs.

Every weight constraint occurrence ``C`` gets two fresh hidden atoms:
``__sat.k`` holds when the lower bound of ``C`` is met and ``__unsat.k``
when its upper bound is exceeded.  Each rule becomes a choice over the
positive head atoms, guarded by its body, and a failure atom ``__f``
(excluded by a compute statement) fires when the head constraint is
violated although the body holds.

Constraints without an upper bound get no ``__unsat`` atom; the literals
``not __unsat.k`` and the head rule testing it are left out for them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ReservedNameError, WeightOverflowError
from .program import MAX_NATURAL, Basic, Choice, Compute, Program, SymbolTable, Weight
from .semantics import wsum

SAT_PREFIX = "__sat."
UNSAT_PREFIX = "__unsat."
F_ATOM = "__f"


@dataclass(frozen=True)
class SnsMap:
    """``atoms[i][j]`` is ``(sat, unsat or None)`` for constraint ``j`` of rule ``i``
    (the head is constraint 0)."""

    atoms: tuple
    f: int


def tr_sns_constraint(C, fresh):
    """The two weight rules for ``C``; ``fresh(kind)`` returns a new atom.

    Returns ``(rules, sat, unsat)``; without an upper bound only the
    ``sat`` rule is produced and ``unsat`` is ``None``.
    """
    sat = fresh("sat")
    rules = [Weight(sat, C.lower, C.pos, C.neg)]
    unsat = None
    if C.upper is not None:
        if C.upper + 1 > MAX_NATURAL:
            raise WeightOverflowError(f"upper bound {C.upper} + 1 exceeds 2^63-1")
        unsat = fresh("unsat")
        rules.append(Weight(unsat, C.upper + 1, C.pos, C.neg))
    return rules, sat, unsat


def sns_compile(P, warn_hidden: bool = True):
    """Translate a weight constraint program; returns ``(Program, SnsMap)``."""
    if warn_hidden and P.hidden:
        warnings.warn(
            "weight constraint program has hidden atoms; the translation may "
            "lack enough visible atoms",
            stacklevel=2,
        )
    names = list(P.symbols.names) + [F_ATOM]
    f = len(names) - 1
    counter = [0]

    def fresh(kind):
        if kind == "sat":
            counter[0] += 1
        names.append(f"{SAT_PREFIX if kind == 'sat' else UNSAT_PREFIX}{counter[0]}")
        return len(names) - 1

    rules = []
    atoms = []
    for r in P.rules:
        pairs = []
        for C in r.constraints:
            out, sat, unsat = tr_sns_constraint(C, fresh)
            rules.extend(out)
            pairs.append((sat, unsat))
        atoms.append(tuple(pairs))
        body_pos = [sat for sat, _ in pairs[1:]]
        body_neg = [unsat for _, unsat in pairs[1:] if unsat is not None]
        heads = r.head.positive_atoms
        if heads:
            rules.append(Choice(heads, body_pos, body_neg))
        sat0, unsat0 = pairs[0]
        rules.append(Basic(f, body_pos, [sat0] + body_neg))
        if unsat0 is not None:
            rules.append(Basic(f, [unsat0] + body_pos, body_neg))
    rules.append(Compute([], [f]))
    clash = set(names[len(P.symbols):]) & set(P.symbols.names)
    if clash:
        raise ReservedNameError(
            "atom names collide with generated atoms: " + ", ".join(sorted(clash))
        )
    fresh_atoms = frozenset(range(len(P.symbols), len(names)))
    out = Program(tuple(rules), SymbolTable(tuple(names)), P.visible, P.hidden | fresh_atoms)
    return out, SnsMap(tuple(atoms), f)


def tr_sns(P, warn_hidden: bool = True) -> Program:
    return sns_compile(P, warn_hidden)[0]


def ext(P, M, sns_map: SnsMap = None):
    """Extend a model of ``P`` with the ``sat``/``unsat`` atoms it makes true."""
    if sns_map is None:
        sns_map = sns_compile(P, warn_hidden=False)[1]
    M = frozenset(M)
    out = set(M)
    for r, pairs in zip(P.rules, sns_map.atoms):
        for C, (sat, unsat) in zip(r.constraints, pairs):
            s = wsum(M, C.pos, C.neg)
            if C.lower <= s:
                out.add(sat)
            if unsat is not None and C.upper + 1 <= s:
                out.add(unsat)
    return frozenset(out)
