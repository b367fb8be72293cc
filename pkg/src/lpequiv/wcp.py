"""Weight constraint programs: satisfaction, reduct, stable models and the
embedding of smodels programs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import LpeqError
from .program import (
    Basic,
    Choice,
    Compute,
    Constraint,
    Program,
    Weight,
    _Bases,
    _check_subset,
    _natural,
    _weighted,
)
from .semantics import horn_closure, wsum


@dataclass(frozen=True)
class WeightConstraint:
    """``lower <= { a=w, not b=w } <= upper``; ``upper=None`` means unbounded."""

    lower: int
    upper: Optional[int]
    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        _natural(self.lower, "lower bound")
        if self.upper is not None:
            _natural(self.upper, "upper bound")
            if self.lower > self.upper:
                raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        object.__setattr__(self, "pos", _weighted(self.pos))
        object.__setattr__(self, "neg", _weighted(self.neg))

    @property
    def atoms(self):
        return tuple(a for a, _ in self.pos) + tuple(b for b, _ in self.neg)

    @property
    def positive_atoms(self):
        return tuple(dict.fromkeys(a for a, _ in self.pos))

    def map(self, f):
        return WeightConstraint(
            self.lower,
            self.upper,
            [(f(a), w) for a, w in self.pos],
            [(f(b), w) for b, w in self.neg],
        )


@dataclass(frozen=True)
class WCRule:
    head: WeightConstraint
    body: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))

    @property
    def constraints(self):
        return (self.head,) + self.body


@dataclass(frozen=True)
class WCProgram(_Bases):
    rules: tuple
    symbols: object
    visible: frozenset
    hidden: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        self._check_bases()

    @cached_property
    def occurring(self) -> frozenset:
        return frozenset(a for r in self.rules for C in r.constraints for a in C.atoms)

    def structure(self):
        name = self.symbols.name
        rules = tuple(
            WCRule(r.head.map(name), [C.map(name) for C in r.body]) for r in self.rules
        )
        return rules, self.visible_names, self.hidden_names


def build_wcp(rules, symbols, visible=None, hidden=None, extra=()) -> WCProgram:
    """Same visibility defaults as :func:`~lpequiv.program.build_program`."""
    from .program import build_program

    # reuse the declaration logic through a throwaway smodels program
    atoms = sorted({a for r in rules for C in r.constraints for a in C.atoms})
    probe = build_program([Compute(atoms)], symbols, visible, hidden, extra)
    return WCProgram(tuple(rules), symbols, probe.visible, probe.hidden)


def constraint_sum(I, C) -> int:
    return wsum(I, C.pos, C.neg)


def wc_satisfies(I, C) -> bool:
    s = constraint_sum(I, C)
    return C.lower <= s and (C.upper is None or s <= C.upper)


def wc_rule_satisfied(I, rule) -> bool:
    return wc_satisfies(I, rule.head) or not all(wc_satisfies(I, C) for C in rule.body)


def wc_program_satisfied(P, I) -> bool:
    I = frozenset(I)
    return all(wc_rule_satisfied(I, r) for r in P.rules)


@dataclass(frozen=True)
class HornConstraint:
    """Positive, lower-bounded constraint ``lower <= { a=w, ... }``."""

    lower: int
    pos: tuple = ()


@dataclass(frozen=True)
class HornRule:
    head: int
    body: tuple = ()


def wc_reduce_constraint(I, C) -> HornConstraint:
    return HornConstraint(max(0, C.lower - wsum(I, (), C.neg)), C.pos)


def wc_reduce_program(P, I) -> tuple:
    """Horn constraint rules of the reduct of ``P`` relative to ``I``.

    Only upper bounds of body constraints gate a rule here; lower bounds
    survive inside the reduced constraints.
    """
    I = frozenset(I)
    out = []
    for r in P.rules:
        if any(C.upper is not None and constraint_sum(I, C) > C.upper for C in r.body):
            continue
        body = tuple(wc_reduce_constraint(I, C) for C in r.body)
        for h in r.head.positive_atoms:
            if h in I:
                out.append(HornRule(h, body))
    return tuple(out)


def wc_least_model(R) -> frozenset:
    return horn_closure([(r.head, tuple((c.lower, c.pos) for c in r.body)) for r in R])


def wc_is_stable(P, M) -> bool:
    M = _check_subset(P, M)
    return wc_program_satisfied(P, M) and wc_least_model(wc_reduce_program(P, M)) == M


def embed_smodels(P: Program) -> WCProgram:
    """Represent a compute-free smodels program as a weight constraint program."""
    out = []
    for r in P.rules:
        if isinstance(r, Compute):
            raise LpeqError("compute statements have no weight constraint rule counterpart")
        if isinstance(r, Choice):
            head = WeightConstraint(0, None, [(h, 1) for h in r.heads])
            body = WeightConstraint(
                len(r.pos) + len(r.neg), None, [(a, 1) for a in r.pos], [(b, 1) for b in r.neg]
            )
        else:
            head = WeightConstraint(1, None, [(r.head, 1)])
            if isinstance(r, Weight):
                body = WeightConstraint(r.bound, None, r.pos, r.neg)
            else:
                bound = r.bound if isinstance(r, Constraint) else len(r.pos) + len(r.neg)
                assert isinstance(r, (Basic, Constraint))
                body = WeightConstraint(
                    bound, None, [(a, 1) for a in r.pos], [(b, 1) for b in r.neg]
                )
        out.append(WCRule(head, (body,)))
    return WCProgram(tuple(out), P.symbols, P.visible, P.hidden)
