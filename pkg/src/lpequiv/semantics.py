"""Satisfaction, weight sums, the generalized Gelfond-Lifschitz reduct,
least models of positive programs, and the stable-model test."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import WeightOverflowError
from .program import (
    MAX_NATURAL,
    Basic,
    Choice,
    Compute,
    Constraint,
    Weight,
    _check_subset,
)


def wsum(I, pos=(), neg=()) -> int:
    """Sum of weights of ``pos`` atoms in ``I`` and ``neg`` atoms outside ``I``."""
    total = 0
    for a, w in pos:
        if a in I:
            total += w
    for b, w in neg:
        if b not in I:
            total += w
    # weights are natural, so the running sum is monotone
    if total > MAX_NATURAL:
        raise WeightOverflowError(f"weight sum {total} exceeds 2^63-1")
    return total


def _count(I, pos, neg):
    return sum(1 for a in pos if a in I) + sum(1 for b in neg if b not in I)


def body_holds(I, rule) -> bool:
    """Whether the body of ``rule`` is satisfied in ``I`` (literals read classically)."""
    if isinstance(rule, Constraint):
        return rule.bound <= _count(I, rule.pos, rule.neg)
    if isinstance(rule, Weight):
        return rule.bound <= wsum(I, rule.pos, rule.neg)
    return all(a in I for a in rule.pos) and not any(b in I for b in rule.neg)


def satisfies(I, rule) -> bool:
    if isinstance(rule, Choice):
        return True
    if isinstance(rule, Compute):
        return body_holds(I, rule)
    return rule.head in I or not body_holds(I, rule)


def satisfies_program(P, I) -> bool:
    I = _check_subset(P, I)
    return all(satisfies(I, r) for r in P.rules)


@dataclass(frozen=True)
class LiteralSet:
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def satisfied_by(self, I) -> bool:
        return self.pos <= I and not (self.neg & I)


def compst(P) -> LiteralSet:
    pos, neg = set(), set()
    for r in P.rules:
        if isinstance(r, Compute):
            pos.update(r.pos)
            neg.update(r.neg)
    return LiteralSet(frozenset(pos), frozenset(neg))


@dataclass(frozen=True)
class ReducedProgram:
    """Negation-free program of basic, constraint and weight rules."""

    rules: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        for r in self.rules:
            if not isinstance(r, (Basic, Constraint, Weight)):
                raise TypeError(f"{type(r).__name__} rule in a reduced program")
            if r.neg:
                raise ValueError("reduced programs contain no negative literals")

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)


def reduce(P, I) -> ReducedProgram:
    """The reduct of ``P`` relative to ``I``."""
    I = _check_subset(P, I)
    out = []
    for r in P.rules:
        if isinstance(r, Basic):
            if not any(b in I for b in r.neg):
                out.append(Basic(r.head, r.pos))
        elif isinstance(r, Choice):
            if not any(b in I for b in r.neg):
                out.extend(Basic(h, r.pos) for h in r.heads if h in I)
        elif isinstance(r, Constraint):
            satisfied = sum(1 for b in r.neg if b not in I)
            out.append(Constraint(r.head, max(0, r.bound - satisfied), r.pos))
        elif isinstance(r, Weight):
            out.append(Weight(r.head, max(0, r.bound - wsum(I, (), r.neg)), r.pos))
    return ReducedProgram(out)


def horn_rules(rules):
    """Lower positive rules to ``(head, ((bound, ((atom, weight), ...)), ...))``.

    Every reduced rule has one weighted body constraint; multi-constraint
    bodies come from weight constraint programs.
    """
    for r in rules:
        if isinstance(r, Basic):
            yield r.head, ((len(r.pos), tuple((a, 1) for a in r.pos)),)
        elif isinstance(r, Constraint):
            yield r.head, ((r.bound, tuple((a, 1) for a in r.pos)),)
        elif isinstance(r, Weight):
            yield r.head, ((r.bound, r.pos),)
        else:
            raise TypeError(f"not a positive rule: {r!r}")


def horn_closure(rules, blocked=frozenset()) -> frozenset:
    """Least fixpoint of a positive program in linear time.

    ``rules`` are in the lowered form of :func:`horn_rules`.  Atoms in
    ``blocked`` are never derived.  Each rule keeps the residual bound of
    every body constraint plus a count of constraints still open; a true
    atom only visits the constraints it occurs in.
    """
    residual = []
    open_count = []
    heads = []
    watch = defaultdict(list)
    true = set()
    queue = []

    def fire(h):
        if h not in true and h not in blocked:
            true.add(h)
            queue.append(h)

    for ri, (head, body) in enumerate(rules):
        heads.append(head)
        res = []
        n_open = 0
        for ci, (bound, lits) in enumerate(body):
            res.append(bound)
            if bound > 0:
                n_open += 1
            for a, w in lits:
                if w > 0:
                    watch[a].append((ri, ci, w))
        residual.append(res)
        open_count.append(n_open)
        if n_open == 0:
            fire(head)

    while queue:
        a = queue.pop()
        for ri, ci, w in watch.get(a, ()):
            res = residual[ri]
            before = res[ci]
            if before <= 0:
                continue
            res[ci] = before - w
            if res[ci] <= 0:
                open_count[ri] -= 1
                if open_count[ri] == 0:
                    fire(heads[ri])
    return frozenset(true)


def nec_step(R, I) -> frozenset:
    """One application of the immediate-consequence operator of ``R``."""
    I = frozenset(I)
    out = set()
    for head, body in horn_rules(R):
        if all(bound <= wsum(I, lits) for bound, lits in body):
            out.add(head)
    return frozenset(out)


def least_model(R) -> frozenset:
    return horn_closure(list(horn_rules(R)))


def is_stable(P, M) -> bool:
    M = _check_subset(P, M)
    if not compst(P).satisfied_by(M):
        return False
    return least_model(reduce(P, M)) == M
