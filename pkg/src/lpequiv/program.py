"""Ground smodels programs: symbol tables, the five rule forms and the
program triple ``(rules, visible base, hidden base)``.

Atoms are dense non-negative integers indexing a :class:`SymbolTable`.
Interpretations are ``frozenset`` objects of atom ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional, Union

from .errors import DeclarationError

MAX_NATURAL = 2**63 - 1

Interpretation = frozenset


def _natural(value, what):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{what} must be a natural number, got {value!r}")
    if value > MAX_NATURAL:
        raise ValueError(f"{what} {value} exceeds 2^63-1")
    return value


def _atoms(seq):
    # sets of atoms keep first-occurrence order for deterministic printing
    return tuple(dict.fromkeys(seq))


def _weighted(seq):
    out = []
    for atom, weight in seq:
        out.append((atom, _natural(weight, "weight")))
    return tuple(out)


@dataclass(frozen=True)
class SymbolTable:
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise DeclarationError("duplicate atom names in symbol table")

    @cached_property
    def _index(self):
        return {name: i for i, name in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def id(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DeclarationError(f"unknown atom {name!r}") from None

    def name(self, atom: int) -> str:
        return self.names[atom]

    def extend(self, names: Iterable[str]) -> "SymbolTable":
        return SymbolTable(self.names + tuple(names))


@dataclass(frozen=True)
class Basic:
    """``head :- pos, not neg.``"""

    head: int
    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pos", _atoms(self.pos))
        object.__setattr__(self, "neg", _atoms(self.neg))


@dataclass(frozen=True)
class Constraint:
    """``head :- bound { pos, not neg }.``"""

    head: int
    bound: int
    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        _natural(self.bound, "bound")
        object.__setattr__(self, "pos", _atoms(self.pos))
        object.__setattr__(self, "neg", _atoms(self.neg))


@dataclass(frozen=True)
class Choice:
    """``{ heads } :- pos, not neg.``"""

    heads: tuple
    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "heads", _atoms(self.heads))
        if not self.heads:
            raise ValueError("choice rule needs at least one head atom")
        object.__setattr__(self, "pos", _atoms(self.pos))
        object.__setattr__(self, "neg", _atoms(self.neg))


@dataclass(frozen=True)
class Weight:
    """``head :- bound [ a=w, not b=w ].``

    ``pos`` and ``neg`` are sequences of ``(atom, weight)`` pairs; repeated
    atoms are allowed and each occurrence counts separately.
    """

    head: int
    bound: int
    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        _natural(self.bound, "bound")
        object.__setattr__(self, "pos", _weighted(self.pos))
        object.__setattr__(self, "neg", _weighted(self.neg))


@dataclass(frozen=True)
class Compute:
    """``compute { pos, not neg }.``"""

    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pos", _atoms(self.pos))
        object.__setattr__(self, "neg", _atoms(self.neg))


Rule = Union[Basic, Constraint, Choice, Weight, Compute]


def heads(rule) -> tuple:
    if isinstance(rule, Choice):
        return rule.heads
    if isinstance(rule, Compute):
        return ()
    return (rule.head,)


def body_atoms(rule) -> tuple:
    if isinstance(rule, Weight):
        return tuple(a for a, _ in rule.pos) + tuple(b for b, _ in rule.neg)
    return tuple(rule.pos) + tuple(rule.neg)


def rule_atoms(rule) -> tuple:
    return heads(rule) + body_atoms(rule)


def map_atoms(rule, f: Callable[[int], object]):
    """Return ``rule`` with every atom replaced by ``f(atom)``."""
    if isinstance(rule, Basic):
        return Basic(f(rule.head), [f(a) for a in rule.pos], [f(b) for b in rule.neg])
    if isinstance(rule, Constraint):
        return Constraint(
            f(rule.head), rule.bound, [f(a) for a in rule.pos], [f(b) for b in rule.neg]
        )
    if isinstance(rule, Choice):
        return Choice(
            [f(h) for h in rule.heads], [f(a) for a in rule.pos], [f(b) for b in rule.neg]
        )
    if isinstance(rule, Weight):
        return Weight(
            f(rule.head),
            rule.bound,
            [(f(a), w) for a, w in rule.pos],
            [(f(b), w) for b, w in rule.neg],
        )
    if isinstance(rule, Compute):
        return Compute([f(a) for a in rule.pos], [f(b) for b in rule.neg])
    raise TypeError(f"not a rule: {rule!r}")


class _Bases:
    """Visible/hidden bookkeeping shared by smodels programs and WCPs."""

    symbols: SymbolTable
    visible: frozenset
    hidden: frozenset

    def _check_bases(self):
        object.__setattr__(self, "visible", frozenset(self.visible))
        object.__setattr__(self, "hidden", frozenset(self.hidden))
        if self.visible & self.hidden:
            raise DeclarationError("visible and hidden bases overlap")
        n = len(self.symbols)
        for a in self.visible | self.hidden:
            if not 0 <= a < n:
                raise DeclarationError(f"atom id {a} is not in the symbol table")
        stray = self.occurring - self.hb
        if stray:
            raise DeclarationError(
                "atoms occur in rules but not in the Herbrand base: "
                + ", ".join(sorted(self.symbols.name(a) for a in stray))
            )

    @property
    def hb(self) -> frozenset:
        return self.visible | self.hidden

    @property
    def hba(self) -> frozenset:
        return self.hb - self.occurring

    def name(self, atom: int) -> str:
        return self.symbols.name(atom)

    def names(self, atoms) -> frozenset:
        return frozenset(self.symbols.name(a) for a in atoms)

    def atoms(self, names) -> frozenset:
        return frozenset(self.symbols.id(n) for n in names)

    @property
    def visible_names(self) -> frozenset:
        return self.names(self.visible)

    @property
    def hidden_names(self) -> frozenset:
        return self.names(self.hidden)


@dataclass(frozen=True)
class Program(_Bases):
    rules: tuple
    symbols: SymbolTable
    visible: frozenset
    hidden: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        self._check_bases()

    @cached_property
    def occurring(self) -> frozenset:
        out = set()
        for r in self.rules:
            out.update(rule_atoms(r))
        return frozenset(out)

    def with_rules(self, rules) -> "Program":
        """Same symbol table and bases, different rules."""
        return Program(tuple(rules), self.symbols, self.visible, self.hidden)

    def structure(self):
        """Name-level view used for structural comparison of programs."""
        name = self.symbols.name
        return (
            tuple(map_atoms(r, name) for r in self.rules),
            self.visible_names,
            self.hidden_names,
        )


def build_program(
    rules,
    symbols: SymbolTable,
    visible: Optional[Iterable[int]] = None,
    hidden: Optional[Iterable[int]] = None,
    extra: Iterable[int] = (),
) -> Program:
    """Assemble a program, applying the default visibility conventions.

    Without declarations every occurring atom (plus ``extra``) is visible.
    A hidden declaration makes the remaining atoms visible, a visible
    declaration makes the remaining atoms hidden.  Declared atoms that do
    not occur in any rule still belong to the Herbrand base.
    """
    rules = tuple(rules)
    n = len(symbols)
    occurring = set()
    for r in rules:
        occurring.update(rule_atoms(r))
    base = occurring | set(extra)
    for decl in (visible, hidden):
        for a in decl or ():
            if not 0 <= a < n:
                raise DeclarationError(f"declared atom id {a} is not in the symbol table")
    for a in base:
        if not 0 <= a < n:
            raise DeclarationError(f"atom id {a} is not in the symbol table")
    if visible is not None and hidden is not None:
        visible, hidden = frozenset(visible), frozenset(hidden)
        if visible & hidden:
            raise DeclarationError(
                "atoms declared both visible and hidden: "
                + ", ".join(sorted(symbols.name(a) for a in visible & hidden))
            )
        undeclared = base - visible - hidden
        if undeclared:
            raise DeclarationError(
                "atoms neither visible nor hidden: "
                + ", ".join(sorted(symbols.name(a) for a in undeclared))
            )
    elif hidden is not None:
        hidden = frozenset(hidden)
        visible = frozenset(base - hidden)
    elif visible is not None:
        visible = frozenset(visible)
        hidden = frozenset(base - visible)
    else:
        visible, hidden = frozenset(base), frozenset()
    return Program(rules, symbols, visible, hidden)


def _check_subset(P, I):
    I = frozenset(I)
    if not I <= P.hb:
        raise ValueError("interpretation is not a subset of the Herbrand base")
    return I


def project_visible(P, I) -> frozenset:
    return _check_subset(P, I) & P.visible


def project_hidden(P, I) -> frozenset:
    return _check_subset(P, I) & P.hidden
