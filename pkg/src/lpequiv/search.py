"""Stable-model enumeration.

Two engines produce the same model sets:

* :func:`enumerate_oracle` tests every subset of the Herbrand base.
* :func:`enumerate_models` runs chronological backtracking over atom truth
  values with sound pruning (classical propagation, support, and an upper
  closure that falsifies atoms no completion can derive).  Every leaf is
  re-checked with :func:`~lpequiv.semantics.is_stable`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CapExceededError
from .program import Basic, Choice, Compute, Constraint, Weight
from .semantics import is_stable

ORACLE_CAP = 22

UNKNOWN, TRUE, FALSE = 0, 1, 2


@dataclass
class SearchStats:
    choice_points: int = 0
    models: int = 0


class ModelStream:
    """Lazy, single-consumer iterator over stable models with statistics."""

    def __init__(self, gen, stats):
        self._gen = gen
        self.stats = stats

    def __iter__(self):
        return self

    def __next__(self) -> frozenset:
        model = next(self._gen)
        self.stats.models += 1
        return model


def enumerate_oracle(P, cap: int = ORACLE_CAP) -> ModelStream:
    atoms = sorted(P.hb)
    if len(atoms) > cap:
        raise CapExceededError(f"{len(atoms)} atoms exceed the subset-enumeration cap {cap}")
    stats = SearchStats()

    def gen():
        for mask in range(1 << len(atoms)):
            M = frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
            if is_stable(P, M):
                yield M

    return ModelStream(gen(), stats)


def enumerate_models(P) -> ModelStream:
    stats = SearchStats()
    return ModelStream(_Search(P, stats).run(), stats)


def find_one(P) -> Optional[frozenset]:
    return next(enumerate_models(P), None)


class _Search:
    def __init__(self, P, stats):
        self.P = P
        self.stats = stats
        self.atoms = sorted(P.hb)
        local = {a: i for i, a in enumerate(self.atoms)}
        n = len(self.atoms)
        self.val = [UNKNOWN] * n
        self.trail = []
        self.queue = []

        # rule r: heads, literals [(atom, positive, weight)], bound, is_choice
        self.r_heads, self.r_lits, self.r_bound, self.r_choice = [], [], [], []
        self.forced = []
        for rule in P.rules:
            if isinstance(rule, Compute):
                self.forced += [(local[a], TRUE) for a in rule.pos]
                self.forced += [(local[b], FALSE) for b in rule.neg]
                continue
            if isinstance(rule, Weight):
                lits = [(local[a], True, w) for a, w in rule.pos]
                lits += [(local[b], False, w) for b, w in rule.neg]
            else:
                lits = [(local[a], True, 1) for a in rule.pos]
                lits += [(local[b], False, 1) for b in rule.neg]
            if isinstance(rule, Choice):
                hs = [local[h] for h in rule.heads]
                bound = len(lits)
            else:
                hs = [local[rule.head]]
                bound = rule.bound if isinstance(rule, (Constraint, Weight)) else len(lits)
                assert isinstance(rule, (Basic, Constraint, Weight))
            self.r_heads.append(hs)
            self.r_lits.append(lits)
            self.r_bound.append(bound)
            self.r_choice.append(isinstance(rule, Choice))

        self.body_occ = [[] for _ in range(n)]
        self.head_occ = [[] for _ in range(n)]
        self.pos_watch = defaultdict(list)
        for r, lits in enumerate(self.r_lits):
            seen = set()
            for a, positive, w in lits:
                if a not in seen:
                    self.body_occ[a].append(r)
                    seen.add(a)
                if positive and w > 0:
                    self.pos_watch[a].append((r, w))
            for h in self.r_heads[r]:
                self.head_occ[h].append(r)

    # -- assignment

    def _assign(self, a, v):
        cur = self.val[a]
        if cur == v:
            return True
        if cur != UNKNOWN:
            return False
        self.val[a] = v
        self.trail.append(a)
        self.queue.append(a)
        return True

    def _lit_assign(self, lit, make_true):
        a, positive, _ = lit
        return self._assign(a, TRUE if positive == make_true else FALSE)

    def _undo(self, mark):
        val, trail = self.val, self.trail
        while len(trail) > mark:
            val[trail.pop()] = UNKNOWN
        self.queue.clear()

    # -- propagation

    def _sums(self, r):
        val = self.val
        true_sum = undef_sum = 0
        for a, positive, w in self.r_lits[r]:
            v = val[a]
            if v == UNKNOWN:
                undef_sum += w
            elif (v == TRUE) == positive:
                true_sum += w
        return true_sum, undef_sum

    def _body_false(self, r):
        t, u = self._sums(r)
        return t + u < self.r_bound[r]

    def _check_rule(self, r):
        bound = self.r_bound[r]
        t, u = self._sums(r)
        val = self.val
        if t + u < bound:
            for h in self.r_heads[r]:
                if val[h] != FALSE and not self._check_support(h):
                    return False
            return True
        if self.r_choice[r]:
            return True
        h = self.r_heads[r][0]
        if t >= bound:
            return self._assign(h, TRUE)
        if val[h] == FALSE:
            # body must stay false: no unknown literal may complete it
            for lit in self.r_lits[r]:
                if val[lit[0]] == UNKNOWN and t + lit[2] >= bound:
                    if not self._lit_assign(lit, False):
                        return False
        elif val[h] == TRUE:
            return self._check_support(h)
        return True

    def _check_support(self, h):
        val = self.val
        candidate = None
        for r in self.head_occ[h]:
            if not self._body_false(r):
                if candidate is not None:
                    return True
                candidate = r
        if candidate is None:
            return self._assign(h, FALSE)
        if val[h] != TRUE:
            return True
        # sole supporting rule: every literal needed to reach the bound must hold
        r = candidate
        t, u = self._sums(r)
        bound = self.r_bound[r]
        for lit in self.r_lits[r]:
            if val[lit[0]] == UNKNOWN and t + u - lit[2] < bound:
                if not self._lit_assign(lit, True):
                    return False
        return True

    def _unit(self):
        queue = self.queue
        val = self.val
        while queue:
            a = queue.pop()
            for r in self.body_occ[a]:
                if not self._check_rule(r):
                    return False
            for r in self.head_occ[a]:
                if not self._check_rule(r):
                    return False
            if val[a] == TRUE and not self._check_support(a):
                return False
        return True

    def _upper_closure(self):
        """Atoms derivable when every undecided atom is optimistically assumed."""
        val = self.val
        residual = []
        derived = set()
        stack = []

        def fire(h):
            if h not in derived and val[h] != FALSE:
                derived.add(h)
                stack.append(h)

        for r, lits in enumerate(self.r_lits):
            need = self.r_bound[r]
            for a, positive, w in lits:
                if not positive and val[a] != TRUE:
                    need -= w
            residual.append(need)
            if need <= 0:
                for h in self.r_heads[r]:
                    fire(h)
        while stack:
            a = stack.pop()
            for r, w in self.pos_watch.get(a, ()):
                before = residual[r]
                residual[r] = before - w
                if before > 0 >= residual[r]:
                    for h in self.r_heads[r]:
                        fire(h)
        return derived

    def _propagate(self):
        while True:
            if not self._unit():
                self.queue.clear()
                return False
            closure = self._upper_closure()
            changed = False
            for a, v in enumerate(self.val):
                if a not in closure:
                    if v == TRUE:
                        return False
                    if v == UNKNOWN:
                        self._assign(a, FALSE)
                        changed = True
            if not changed:
                return True

    def _initial(self):
        for a, v in self.forced:
            if not self._assign(a, v):
                return False
        for r in range(len(self.r_lits)):
            if not self._check_rule(r):
                return False
        for a in range(len(self.atoms)):
            if self.val[a] != FALSE and not self._check_support(a):
                return False
        return self._propagate()

    def _next_unassigned(self):
        for a, v in enumerate(self.val):
            if v == UNKNOWN:
                return a
        return None

    def run(self) -> Iterator[frozenset]:
        if not self._initial():
            return
        frames = []
        while True:
            a = self._next_unassigned()
            if a is None:
                model = frozenset(
                    self.atoms[i] for i, v in enumerate(self.val) if v == TRUE
                )
                if is_stable(self.P, model):
                    yield model
                ok = False
            else:
                self.stats.choice_points += 1
                frames.append((len(self.trail), a))
                ok = self._assign(a, FALSE) and self._propagate()
            while not ok:
                if not frames:
                    return
                mark, a = frames.pop()
                self._undo(mark)
                ok = self._assign(a, TRUE) and self._propagate()
