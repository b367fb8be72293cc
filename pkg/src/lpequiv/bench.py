"""Deterministic generators for benchmark and test programs.

Covers the n-queens encodings, random 3-SAT programs, the even-subsets
family, random smodels programs and random weight constraint programs,
plus seeded rule shuffling and rule dropping.
"""

from __future__ import annotations

import itertools
import random

from .program import (
    Basic,
    Choice,
    Compute,
    Constraint,
    SymbolTable,
    Weight,
    build_program,
)

QUEENS_VARIANTS = ("x1", "x2", "y")


class _Builder:
    def __init__(self):
        self.ids = {}
        self.rules = []

    def __call__(self, name):
        return self.ids.setdefault(name, len(self.ids))

    def add(self, rule):
        self.rules.append(rule)

    def program(self, hidden=None, extra=()):
        extra_ids = [self(n) for n in extra]
        symbols = SymbolTable(tuple(sorted(self.ids, key=self.ids.get)))
        hidden_ids = None if hidden is None else [self(n) for n in hidden]
        return build_program(self.rules, symbols, None, hidden_ids, extra_ids)


def _q(x, y):
    return f"q({x},{y})"


def _negq(x, y):
    return f"negq({x},{y})"


def gen_queens(variant: str, n: int):
    """Ground n-queens program in one of three equivalent encodings.

    ``x1`` places one queen per column with basic rules over hidden
    ``negq`` atoms, ``x2`` uses choice rules with exactly-one guards and
    ``y`` places one queen per row.  Integrity constraints derive the
    visible atom ``false``, which a ``compute { not false }`` excludes.
    """
    if variant not in QUEENS_VARIANTS:
        raise ValueError(f"unknown queens variant {variant!r}")
    if n < 1:
        raise ValueError("n must be positive")
    b = _Builder()
    d = range(1, n + 1)
    false = b("false")
    hidden = []

    if variant == "x1":
        for x, y, y2 in itertools.product(d, d, d):
            if y2 != y:
                b.add(Basic(b(_negq(x, y2)), [b(_q(x, y))]))
        for x, y in itertools.product(d, d):
            b.add(Basic(b(_q(x, y)), [], [b(_negq(x, y))] + [b(_q(x, y2)) for y2 in d if y2 != y]))
        hidden = [_negq(x, y) for x, y in itertools.product(d, d)]
    elif variant == "x2":
        for x in d:
            b.add(Choice([b(_q(x, y)) for y in d]))
            for y, y2 in itertools.combinations(d, 2):
                b.add(Basic(false, [b(_q(x, y)), b(_q(x, y2))]))
            b.add(Constraint(false, n, [], [b(_q(x, y)) for y in d]))
    else:
        for x, y, x2 in itertools.product(d, d, d):
            if x2 != x:
                b.add(Basic(b(_negq(x2, y)), [b(_q(x, y))]))
        for x, y in itertools.product(d, d):
            b.add(Basic(b(_q(x, y)), [], [b(_negq(x, y))] + [b(_q(x2, y)) for x2 in d if x2 != x]))
        hidden = [_negq(x, y) for x, y in itertools.product(d, d)]

    # same row for column-wise placement, same column for row-wise
    for x, y, x1 in itertools.product(d, d, d):
        if x1 != x:
            if variant == "y":
                b.add(Basic(false, [b(_q(y, x)), b(_q(y, x1))]))
            else:
                b.add(Basic(false, [b(_q(x, y)), b(_q(x1, y))]))
    for x, y, x1, y1 in itertools.product(d, d, d, d):
        if x != x1 and y != y1 and abs(x - x1) == abs(y - y1):
            b.add(Basic(false, [b(_q(x, y)), b(_q(x1, y1))]))
    b.add(Compute([], [false]))
    return b.program(hidden=hidden, extra=[_q(x, y) for x, y in itertools.product(d, d)])


def random_3cnf(v: int, c: int, seed):
    """``c`` clauses of three literals ``(var, positive)`` over vars ``1..v``."""
    rng = random.Random(seed)
    clauses = []
    for _ in range(c):
        vars_ = rng.sample(range(1, v + 1), 3) if v >= 3 else [rng.randint(1, v) for _ in range(3)]
        clauses.append([(x, rng.random() < 0.5) for x in vars_])
    return clauses


def gen_3sat(v: int, c: int, seed, plain: bool = False):
    """Random 3-SAT instance as a program.

    Each clause becomes ``u :- f1, f2, f3`` where ``fi`` is ``p`` for a
    negative literal and ``not p`` for a positive one.  In plain mode the
    program is fully visible and ``compute { not u }`` keeps the
    satisfying assignments.  Otherwise ``s :- not u`` and
    ``x :- s, not x`` are added with ``u, s, x`` hidden, so stable models
    are exactly the falsifying assignments.
    """
    b = _Builder()
    names = [f"p{i}" for i in range(1, v + 1)]
    for name in names:
        b.add(Choice([b(name)]))
    u = b("u")
    for clause in random_3cnf(v, c, seed):
        pos = [b(names[x - 1]) for x, positive in clause if not positive]
        neg = [b(names[x - 1]) for x, positive in clause if positive]
        b.add(Basic(u, pos, neg))
    if plain:
        b.add(Compute([], [u]))
        return b.program(extra=names)
    s, x = b("s"), b("x")
    b.add(Basic(s, [], [u]))
    b.add(Basic(x, [s], [x]))
    return b.program(hidden=["u", "s", "x"], extra=names)


def gen_even_subsets(which: str, n: int):
    """Programs accepting the even-cardinality subsets of ``bit1..bitn``.

    ``p`` lists one rule per odd subset; ``q`` tracks parity with a chain
    of hidden ``odd_i`` atoms.  Only the bits are visible.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be a positive odd number")
    b = _Builder()
    bits = [b(f"bit{i}") for i in range(1, n + 1)]
    b.add(Choice(bits))
    odd = b("odd")
    if which == "p":
        for mask in range(1 << n):
            if bin(mask).count("1") % 2:
                pos = [bits[i] for i in range(n) if mask >> i & 1]
                neg = [bits[i] for i in range(n) if not mask >> i & 1]
                b.add(Basic(odd, pos, neg))
        hidden = ["odd"]
    elif which == "q":
        chain = [b(f"odd{i}") for i in range(1, n + 1)]
        b.add(Basic(chain[0], [bits[0]]))
        for i in range(1, n):
            b.add(Basic(chain[i], [bits[i]], [chain[i - 1]]))
            b.add(Basic(chain[i], [chain[i - 1]], [bits[i]]))
        b.add(Basic(odd, [chain[-1]]))
        hidden = ["odd"] + [f"odd{i}" for i in range(1, n + 1)]
    else:
        raise ValueError(f"unknown even-subsets program {which!r}")
    b.add(Compute([], [odd]))
    return b.program(hidden=hidden)


def _shuffled(rng, seq):
    seq = list(seq)
    rng.shuffle(seq)
    return seq


def shuffle(P, seed):
    """Permute rules and the literals inside each rule; seed 0 is the identity."""
    if seed == 0:
        return P
    rng = random.Random(seed)
    out = []
    for r in _shuffled(rng, P.rules):
        if isinstance(r, Basic):
            r = Basic(r.head, _shuffled(rng, r.pos), _shuffled(rng, r.neg))
        elif isinstance(r, Constraint):
            r = Constraint(r.head, r.bound, _shuffled(rng, r.pos), _shuffled(rng, r.neg))
        elif isinstance(r, Choice):
            r = Choice(_shuffled(rng, r.heads), _shuffled(rng, r.pos), _shuffled(rng, r.neg))
        elif isinstance(r, Weight):
            r = Weight(r.head, r.bound, _shuffled(rng, r.pos), _shuffled(rng, r.neg))
        else:
            r = Compute(_shuffled(rng, r.pos), _shuffled(rng, r.neg))
        out.append(r)
    return P.with_rules(out)


def drop_rules(P, k: int, seed):
    """Remove ``k`` randomly chosen rules, keeping both Herbrand bases."""
    rng = random.Random(seed)
    gone = set(rng.sample(range(len(P.rules)), min(k, len(P.rules))))
    return P.with_rules(r for i, r in enumerate(P.rules) if i not in gone)


# -- random corpora for property testing


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_rule(rng, n_atoms, kinds=("basic", "constraint", "choice", "weight")):
    def some(k):
        return [rng.randrange(n_atoms) for _ in range(rng.randint(0, k))]

    kind = rng.choice(kinds)
    pos, neg = some(2), some(2)
    if kind == "basic":
        return Basic(rng.randrange(n_atoms), pos, neg)
    if kind == "constraint":
        return Constraint(rng.randrange(n_atoms), rng.randint(0, 3), pos, neg)
    if kind == "choice":
        return Choice([rng.randrange(n_atoms) for _ in range(rng.randint(1, 2))], pos, neg)
    return Weight(
        rng.randrange(n_atoms),
        rng.randint(0, 5),
        [(a, rng.randint(0, 3)) for a in pos],
        [(b, rng.randint(0, 3)) for b in neg],
    )


def gen_random_program(
    seed,
    n_atoms: int = 6,
    n_rules: int = 6,
    n_hidden: int = 0,
    compute: float = 0.3,
    kinds=("basic", "constraint", "choice", "weight"),
    names=None,
):
    """Random program over atoms ``a0..a{n-1}``, all in the Herbrand base.

    The last ``n_hidden`` atoms are hidden.  With probability ``compute``
    a random compute statement is appended.
    """
    rng = _rng(seed)
    names = list(names or (f"a{i}" for i in range(n_atoms)))
    rules = [random_rule(rng, n_atoms, kinds) for _ in range(n_rules)]
    if rng.random() < compute:
        pos = [rng.randrange(n_atoms) for _ in range(rng.randint(0, 1))]
        neg = [rng.randrange(n_atoms) for _ in range(rng.randint(0, 2))]
        rules.append(Compute(pos, neg))
    hidden = list(range(n_atoms - n_hidden, n_atoms))
    return build_program(rules, SymbolTable(names), None, hidden, range(n_atoms))


def mutate(P, seed):
    """A program that is often, but not always, equivalent to ``P``."""
    rng = _rng(seed)
    n = len(P.symbols)
    choice = rng.randrange(4)
    rules = list(P.rules)
    if choice == 0 and rules:
        del rules[rng.randrange(len(rules))]
    elif choice == 1:
        rules.insert(rng.randrange(len(rules) + 1), random_rule(rng, n))
    elif choice == 2 and rules:
        # duplicate a rule through a fresh-looking copy: semantics unchanged
        rules.append(rules[rng.randrange(len(rules))])
    else:
        return shuffle(P, rng.randrange(1, 1 << 30))
    return P.with_rules(rules)


def gen_random_wcp(seed, n_atoms: int = 4, n_rules: int = 3, n_hidden: int = 0):
    """Random weight constraint program over ``a0..a{n-1}``."""
    from .wcp import WCRule, WeightConstraint, build_wcp

    rng = _rng(seed)

    def constraint():
        pos = [(rng.randrange(n_atoms), rng.randint(0, 2)) for _ in range(rng.randint(0, 2))]
        neg = [(rng.randrange(n_atoms), rng.randint(0, 2)) for _ in range(rng.randint(0, 2))]
        lower = rng.randint(0, 3)
        upper = None if rng.random() < 0.4 else lower + rng.randint(0, 3)
        return WeightConstraint(lower, upper, pos, neg)

    rules = [WCRule(constraint(), [constraint() for _ in range(rng.randint(0, 2))])
             for _ in range(n_rules)]
    names = SymbolTable(tuple(f"a{i}" for i in range(n_atoms)))
    hidden = list(range(n_atoms - n_hidden, n_atoms))
    return build_wcp(rules, names, None, hidden, range(n_atoms))

