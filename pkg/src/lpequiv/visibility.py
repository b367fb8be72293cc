"""Hidden parts of programs, the enough-visible-atoms (EVA) property and
separability of stable models."""

from __future__ import annotations

import enum
import itertools

from .errors import CapExceededError
from .program import Basic, Choice, Compute, Constraint, Program, Weight
from .search import enumerate_models
from .semantics import wsum

EVA_CAP = 20


class EvaStatus(enum.Enum):
    GUARANTEED = "guaranteed"
    UNKNOWN = "unknown"


def _visible_holds(Iv, vis, pos, neg):
    return all(a in Iv for a in pos if a in vis) and not any(b in Iv for b in neg if b in vis)


def eval_hidden(P: Program, Iv) -> Program:
    """Partially evaluate ``P`` for a visible interpretation ``Iv``.

    The result keeps only rules with hidden heads, evaluates visible body
    literals against ``Iv`` and drops compute statements.  It shares the
    symbol table of ``P``; its Herbrand base is ``Hbh(P)``, all visible.
    """
    Iv = frozenset(Iv)
    if not Iv <= P.visible:
        raise ValueError("interpretation is not a subset of the visible base")
    vis, hid = P.visible, P.hidden
    out = []
    for r in P.rules:
        if isinstance(r, Compute):
            continue
        if isinstance(r, Choice):
            hs = [h for h in r.heads if h in hid]
            if hs and _visible_holds(Iv, vis, r.pos, r.neg):
                out.append(Choice(hs, [a for a in r.pos if a in hid], [b for b in r.neg if b in hid]))
            continue
        if r.head not in hid:
            continue
        if isinstance(r, Basic):
            if _visible_holds(Iv, vis, r.pos, r.neg):
                out.append(Basic(r.head, [a for a in r.pos if a in hid], [b for b in r.neg if b in hid]))
        elif isinstance(r, Constraint):
            # literals are counted once per distinct atom, as in the rule itself
            got = sum(1 for a in r.pos if a in vis and a in Iv)
            got += sum(1 for b in r.neg if b in vis and b not in Iv)
            out.append(Constraint(
                r.head, max(0, r.bound - got),
                [a for a in r.pos if a in hid], [b for b in r.neg if b in hid],
            ))
        else:
            got = wsum(
                Iv,
                [(a, w) for a, w in r.pos if a in vis],
                [(b, w) for b, w in r.neg if b in vis],
            )
            out.append(Weight(
                r.head, max(0, r.bound - got),
                [(a, w) for a, w in r.pos if a in hid],
                [(b, w) for b, w in r.neg if b in hid],
            ))
    return Program(tuple(out), P.symbols, hid, frozenset())


def _visible_subsets(P, cap):
    vis = sorted(P.visible)
    if len(vis) > cap:
        raise CapExceededError(f"{len(vis)} visible atoms exceed the EVA cap {cap}")
    for mask in range(1 << len(vis)):
        yield frozenset(a for i, a in enumerate(vis) if mask >> i & 1)


def has_enough_visible_exact(P: Program, cap: int = EVA_CAP) -> bool:
    """Whether every hidden part of ``P`` has exactly one stable model."""
    if not P.hidden:
        return True
    for Iv in _visible_subsets(P, cap):
        if sum(1 for _ in itertools.islice(enumerate_models(eval_hidden(P, Iv)), 2)) != 1:
            return False
    return True


def hidden_dependencies(P: Program) -> dict:
    """Signed dependency graph over hidden atoms: ``h -> {(a, positive)}``.

    Every non-choice rule with a hidden head contributes edges to the hidden
    atoms of its body, whatever the visible atoms might evaluate to.
    """
    hid = P.hidden
    graph = {a: set() for a in hid}
    for r in P.rules:
        if isinstance(r, (Choice, Compute)) or r.head not in hid:
            continue
        if isinstance(r, Weight):
            pos = [a for a, _ in r.pos]
            neg = [b for b, _ in r.neg]
        else:
            pos, neg = r.pos, r.neg
        graph[r.head].update((a, True) for a in pos if a in hid)
        graph[r.head].update((b, False) for b in neg if b in hid)
    return graph


def strongly_connected_components(nodes, succ) -> list:
    """Tarjan's algorithm without recursion; returns a list of node lists."""
    index, low, on_stack = {}, {}, set()
    stack, components = [], []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    components.append(comp)
    return components


def has_enough_visible_overapprox(P: Program) -> EvaStatus:
    """Sufficient syntactic test for EVA.

    Guaranteed when no hidden atom heads a choice rule and no strongly
    connected component of the hidden dependency graph contains a
    negative edge, so every hidden part is stratified.
    """
    hid = P.hidden
    for r in P.rules:
        if isinstance(r, Choice) and any(h in hid for h in r.heads):
            return EvaStatus.UNKNOWN
    graph = hidden_dependencies(P)
    comps = strongly_connected_components(
        sorted(graph), lambda a: sorted(b for b, _ in graph[a])
    )
    where = {a: i for i, comp in enumerate(comps) for a in comp}
    for h, edges in graph.items():
        for b, positive in edges:
            if not positive and where[b] == where[h]:
                return EvaStatus.UNKNOWN
    return EvaStatus.GUARANTEED


def is_separable(P: Program) -> bool:
    """Whether distinct stable models have distinct visible projections."""
    seen = set()
    for M in enumerate_models(P):
        v = M & P.visible
        if v in seen:
            return False
        seen.add(v)
    return True
