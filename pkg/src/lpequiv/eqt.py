"""The counter-example translation EQT(P, Q) and decoding of its models.

A stable model of ``EQT(P, Q)`` is a stable model ``M`` of ``P`` together
with the unique candidate ``N`` of ``Q`` agreeing with ``M`` on visible
atoms, the least model ``L`` of the reduct of ``Q`` relative to ``N``, and
a proof that ``N`` is not stable: either ``N != L`` (atom ``__d``) or ``L``
violates a compute statement of ``Q`` (atom ``__c``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BaseMismatchError, ReservedNameError
from .program import Basic, Choice, Compute, Constraint, Program, Weight
from .semantics import compst, is_stable

HID_PREFIX = "__h."
LM_PREFIX = "__lm."
BR_PREFIX = "__br."
C_ATOM, D_ATOM, E_ATOM = "__c", "__d", "__e"

REDUCT_MISMATCH = "reduct-mismatch"
COMPUTE_VIOLATION = "compute-violation"


@dataclass(frozen=True)
class RenamingMap:
    """Where the atoms of ``Q`` live inside the translation.

    ``vis`` sends a visible atom of ``Q`` to the same-named atom of ``P``;
    ``hid`` and ``lm`` send atoms of ``Q`` to their fresh copies.  ``br``
    lists the auxiliary atoms of linearised choice rules.
    """

    vis: dict
    hid: dict
    lm: dict
    c: int
    d: int
    e: int
    br: tuple = ()

    def inverse_hid(self):
        return {v: k for k, v in self.hid.items()}

    def inverse_lm(self):
        return {v: k for k, v in self.lm.items()}


@dataclass(frozen=True)
class CounterExample:
    """``M`` is over ``Hb(P)``; ``N`` and ``L`` are over ``Hb(Q)``."""

    M: frozenset
    N: frozenset
    L: frozenset
    reason: str
    extra: dict = field(default_factory=dict, compare=False)

    def lines(self, P, Q):
        from .textio import format_model

        return [
            f"M = {format_model(P, self.M)}",
            f"N = {format_model(Q, self.N)}",
            f"L = {format_model(Q, self.L)}",
            f"reason = {self.reason}",
        ]


def check_bases(P, Q):
    vp, vq = P.visible_names, Q.visible_names
    if vp != vq:
        raise BaseMismatchError(vp - vq, vq - vp)


def _renaming(P, Q, linear_choice):
    check_bases(P, Q)
    qname = Q.symbols.name
    fresh = []
    hid = {}
    lm = {}
    base = len(P.symbols)

    def new(name):
        fresh.append(name)
        return base + len(fresh) - 1

    for a in sorted(Q.hidden):
        hid[a] = new(HID_PREFIX + qname(a))
    for a in sorted(Q.hb):
        lm[a] = new(LM_PREFIX + qname(a))
    c, d, e = new(C_ATOM), new(D_ATOM), new(E_ATOM)
    br = ()
    if linear_choice:
        n_choice = sum(1 for r in Q.rules if isinstance(r, Choice))
        br = tuple(new(f"{BR_PREFIX}{k}") for k in range(1, n_choice + 1))
    clash = set(fresh) & (set(P.symbols.names) | set(Q.symbols.names))
    if clash:
        raise ReservedNameError(
            "atom names collide with generated atoms: " + ", ".join(sorted(clash))
        )
    vis = {a: P.symbols.id(qname(a)) for a in Q.visible}
    rn = RenamingMap(vis, hid, lm, c, d, e, br)
    return rn, P.symbols.extend(fresh)


def _keep_or_hid(rn):
    """Visible atoms stay (as ``P``'s atom), hidden ones become their copy."""
    vis, hid = rn.vis, rn.hid
    return lambda a: vis[a] if a in vis else hid[a]


def tr_hid(Q: Program, rn: RenamingMap) -> list:
    """Rules computing the hidden part of ``Q`` over the copies ``__h.*``."""
    f = _keep_or_hid(rn)
    hid = Q.hidden
    out = []
    for r in Q.rules:
        if isinstance(r, Compute):
            continue
        if isinstance(r, Choice):
            hs = [rn.hid[h] for h in r.heads if h in hid]
            if hs:
                out.append(Choice(hs, [f(a) for a in r.pos], [f(b) for b in r.neg]))
            continue
        if r.head not in hid:
            continue
        h = rn.hid[r.head]
        if isinstance(r, Basic):
            out.append(Basic(h, [f(a) for a in r.pos], [f(b) for b in r.neg]))
        elif isinstance(r, Constraint):
            out.append(Constraint(h, r.bound, [f(a) for a in r.pos], [f(b) for b in r.neg]))
        else:
            out.append(Weight(
                h, r.bound, [(f(a), w) for a, w in r.pos], [(f(b), w) for b, w in r.neg]
            ))
    return out


def tr_lm(Q: Program, rn: RenamingMap, linear_choice: bool = True) -> list:
    """Rules computing the least model of the reduct of ``Q`` over ``__lm.*``."""
    lm = rn.lm
    neg = _keep_or_hid(rn)
    out = []
    k = 0
    for r in Q.rules:
        if isinstance(r, Compute):
            continue
        if isinstance(r, Choice):
            neg_lits = [neg(b) for b in r.neg]
            pos = [lm[a] for a in r.pos]
            own = [neg(h) for h in r.heads]
            if linear_choice:
                b_r = rn.br[k]
                k += 1
                out.extend(Basic(lm[h], [o, b_r]) for h, o in zip(r.heads, own))
                out.append(Basic(b_r, pos, neg_lits))
            else:
                out.extend(Basic(lm[h], pos + [o], neg_lits) for h, o in zip(r.heads, own))
        elif isinstance(r, Basic):
            out.append(Basic(lm[r.head], [lm[a] for a in r.pos], [neg(b) for b in r.neg]))
        elif isinstance(r, Constraint):
            out.append(Constraint(
                lm[r.head], r.bound, [lm[a] for a in r.pos], [neg(b) for b in r.neg]
            ))
        else:
            out.append(Weight(
                lm[r.head], r.bound,
                [(lm[a], w) for a, w in r.pos], [(neg(b), w) for b, w in r.neg],
            ))
    return out


def unstable(Q: Program, rn: RenamingMap) -> list:
    """Rules deriving ``__e`` when the candidate ``N`` is not a stable model of ``Q``."""
    c, d, e, lm = rn.c, rn.d, rn.e, rn.lm
    out = []
    for a in sorted(Q.visible):
        out.append(Basic(d, [rn.vis[a]], [lm[a]]))
        out.append(Basic(d, [lm[a]], [rn.vis[a]]))
    for a in sorted(Q.hidden):
        out.append(Basic(d, [rn.hid[a]], [lm[a]]))
        out.append(Basic(d, [lm[a]], [rn.hid[a]]))
    cs = compst(Q)
    for a in sorted(cs.pos):
        out.append(Basic(c, [], [lm[a], d]))
    for b in sorted(cs.neg):
        out.append(Basic(c, [lm[b]], [d]))
    out.append(Basic(e, [c]))
    out.append(Basic(e, [d]))
    out.append(Compute([e]))
    return out


def eqt(P: Program, Q: Program, linear_choice: bool = True):
    """Build ``EQT(P, Q)``; returns the translation and its renaming map.

    Visible bases are compared by name.  Every atom of the translation is
    visible.
    """
    rn, symbols = _renaming(P, Q, linear_choice)
    rules = list(P.rules) + tr_hid(Q, rn) + tr_lm(Q, rn, linear_choice) + unstable(Q, rn)
    hb = P.hb | frozenset(rn.hid.values()) | frozenset(rn.lm.values())
    hb |= {rn.c, rn.d, rn.e} | frozenset(rn.br)
    return Program(tuple(rules), symbols, hb, frozenset()), rn


def decode(K, rn: RenamingMap, P: Program, Q: Program, translation=None) -> CounterExample:
    """Read the counter-example encoded by a stable model ``K`` of the translation.

    When ``translation`` is given, ``K`` is first checked to be one of its
    stable models.
    """
    K = frozenset(K)
    if translation is not None and not is_stable(translation, K):
        raise ValueError("interpretation is not a stable model of the translation")
    M = K & P.hb
    to_q = {p: q for q, p in rn.vis.items()}
    N = frozenset(to_q[a] for a in M & P.visible)
    N |= frozenset(a for a, x in rn.hid.items() if x in K)
    L = frozenset(a for a, x in rn.lm.items() if x in K)
    reason = REDUCT_MISMATCH if rn.d in K else COMPUTE_VIOLATION
    return CounterExample(M, N, L, reason)
