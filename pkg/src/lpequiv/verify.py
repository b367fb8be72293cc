"""Deciders for visible equivalence of smodels programs.

* :func:`verify_translation` searches ``EQT(P, Q)`` and ``EQT(Q, P)`` for
  stable models; both programs need enough visible atoms.
* :func:`verify_naive` checks every stable model of one program against
  the other with an added compute statement.
* :func:`verify_oracle` compares, for each visible projection, how many
  stable models each program has.  Equal counts on every projection are
  exactly the condition for a projection-preserving bijection, so this is
  the ground-truth decider and makes no visibility assumption.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .eqt import (
    COMPUTE_VIOLATION,
    REDUCT_MISMATCH,
    CounterExample,
    decode,
    eqt,
)
from .errors import BaseMismatchError, CapExceededError
from .program import Compute
from .search import ORACLE_CAP, enumerate_models, enumerate_oracle, find_one
from .semantics import least_model, reduce
from .visibility import (
    EVA_CAP,
    EvaStatus,
    eval_hidden,
    has_enough_visible_exact,
    has_enough_visible_overapprox,
)

FIBER_COUNT = "fiber-count"
EVA_MODES = ("overapprox", "exact", "assume")

P_TO_Q, Q_TO_P = "P->Q", "Q->P"


@dataclass(frozen=True)
class Equivalent:
    exit_code = 0


@dataclass(frozen=True)
class NotEquivalent:
    """``witness.M`` is a stable model of the source side of ``direction``
    with no visibly matching stable model on the other side."""

    direction: str
    witness: CounterExample
    reverse: Optional[CounterExample] = None
    exit_code = 1

    def lines(self, P, Q):
        src, dst = (P, Q) if self.direction == P_TO_Q else (Q, P)
        out = [f"direction = {self.direction}"] + self.witness.lines(src, dst)
        if self.reverse is not None:
            out += [f"direction = {Q_TO_P}"] + self.reverse.lines(Q, P)
        return out


@dataclass(frozen=True)
class Inapplicable:
    why: str
    exit_code = 2


def _base_gate(P, Q):
    vp, vq = P.visible_names, Q.visible_names
    if vp != vq:
        return Inapplicable(str(BaseMismatchError(vp - vq, vq - vp)))
    return None


def candidate_witness(M, src, dst) -> CounterExample:
    """Counter-example data for a stable model ``M`` of ``src`` lacking a match in ``dst``.

    ``N`` agrees with ``M`` on visible atoms and takes the first stable
    model of the hidden part of ``dst`` (or nothing when there is none);
    ``L`` is the least model of the reduct of ``dst`` relative to ``N``.
    """
    Nv = dst.atoms(src.names(M & src.visible))
    Nh = find_one(eval_hidden(dst, Nv)) or frozenset()
    N = Nv | Nh
    L = least_model(reduce(dst, N))
    return CounterExample(M, N, L, REDUCT_MISMATCH if N != L else COMPUTE_VIOLATION)


def _eva_gate(P, Q, eva_mode, cap):
    if eva_mode not in EVA_MODES:
        raise ValueError(f"unknown EVA mode {eva_mode!r}")
    if eva_mode == "assume":
        warnings.warn("enough visible atoms assumed without a check", stacklevel=3)
        return None
    for side, R in (("first", P), ("second", Q)):
        if eva_mode == "overapprox" and has_enough_visible_overapprox(R) is EvaStatus.GUARANTEED:
            continue
        try:
            ok = has_enough_visible_exact(R, cap)
        except CapExceededError:
            return Inapplicable(
                f"{side} program: enough visible atoms not established "
                f"({len(R.visible)} visible atoms exceed the exact-check cap {cap})"
            )
        if not ok:
            return Inapplicable(f"{side} program does not have enough visible atoms")
    return None


def _translation_witness(src, dst, linear_choice):
    T, rn = eqt(src, dst, linear_choice)
    K = find_one(T)
    return None if K is None else decode(K, rn, src, dst)


def verify_translation(
    P,
    Q,
    eva_mode: str = "overapprox",
    both_directions: bool = False,
    linear_choice: bool = True,
    eva_cap: int = EVA_CAP,
):
    """Decide ``P`` and ``Q`` visibly equivalent by solving the two translations.

    In ``overapprox`` mode a program whose syntactic check is inconclusive
    is checked exactly when its visible base is within ``eva_cap``.
    """
    gate = _base_gate(P, Q) or _eva_gate(P, Q, eva_mode, eva_cap)
    if gate is not None:
        return gate
    forward = _translation_witness(P, Q, linear_choice)
    if forward is not None and not both_directions:
        return NotEquivalent(P_TO_Q, forward)
    backward = _translation_witness(Q, P, linear_choice)
    if forward is not None:
        return NotEquivalent(P_TO_Q, forward, backward)
    if backward is not None:
        return NotEquivalent(Q_TO_P, backward)
    return Equivalent()


def with_visible_compute(dst, names):
    """``dst`` plus a compute statement fixing its visible atoms to ``names``."""
    on = dst.atoms(names)
    return dst.with_rules(
        dst.rules + (Compute(sorted(on), sorted(dst.visible - on)),)
    )


def _naive_direction(src, dst):
    for M in enumerate_models(src):
        names = src.names(M & src.visible)
        if find_one(with_visible_compute(dst, names)) is None:
            return candidate_witness(M, src, dst)
    return None


def verify_naive(P, Q, both_directions: bool = False):
    """Cross-check every stable model of each program against the other.

    Sound for programs with enough visible atoms; no check is made here.
    """
    gate = _base_gate(P, Q)
    if gate is not None:
        return gate
    forward = _naive_direction(P, Q)
    if forward is not None and not both_directions:
        return NotEquivalent(P_TO_Q, forward)
    backward = _naive_direction(Q, P)
    if forward is not None:
        return NotEquivalent(P_TO_Q, forward, backward)
    if backward is not None:
        return NotEquivalent(Q_TO_P, backward)
    return Equivalent()


def _models(P, engine, cap):
    if engine == "subset":
        return list(enumerate_oracle(P, cap))
    if engine == "search":
        return list(enumerate_models(P))
    raise ValueError(f"unknown engine {engine!r}")


def fibers(P, models) -> dict:
    """Stable models grouped by their visible projection (as atom names)."""
    out = {}
    for M in models:
        out.setdefault(P.names(M & P.visible), []).append(M)
    return out


def _fiber_direction(fs, fd, src, dst):
    for key, ms in fs.items():
        others = fd.get(key, [])
        if len(ms) > len(others):
            if not others:
                return candidate_witness(ms[0], src, dst)
            N = others[0]
            w = CounterExample(ms[0], N, least_model(reduce(dst, N)), FIBER_COUNT)
            w.extra.update(src_count=len(ms), dst_count=len(others))
            return w
    return None


def verify_oracle(P, Q, engine: str = "search", cap: int = ORACLE_CAP, both_directions=False):
    """Ground-truth decider by fiber counting.

    ``engine="subset"`` enumerates all interpretations (bounded by ``cap``
    atoms per program); the default uses the backtracking enumerator,
    which yields the same model sets.
    """
    gate = _base_gate(P, Q)
    if gate is not None:
        return gate
    fp = fibers(P, _models(P, engine, cap))
    fq = fibers(Q, _models(Q, engine, cap))
    forward = _fiber_direction(fp, fq, P, Q)
    if forward is not None and not both_directions:
        return NotEquivalent(P_TO_Q, forward)
    backward = _fiber_direction(fq, fp, Q, P)
    if forward is not None:
        return NotEquivalent(P_TO_Q, forward, backward)
    if backward is not None:
        return NotEquivalent(Q_TO_P, backward)
    return Equivalent()


def fiber_counts(P, engine: str = "search", cap: int = ORACLE_CAP) -> Counter:
    return Counter({k: len(v) for k, v in fibers(P, _models(P, engine, cap)).items()})


__all__ = [
    "Equivalent",
    "NotEquivalent",
    "Inapplicable",
    "verify_translation",
    "verify_naive",
    "verify_oracle",
    "candidate_witness",
    "fiber_counts",
    "with_visible_compute",
]
