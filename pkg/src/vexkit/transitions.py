"""Maximal grassmannian elements, transitions, and Stanley functions as Schur-P sums.

Schur P-functions are formal basis symbols: an expansion is a mapping from
strict partitions (as tuples) to integer coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import (
    Reflection,
    SignedPermutation,
    sp_apply_reflection,
    sp_descents,
    sp_length,
)
from .errors import BudgetExceededError, TransitionCountError
from .lyd import LabelledYoungDiagram, lyd_of_perm
from .triples import StrictPartition

DEFAULT_BUDGET = 10**6


class SchurPExpansion(Mapping[tuple[int, ...], int]):
    """Finite integer combination of ``P_λ``; zero coefficients are never stored."""

    def __init__(self, terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = ()):
        acc: Counter[tuple[int, ...]] = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = tuple(StrictPartition(tuple(lam)).parts)
            acc[lam] += int(c)
        self._terms = {lam: c for lam, c in acc.items() if c != 0}

    def __getitem__(self, lam: tuple[int, ...]) -> int:
        return self._terms[tuple(lam)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: SchurPExpansion) -> SchurPExpansion:
        return SchurPExpansion(list(self.items()) + list(other.items()))

    def scale(self, c: int) -> SchurPExpansion:
        return SchurPExpansion({lam: c * v for lam, v in self.items()})

    def __rmul__(self, c: int) -> SchurPExpansion:
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SchurPExpansion):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == SchurPExpansion(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms by partition in descending lexicographic order."""
        return sorted(self._terms.items(), reverse=True)

    def __repr__(self) -> str:
        return "SchurPExpansion(" + ", ".join(f"P{list(lam)}: {c}" for lam, c in self.sorted_terms()) + ")"


def max_grassmannian(lam: StrictPartition | Iterable[int]) -> SignedPermutation:
    """``w_λ``: barred parts in increasing order, then the unused positives."""
    parts = StrictPartition(tuple(lam)).parts
    if not parts:
        return SignedPermutation(())
    n = parts[0]
    rest = [x for x in range(1, n + 1) if x not in parts]
    return SignedPermutation(tuple(-x for x in parts) + tuple(rest))


def is_max_grassmannian(w: SignedPermutation) -> bool:
    return sp_descents(w) == {0}


def mg_shape(w: SignedPermutation) -> StrictPartition:
    if w.is_identity:
        return StrictPartition(())
    if not is_max_grassmannian(w):
        raise ValueError(f"{w} has a descent at a positive position")
    return StrictPartition(tuple(sorted((-x for x in w.window if x < 0), reverse=True)))


@dataclass(frozen=True)
class Transitions:
    m: int
    j: int
    targets: tuple[SignedPermutation, ...] = ()
    doubled: SignedPermutation | None = None

    @property
    def count(self) -> int:
        return len(self.targets) + (self.doubled is not None)


def transitions(w: SignedPermutation, extra: int = 1) -> Transitions | None:
    """Transitions of ``w``, or None when ``w`` has no descent at a positive position.

    Candidates ``w t_mj t_im`` (``i < m``) and ``w t_mj s_im`` (``1 <= i <= n + extra``)
    are kept when their length equals ``ℓ(w)``; ``w t_mj s_mm`` is reported
    separately as ``doubled``.
    """
    desc = sp_descents(w)
    if not desc or max(desc) == 0:
        return None
    m = max(desc)
    n = len(w.canonical)
    j = max(x for x in range(m + 1, n + 1) if w(m) > w(x))
    lw = sp_length(w)
    v = sp_apply_reflection(w, Reflection.t(m, j))
    assert sp_length(v) == lw - 1, f"ℓ(w t_mj) != ℓ(w) - 1 for w={w}"
    targets: list[SignedPermutation] = []
    for i in range(1, m):
        u = sp_apply_reflection(v, Reflection.t(i, m))
        if sp_length(u) == lw:
            targets.append(u)
    doubled = None
    for i in range(1, n + extra + 1):
        u = sp_apply_reflection(v, Reflection.s(i, m))
        if sp_length(u) != lw:
            continue
        if i == m:
            doubled = u
        else:
            targets.append(u)
    return Transitions(m, j, tuple(targets), doubled)


def unique_transition(w: SignedPermutation) -> SignedPermutation:
    tr = transitions(w)
    if tr is None:
        raise TransitionCountError(f"{w} is the identity or maximal grassmannian; it has no transitions")
    if tr.count != 1:
        raise TransitionCountError(f"{w} has {tr.count} transitions, expected exactly one")
    return tr.doubled if tr.doubled is not None else tr.targets[0]


def lemma_transition_lyd(y: LabelledYoungDiagram) -> LabelledYoungDiagram:
    """Replace the last occurrence of the largest label ``m > 0`` by ``m - 1``."""
    labels = list(y.labels)
    top = labels[0]
    if top == 0:
        raise ValueError("largest label is 0: the element is maximal grassmannian")
    r = max(i for i, m in enumerate(labels) if m == top)
    labels[r] = top - 1
    return LabelledYoungDiagram(y.shape, tuple(labels))


@dataclass
class StanleyMemo:
    """Memo table for :func:`stanley_h`; confine one table to one thread or process."""

    table: dict[tuple[int, ...], SchurPExpansion] = field(default_factory=dict)
    expanded: int = 0


def stanley_h(
    w: SignedPermutation, budget: int = DEFAULT_BUDGET, memo: StanleyMemo | None = None
) -> SchurPExpansion:
    """``H_w`` expanded in Schur P-functions by the transition recursion."""
    memo = StanleyMemo() if memo is None else memo

    def rec(x: SignedPermutation) -> SchurPExpansion:
        key = x.canonical
        hit = memo.table.get(key)
        if hit is not None:
            return hit
        memo.expanded += 1
        if memo.expanded > budget:
            raise BudgetExceededError(f"transition recursion exceeded {budget} nodes at w={x}")
        if x.is_identity:
            out = SchurPExpansion({(): 1})
        elif is_max_grassmannian(x):
            out = SchurPExpansion({mg_shape(x).parts: 1})
        else:
            tr = transitions(x)
            assert tr is not None
            out = SchurPExpansion()
            if tr.doubled is not None:
                out = out + rec(tr.doubled).scale(2)
            for u in tr.targets:
                out = out + rec(u)
        memo.table[key] = out
        return out

    return rec(w)


def vexillary_transition_ok(w: SignedPermutation) -> bool:
    """Unique transition whose diagram is the label replacement of ``w``'s."""
    try:
        u = unique_transition(w)
    except TransitionCountError:
        return False
    return lyd_of_perm(u) == lemma_transition_lyd(lyd_of_perm(w))
