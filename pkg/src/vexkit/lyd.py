"""Labelled Young diagrams: shifted strict shapes with labels on their SE corners.

Corner rows are derived from the shape, never stored: row ``k`` of the
shifted diagram of ``λ`` is a corner row when ``λ_k - λ_{k+1} >= 2`` or ``k``
is the last row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import inf
from typing import Iterator, Literal

from .core import (
    SignedPermutation,
    enumerate_group,
    sp_length,
    sp_longest,
    sp_multiply_simple,
)
from .errors import InvalidDiagramError, NotInsertableError, NotRemovableError, NotVexillaryError
from .triples import StrictPartition, Triple, perm_to_triple, triple_lambda, triple_to_perm


def corner_rows(shape: StrictPartition) -> tuple[int, ...]:
    s = len(shape)
    return tuple(k for k in range(1, s + 1) if k == s or shape.part(k) - shape.part(k + 1) >= 2)


@dataclass(frozen=True)
class LabelledYoungDiagram:
    shape: StrictPartition = field(default_factory=StrictPartition)
    labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        shape = self.shape if isinstance(self.shape, StrictPartition) else StrictPartition(tuple(self.shape))
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        rows = corner_rows(shape)
        if len(rows) != len(self.labels):
            raise InvalidDiagramError(
                f"shape {shape} has {len(rows)} corners but {len(self.labels)} labels were given"
            )
        lam = [shape.part(k) for k in rows]
        for i, (m, lk) in enumerate(zip(self.labels, lam)):
            if not 0 <= m < lk:
                raise InvalidDiagramError(f"label {m} in row {rows[i]} is outside [0, {lk})")
        for i in range(len(rows) - 1):
            m0, m1 = self.labels[i], self.labels[i + 1]
            if m0 < m1:
                raise InvalidDiagramError("labels must weakly decrease from top to bottom")
            if m0 - m1 > lam[i] - lam[i + 1]:
                raise InvalidDiagramError(
                    f"labels {m0}, {m1} in rows {rows[i]}, {rows[i + 1]} differ by more than the rim hook allows"
                )

    @property
    def rows(self) -> tuple[int, ...]:
        return corner_rows(self.shape)

    @property
    def corners(self) -> list[tuple[int, int]]:
        """``(row, label)`` pairs, top to bottom."""
        return list(zip(self.rows, self.labels))

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def dual_labels(self) -> tuple[int, ...]:
        return tuple(self.shape.part(k) - m - 1 for k, m in self.corners)

    def __str__(self) -> str:
        return f"{self.shape} labels {list(self.labels)}"


def lyd_from_triple(t: Triple) -> LabelledYoungDiagram:
    if not t.is_essential:
        raise InvalidDiagramError(f"triple {t} is not essential")
    shape = triple_lambda(t)
    y = LabelledYoungDiagram(shape, tuple(p - 1 for p in t.p))
    assert y.rows == t.k, (y.rows, t.k)
    return y


def lyd_to_triple(y: LabelledYoungDiagram) -> Triple:
    k = y.rows
    p = tuple(m + 1 for m in y.labels)
    q = tuple(y.shape.part(r) - m for r, m in y.corners)
    return Triple(k, p, q)


def lyd_of_perm(w: SignedPermutation) -> LabelledYoungDiagram:
    return lyd_from_triple(perm_to_triple(w))


def lyd_to_perm(y: LabelledYoungDiagram) -> SignedPermutation:
    return triple_to_perm(lyd_to_triple(y))


def lyd_dual(y: LabelledYoungDiagram) -> LabelledYoungDiagram:
    return LabelledYoungDiagram(y.shape, y.dual_labels)


def lyd_n(y: LabelledYoungDiagram) -> int:
    if not y.labels:
        return 0
    return max(max(m + k, l + k) for (k, m), l in zip(y.corners, y.dual_labels))


def _shape_with(parts: list[int]) -> StrictPartition:
    while parts and parts[-1] == 0:
        parts.pop()
    return StrictPartition(tuple(parts))


def removable_labels(y: LabelledYoungDiagram) -> set[int]:
    out = set()
    for k, m in y.corners:
        if y.labels.count(m) != 1:
            continue
        if m == 0 and y.shape.part(k) != 1:
            continue
        out.add(m)
    return out


def remove_label(y: LabelledYoungDiagram, m: int) -> LabelledYoungDiagram:
    """``Y \\ m``: delete the corner box labelled ``m`` and relabel."""
    count = y.labels.count(m)
    if count == 0:
        raise NotRemovableError(f"{m} is not a label of {y}")
    if count > 1:
        raise NotRemovableError(f"label {m} appears {count} times in {y}")
    k = y.rows[y.labels.index(m)]
    if m == 0 and y.shape.part(k) != 1:
        raise NotRemovableError(f"label 0 sits in row {k}, which has {y.shape.part(k)} boxes")
    old = dict(y.corners)
    parts = list(y.shape.parts)
    parts[k - 1] -= 1
    shape = _shape_with(parts)
    new: dict[int, int] = {}
    for r in corner_rows(shape):
        if r in old and r != k:
            new[r] = old[r]
        elif r == k:
            new[r] = m - 1
        elif r == k - 1:
            new[r] = m + 1
        else:  # pragma: no cover - removing one box only touches rows k-1 and k
            raise AssertionError(f"unexpected new corner in row {r}")
    return LabelledYoungDiagram(shape, tuple(new[r] for r in sorted(new)))


@dataclass(frozen=True)
class _Insertion:
    j: int
    case: Literal[1, 2, 3, 4]
    m: int


def _insertions(y: LabelledYoungDiagram) -> Iterator[_Insertion]:
    rows, labels, s = y.rows, y.labels, len(y.labels)

    def k_(i: int) -> int:
        return 0 if i == 0 else (rows[s - 1] + 1 if i == s + 1 else rows[i - 1])

    def m_(i: int) -> float:
        return inf if i == 0 else (-1 if i == s + 1 else labels[i - 1])

    def lam(i: int) -> float:
        return inf if i == 0 else (0 if i == s + 1 else y.shape.part(rows[i - 1]))

    if s == 0:
        # k_1 = k_0 + 1 = 1, so only the sentinel pair (j = 0) exists.
        yield _Insertion(0, 2, 0)
        return
    for j in range(s + 1):
        kd = k_(j + 1) - k_(j)
        ld = lam(j) - lam(j + 1)
        mj, mj1 = m_(j), m_(j + 1)
        if not mj - mj1 > 1:
            continue
        if kd > 1 and ld > kd + 1:
            lo = int(mj1) + 1
            hi = int(min(mj1 + kd, mj - 1))
            for m in range(lo, hi + 1):
                if mj - m <= ld + k_(j) - k_(j + 1):
                    yield _Insertion(j, 1, m)
        elif kd == 1 and ld > 2:
            yield _Insertion(j, 2, int(mj1) + 1)
        elif kd > 1 and ld == kd + 1:
            yield _Insertion(j, 3, int(mj) - 1)
        elif kd == 1 and ld == 2:
            if mj1 + 1 == mj - 1:
                yield _Insertion(j, 4, int(mj1) + 1)
        else:  # pragma: no cover - corner geometry forces ld >= kd + 1
            raise AssertionError(f"no insertion case applies at j={j} in {y}")


def insertable_labels(y: LabelledYoungDiagram) -> set[int]:
    found: dict[int, _Insertion] = {}
    for ins in _insertions(y):
        assert ins.m not in found, f"two insertion cases fire for m={ins.m} in {y}"
        found[ins.m] = ins
    return set(found)


def insert_label(y: LabelledYoungDiagram, m: int) -> LabelledYoungDiagram:
    """``Y ∪ m``: add a box labelled ``m`` in row ``k_j + 1``."""
    matches = [ins for ins in _insertions(y) if ins.m == m]
    if not matches:
        labels = list(y.labels)
        raise NotInsertableError(
            f"{m} is not insertable in {y}: no j with m_j > {m} > m_(j+1) (labels {labels}) "
            "satisfies any of the four insertion cases"
        )
    ins = matches[0]
    rows, s = y.rows, len(y.labels)
    kj = 0 if ins.j == 0 else rows[ins.j - 1]
    labels = dict(y.corners)
    if ins.case in (2, 4) and ins.j < s:
        del labels[rows[ins.j]]
    if ins.case in (3, 4) and ins.j > 0:
        del labels[kj]
    parts = list(y.shape.parts)
    if kj + 1 > len(parts):
        parts.append(1)
    else:
        parts[kj] += 1
    shape = StrictPartition(tuple(parts))
    labels[kj + 1] = m
    assert tuple(sorted(labels)) == corner_rows(shape), (y, m, ins)
    return LabelledYoungDiagram(shape, tuple(labels[r] for r in sorted(labels)))


def longest_lyd(n: int) -> LabelledYoungDiagram:
    """The diagram of ``w_o^(n)``: staircase ``(2n-1, ..., 1)`` labelled ``n-1, ..., 0``."""
    return LabelledYoungDiagram(StrictPartition(tuple(range(2 * n - 1, 0, -2))), tuple(range(n - 1, -1, -1)))


def chain_to_longest(
    y: LabelledYoungDiagram, n: int, side: Literal["right", "left"] = "right"
) -> list[SignedPermutation]:
    """Length-increasing vexillary chain from ``w(Y)`` to ``w_o^(n)``.

    Each step inserts the largest insertable label ``m <= n - 1``: into ``Y``
    for right multiplication, into ``Y*`` for left multiplication.
    """
    if n < lyd_n(y):
        raise ValueError(f"n={n} is smaller than n(Y)={lyd_n(y)}")
    target = longest_lyd(n)
    w = lyd_to_perm(y)
    chain = [w]
    while y != target:
        work = y if side == "right" else lyd_dual(y)
        options = [m for m in insertable_labels(work) if m <= n - 1]
        if not options:
            raise AssertionError(f"no insertable label <= {n - 1} in {work}")
        m = max(options)
        grown = insert_label(work, m)
        y = grown if side == "right" else lyd_dual(grown)
        w = sp_multiply_simple(w, m, side)
        assert lyd_to_perm(y) == w
        chain.append(w)
    assert w == sp_longest(n)
    return chain


def strict_partitions(max_size: int) -> Iterator[StrictPartition]:
    """All strict partitions with ``|λ| <= max_size``, the empty one first."""

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[StrictPartition]:
        yield StrictPartition(tuple(acc))
        for part in range(min(remaining, cap), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part - 1, acc)
            acc.pop()

    yield from rec(max_size, max_size, [])


def all_lyds(max_size: int) -> Iterator[LabelledYoungDiagram]:
    """Every labelled Young diagram with ``|λ| <= max_size``."""
    for shape in strict_partitions(max_size):
        rows = corner_rows(shape)
        lam = [shape.part(k) for k in rows]

        def rec(i: int, acc: list[int]) -> Iterator[LabelledYoungDiagram]:
            if i == len(rows):
                yield LabelledYoungDiagram(shape, tuple(acc))
                return
            for m in range(lam[i]):
                if i and (m > acc[-1] or acc[-1] - m > lam[i - 1] - lam[i]):
                    continue
                acc.append(m)
                yield from rec(i + 1, acc)
                acc.pop()

        yield from rec(0, [])


def render_lyd(y: LabelledYoungDiagram) -> str:
    """Shifted diagram, one text row per shape row; corners show their label."""
    if not y.shape.parts:
        return f"LYD {y}\n(empty diagram)\n"
    labels = dict(y.corners)
    width = max([len(str(m)) for m in y.labels] + [1])
    blank = "[" + " " * width + "]"
    lines = [f"LYD {y}"]
    for k, part in enumerate(y.shape.parts, start=1):
        cells = [blank] * part
        if k in labels:
            cells[-1] = "[" + str(labels[k]).rjust(width) + "]"
        lines.append(" " * (len(blank) * (k - 1)) + "".join(cells))
    return "\n".join(lines) + "\n"


@dataclass
class TheoremReport:
    name: str
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, message: str) -> None:
        self.counterexamples.append(message)


def _lyd_or_none(u: SignedPermutation) -> LabelledYoungDiagram | None:
    try:
        return lyd_of_perm(u)
    except NotVexillaryError:
        return None


def removal_failures(w: SignedPermutation, m_max: int | None = None) -> tuple[int, list[str]]:
    """Check the removal and insertion statements at one vexillary ``w``.

    Returns ``(number of (side, m) cases checked, failure messages)``.  ``m``
    ranges over ``0..m_max`` (default ``len(window)``, one past the rank, so
    the auto-grown window is exercised too).
    """
    y = _lyd_or_none(w)
    if y is None:
        return 0, []
    m_max = len(w.canonical) if m_max is None else m_max
    lw = sp_length(w)
    checked = 0
    failures: list[str] = []
    for side in ("right", "left"):
        work = y if side == "right" else lyd_dual(y)
        removable = removable_labels(work)
        insertable = insertable_labels(work)
        for m in range(m_max + 1):
            checked += 1
            u = sp_multiply_simple(w, m, side)  # type: ignore[arg-type]
            yu = _lyd_or_none(u)
            lu = sp_length(u)
            tag = f"w={w} m={m} side={side} Y={work}"
            if (lu == lw - 1) != (m in work.labels):
                failures.append(f"descent/label mismatch: {tag}")
            down = yu is not None and lu == lw - 1
            if down != (m in removable):
                failures.append(f"removal: vexillary-down={down} removable={m in removable}: {tag}")
            elif down:
                got = yu if side == "right" else lyd_dual(yu)
                if got != remove_label(work, m):
                    failures.append(f"removal: LYD {got} != Y\\m {remove_label(work, m)}: {tag}")
            up = yu is not None and lu == lw + 1
            if up != (m in insertable):
                failures.append(f"insertion: vexillary-up={up} insertable={m in insertable}: {tag}")
            elif up:
                got = yu if side == "right" else lyd_dual(yu)
                if got != insert_label(work, m):
                    failures.append(f"insertion: LYD {got} != Y∪m {insert_label(work, m)}: {tag}")
    return checked, failures


def verify_removal_theorem(n: int, m_max: int | None = None) -> TheoremReport:
    """Removal/insertion theorems on both sides for every vexillary ``w`` in ``W_n``."""
    report = TheoremReport(f"removal/insertion theorems, n={n}")
    for w in enumerate_group(n):
        checked, failures = removal_failures(w, n if m_max is None else m_max)
        report.checked += checked
        report.counterexamples.extend(failures)
    return report
