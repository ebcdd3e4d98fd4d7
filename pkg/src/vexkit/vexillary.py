"""Pattern containment and the equivalent characterizations of vexillarity."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Literal, Sequence

from .core import SignedPermutation, WindowPermutation, embed, enumerate_group
from .diagrams import sp_essential_set
from .errors import CapExceededError, InconsistentVerdictError, NotVexillaryError
from .triples import perm_to_triple

Mode = Literal["triple", "essential", "odd", "even", "patterns", "all"]
MODES: tuple[str, ...] = ("triple", "essential", "odd", "even", "patterns")

DEFAULT_RANK_CAP = 7

NINE_PATTERNS: tuple[tuple[int, ...], ...] = (
    (2, 1),
    (-3, 2, -1),
    (-4, -1, -2, 3),
    (-4, 1, -2, 3),
    (-3, -4, -1, -2),
    (-3, -4, 1, -2),
    (-2, -3, 4, -1),
    (2, -3, 4, -1),
    (3, -4, -1, -2),
)

VEX_PATTERN = (2, 1, 4, 3)


def rank_cap() -> int:
    """Default enumeration cap, overridable with ``VEXKIT_RANK_CAP``."""
    raw = os.environ.get("VEXKIT_RANK_CAP")
    return int(raw) if raw else DEFAULT_RANK_CAP


def _check_cap(n: int, cap: int | None) -> None:
    cap = rank_cap() if cap is None else cap
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the rank cap {cap}")


def _find(values: Sequence[int], pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Indices into ``values`` of a subsequence order-isomorphic to ``pattern``."""
    m = len(pattern)
    if m == 0:
        return ()
    size = len(values)
    chosen: list[int] = []
    idx: list[int] = []

    def rec(start: int) -> bool:
        t = len(chosen)
        if t == m:
            return True
        lo, hi = None, None
        pt = pattern[t]
        for s in range(t):
            if pattern[s] < pt:
                if lo is None or chosen[s] > lo:
                    lo = chosen[s]
            elif hi is None or chosen[s] < hi:
                hi = chosen[s]
        for i in range(start, size - (m - t) + 1):
            x = values[i]
            if (lo is not None and x <= lo) or (hi is not None and x >= hi):
                continue
            chosen.append(x)
            idx.append(i)
            if rec(i + 1):
                return True
            chosen.pop()
            idx.pop()
        return False

    return tuple(idx) if rec(0) else None


def pattern_contains(v: WindowPermutation, pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Domain positions ``i_1 < ... < i_m`` of an occurrence of ``pattern`` in ``v``, or None."""
    hit = _find(v.values, pattern)
    return None if hit is None else tuple(v.domain[i] for i in hit)


def signed_pattern_contains(w: SignedPermutation, pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Positions (1-based) where signs match ``pattern`` and absolute values are order-isomorphic."""
    win = w.window
    m = len(pattern)
    if m == 0:
        return ()
    absp = [abs(x) for x in pattern]
    chosen: list[int] = []
    idx: list[int] = []

    def rec(start: int) -> bool:
        t = len(chosen)
        if t == m:
            return True
        neg = pattern[t] < 0
        lo, hi = None, None
        pt = absp[t]
        for s in range(t):
            if absp[s] < pt:
                if lo is None or chosen[s] > lo:
                    lo = chosen[s]
            elif hi is None or chosen[s] < hi:
                hi = chosen[s]
        for i in range(start, len(win) - (m - t) + 1):
            x = win[i]
            if (x < 0) != neg:
                continue
            a = abs(x)
            if (lo is not None and a <= lo) or (hi is not None and a >= hi):
                continue
            chosen.append(a)
            idx.append(i + 1)
            if rec(i + 1):
                return True
            chosen.pop()
            idx.pop()
        return False

    return tuple(idx) if rec(0) else None


def nine_patterns() -> list[SignedPermutation]:
    return [SignedPermutation(p) for p in NINE_PATTERNS]


def avoids_nine(w: SignedPermutation) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First (pattern, positions) occurrence among the nine patterns, or None."""
    for pat in NINE_PATTERNS:
        hit = signed_pattern_contains(w, pat)
        if hit is not None:
            return pat, hit
    return None


def essential_chain_ok(w: SignedPermutation) -> bool:
    """Essential positions are positive and form a chain under the componentwise order."""
    pos = sorted({(t.p, t.q) for t in sp_essential_set(w)}, reverse=True)
    if any(p <= 0 or q <= 0 for p, q in pos):
        return False
    return all(a[1] >= b[1] for a, b in zip(pos, pos[1:]))


def _triple_ok(w: SignedPermutation) -> bool:
    try:
        perm_to_triple(w)
    except NotVexillaryError:
        return False
    return True


def _embed_ok(w: SignedPermutation, parity: str) -> bool:
    return pattern_contains(embed(w, parity, len(w.canonical)), VEX_PATTERN) is None  # type: ignore[arg-type]


_CHECKS: dict[str, Callable[[SignedPermutation], bool]] = {
    "triple": _triple_ok,
    "essential": essential_chain_ok,
    "odd": lambda w: _embed_ok(w, "odd"),
    "even": lambda w: _embed_ok(w, "even"),
    "patterns": lambda w: avoids_nine(w) is None,
}


@dataclass
class VexillaryReport:
    permutation: SignedPermutation
    verdicts: dict[str, bool] = field(default_factory=dict)
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def vexillary(self) -> bool:
        values = set(self.verdicts.values())
        if len(values) != 1:
            raise InconsistentVerdictError(f"verdicts disagree for {self.permutation}: {self.verdicts}")
        return values.pop()

    def __bool__(self) -> bool:
        return self.vexillary


def is_vexillary(w: SignedPermutation, mode: Mode = "patterns") -> VexillaryReport:
    """Decide vexillarity by one characterization, or by all five with ``mode="all"``.

    ``mode="all"`` raises :class:`InconsistentVerdictError` if the verdicts differ.
    """
    modes = MODES if mode == "all" else (mode,)
    if any(m not in _CHECKS for m in modes):
        raise ValueError(f"unknown mode {mode!r}")
    report = VexillaryReport(w, {m: _CHECKS[m](w) for m in modes})
    if mode in ("all", "patterns"):
        report.witness = avoids_nine(w)
    report.vexillary  # noqa: B018  surfaces disagreement eagerly
    return report


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def vn_formula(n: int) -> int:
    return sum(comb(n, k) ** 2 * catalan(k) for k in range(n + 1))


def _count_stripe(args: tuple[str, int, int, int]) -> int:
    kind, n, stripe, jobs = args
    test = _COUNTERS[kind]
    return sum(1 for idx, w in enumerate(enumerate_group(n)) if idx % jobs == stripe and test(w))


def _egge_test(w: SignedPermutation) -> bool:
    return pattern_contains(embed(w, "even", len(w.canonical)), (4, 3, 2, 1)) is None


_COUNTERS: dict[str, Callable[[SignedPermutation], bool]] = {
    "vexillary": _CHECKS["patterns"],
    "egge": _egge_test,
}


def _count(kind: str, n: int, cap: int | None, jobs: int) -> int:
    _check_cap(n, cap)
    if jobs <= 1:
        return _count_stripe((kind, n, 0, 1))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_stripe, [(kind, n, r, jobs) for r in range(jobs)]))


def count_vexillary(n: int, cap: int | None = None, jobs: int = 1) -> int:
    """Number of vexillary elements of ``W_n`` (nine-pattern test)."""
    return _count("vexillary", n, cap, jobs)


def egge_count(n: int, cap: int | None = None, jobs: int = 1) -> int:
    """Number of ``w`` in ``W_n`` whose even embedding avoids ``[4 3 2 1]``."""
    return _count("egge", n, cap, jobs)
