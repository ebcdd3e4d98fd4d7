"""Exhaustive verification suites over ``W_n``.

Every suite is a per-element check applied to the enumeration stream of
``W_n``.  With ``jobs > 1`` the stream is split by index stripe
(``index % jobs``); results are merged by summing counters and sorting
counterexamples by enumeration index, so reports do not depend on ``jobs``.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .core import (
    SignedPermutation,
    bruhat_leq,
    embed,
    enumerate_group,
    sp_inverse,
    sp_length,
)
from .diagrams import (
    Box,
    sp_essential_set,
    sp_extended_diagram,
    sp_rank,
    sp_rank_reflected,
    wp_essential_set,
    wp_se_corners,
)
from .errors import InconsistentVerdictError, NotVexillaryError
from .lyd import chain_to_longest, lyd_of_perm, removal_failures
from .transitions import is_max_grassmannian, stanley_h, transitions, vexillary_transition_ok
from .triples import perm_to_triple, triple_lambda
from .vexillary import _check_cap, egge_count, is_vexillary, vn_formula

SUITES = ("equivalence", "counting", "diagrams", "lyd", "transitions")
MINIMALITY_MAX_N = 4

Check = Callable[[SignedPermutation, Counter], list[str]]


@dataclass
class SuiteReport:
    suite: str
    n: int
    checked: int = 0
    counters: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[int, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.suite == "counting":
            c = self.counters
            return f"egge={c['egge']} vexillary={c['vexillary']} formula={c['formula']}"
        keys = " ".join(f"{k}={v}" for k, v in sorted(self.counters.items()))
        return f"checked={self.checked}" + (f" {keys}" if keys else "")

    def line(self) -> str:
        return f"{self.suite} n={self.n}: {self.summary()} {'PASS' if self.ok else 'FAIL'}"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checked": self.checked,
            "counters": dict(sorted(self.counters.items())),
            "pass": self.ok,
            "counterexamples": [{"index": i, "message": m} for i, m in self.failures],
            "notes": self.notes,
        }


def _vexillary(w: SignedPermutation) -> bool:
    return is_vexillary(w, "patterns").vexillary


def check_equivalence(w: SignedPermutation, tally: Counter) -> list[str]:
    try:
        verdict = is_vexillary(w, "all").vexillary
    except InconsistentVerdictError as exc:
        return [str(exc)]
    tally["vexillary"] += verdict
    if verdict != _vexillary(sp_inverse(w)):
        return [f"vexillarity not closed under inverse at w={w}"]
    return []


def check_diagrams(w: SignedPermutation, tally: Counter) -> list[str]:
    out = []
    n = w.n
    d = sp_extended_diagram(w)
    if len(d.diagram) != sp_length(w):
        out.append(f"|D_w|={len(d.diagram)} != ℓ(w)={sp_length(w)} at w={w}")
    ess = wp_essential_set(embed(w, "odd", n))
    for k, p, q in ess:
        if (k + p + q - 1, 1 - p, 1 - q) not in ess:
            out.append(f"Ess(ι(w)) symmetry fails for {(k, p, q)} at w={w}")
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if sp_rank(w, p, q) != sp_rank_reflected(w, p, q):
                out.append(f"rank formulas disagree at (p,q)=({p},{q}), w={w}")
    try:
        t = perm_to_triple(w)
    except NotVexillaryError:
        return out
    tally["vexillary"] += 1
    v = embed(w, "odd", len(w.canonical))
    expect = {Box(q - 1, -p) for p, q in zip(t.p, t.q)} | {Box(-q, p - 1) for p, q in zip(t.p, t.q)}
    corners = set(wp_se_corners(v))
    if corners != expect:
        out.append(f"vexillary corner law fails at w={w}: {sorted(corners)} != {sorted(expect)}")
    if any(c.row < 0 and c.col < 0 for c in corners):
        out.append(f"corner with both coordinates negative at w={w}")
    for k, p, q in t.rows():
        dots = sum(1 for i in range(-len(w.canonical), -p + 1) if v(i) >= q)
        if dots != k:
            out.append(f"dot count {dots} != k={k} at corner ({q - 1},{-p}), w={w}")
    return out


def minimality_failures(w: SignedPermutation, universe: list[SignedPermutation]) -> list[str]:
    """``w`` is the unique Bruhat-minimum meeting ``Ess(w)``, and no condition is redundant."""
    ess = sorted(sp_essential_set(w))

    def meets(u: SignedPermutation, conds) -> bool:
        return all(sp_rank(u, p, q) >= k for k, p, q in conds)

    out = []
    feasible = [u for u in universe if meets(u, ess)]
    if w not in feasible or not all(bruhat_leq(w, u) for u in feasible):
        out.append(f"w={w} is not the Bruhat-minimum of its essential conditions")
    for drop in ess:
        rest = [c for c in ess if c != drop]
        k0, p0, q0 = drop
        if not any(u != w and sp_rank(u, p0, q0) < k0 and meets(u, rest) for u in universe):
            out.append(f"essential condition {tuple(drop)} is redundant for w={w}")
    return out


def check_lyd(w: SignedPermutation, tally: Counter) -> list[str]:
    try:
        y = lyd_of_perm(w)
    except NotVexillaryError:
        return []
    tally["vexillary"] += 1
    n = w.n
    checked, out = removal_failures(w, n)
    tally["cases"] += checked
    if sp_length(w) != y.size:
        out.append(f"ℓ(w)={sp_length(w)} != |λ|={y.size} at w={w}")
    for side in ("right", "left"):
        try:
            chain = chain_to_longest(y, n, side)  # type: ignore[arg-type]
        except (AssertionError, ValueError) as exc:
            out.append(f"chain_to_longest({side}) failed at w={w}: {exc}")
            continue
        lengths = [sp_length(u) for u in chain]
        if lengths != list(range(lengths[0], n * n + 1)):
            out.append(f"chain lengths {lengths} are not consecutive at w={w}")
    return out


def check_transitions(w: SignedPermutation, tally: Counter) -> list[str]:
    out = []
    h = stanley_h(w)
    if not h or any(c <= 0 for c in h.values()):
        out.append(f"H_w has a non-positive coefficient at w={w}: {h}")
    if any(sum(lam) != sp_length(w) for lam in h):
        out.append(f"H_w has a term of the wrong degree at w={w}: {h}")
    if transitions(w) != transitions(w, extra=3):
        out.append(f"candidate window n+1 is not sufficient at w={w}")
    try:
        t = perm_to_triple(w)
    except NotVexillaryError:
        return out
    tally["vexillary"] += 1
    lam = triple_lambda(t).parts
    if h != {lam: 1}:
        out.append(f"H_w={h} != P{list(lam)} at vexillary w={w}")
    if not w.is_identity and not is_max_grassmannian(w):
        tally["unique_transition"] += 1
        if not vexillary_transition_ok(w):
            out.append(f"vexillary w={w} lacks the unique transition of the label-replacement lemma")
    return out


_CHECKS: dict[str, Check] = {
    "equivalence": check_equivalence,
    "diagrams": check_diagrams,
    "lyd": check_lyd,
    "transitions": check_transitions,
}


def _stripe(args: tuple[str, int, int, int]) -> tuple[int, dict[str, int], list[tuple[int, str]]]:
    suite, n, stripe, jobs = args
    check = _CHECKS[suite]
    tally: Counter = Counter()
    failures: list[tuple[int, str]] = []
    checked = 0
    universe = list(enumerate_group(n)) if suite == "diagrams" and n <= MINIMALITY_MAX_N else None
    for idx, w in enumerate(enumerate_group(n)):
        if idx % jobs != stripe:
            continue
        checked += 1
        msgs = check(w, tally)
        if universe is not None:
            msgs += minimality_failures(w, universe)
        failures.extend((idx, m) for m in msgs)
    return checked, dict(tally), failures


def run_suite(suite: str, n: int, jobs: int = 1, cap: int | None = None) -> SuiteReport:
    _check_cap(n, cap)
    report = SuiteReport(suite, n)
    if suite == "counting":
        formula = vn_formula(n)
        report.counters = {
            "vexillary": _count_vexillary(n, jobs, cap),
            "egge": egge_count(n, cap=cap, jobs=jobs),
            "formula": formula,
        }
        report.checked = _group_order(n)
        if report.counters["vexillary"] != formula:
            report.failures.append((-1, f"count_vexillary({n})={report.counters['vexillary']} != V_n={formula}"))
        if report.counters["egge"] != formula:
            report.failures.append((-1, f"egge_count({n})={report.counters['egge']} != V_n={formula}"))
        return report
    if suite not in _CHECKS:
        raise ValueError(f"unknown suite {suite!r}")
    tasks = [(suite, n, r, jobs) for r in range(max(jobs, 1))]
    if jobs <= 1:
        results = [_stripe(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_stripe, tasks))
    tally: Counter = Counter()
    for checked, counts, failures in results:
        report.checked += checked
        tally.update(counts)
        report.failures.extend(failures)
    report.failures.sort()
    report.counters = dict(tally)
    if suite == "diagrams" and n > MINIMALITY_MAX_N:
        report.notes.append(f"essential-set minimality skipped for n > {MINIMALITY_MAX_N}")
    return report


def _count_vexillary(n: int, jobs: int, cap: int | None) -> int:
    from .vexillary import count_vexillary

    return count_vexillary(n, cap=cap, jobs=jobs)


def _group_order(n: int) -> int:
    from .core import group_order

    return group_order(n)


def run_suites(names: list[str], n: int, jobs: int = 1, cap: int | None = None) -> list[SuiteReport]:
    if "all" in names:
        names = list(SUITES)
    return [run_suite(name, n, jobs, cap) for name in names]
