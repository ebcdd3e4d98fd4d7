"""Triples ``(k, p, q)`` and the vexillary signed permutations they build."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import SignedPermutation, embed, sp_identity
from .diagrams import wp_rank, wp_se_corners
from .errors import InvalidTripleError, NotVexillaryError


@dataclass(frozen=True)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts) or any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{list(parts)} is not a strict partition")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, k: int) -> int:
        """1-based part ``λ_k``; zero past the end."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Triple:
    k: tuple[int, ...] = ()
    p: tuple[int, ...] = ()
    q: tuple[int, ...] = ()

    @property
    def s(self) -> int:
        return len(self.k)

    def rows(self) -> list[tuple[int, int, int]]:
        return list(zip(self.k, self.p, self.q))

    def slack(self, i: int) -> int:
        """Slack of inequality (*) between rows ``i`` and ``i+1`` (1-based)."""
        k, p, q = self.k, self.p, self.q
        return (p[i - 1] - p[i]) + (q[i - 1] - q[i]) - (k[i] - k[i - 1])

    @property
    def is_essential(self) -> bool:
        return all(self.slack(i) > 0 for i in range(1, self.s))

    def __str__(self) -> str:
        j = lambda xs: " ".join(map(str, xs))  # noqa: E731
        return f"({j(self.k)}; {j(self.p)}; {j(self.q)})"


def triple_validate(k: Sequence[int], p: Sequence[int], q: Sequence[int]) -> Triple:
    k, p, q = tuple(map(int, k)), tuple(map(int, p)), tuple(map(int, q))
    if not len(k) == len(p) == len(q):
        raise InvalidTripleError("k, p, q must have the same length", field="length")
    for name, seq in (("k", k), ("p", p), ("q", q)):
        for i, x in enumerate(seq, start=1):
            if x <= 0:
                raise InvalidTripleError(f"{name}_{i} = {x} is not positive", field=name, index=i)
    for i in range(1, len(k)):
        if not k[i - 1] < k[i]:
            raise InvalidTripleError(f"k is not strictly increasing at i={i}", field="k", index=i)
        if not p[i - 1] >= p[i]:
            raise InvalidTripleError(f"p is not weakly decreasing at i={i}", field="p", index=i)
        if not q[i - 1] >= q[i]:
            raise InvalidTripleError(f"q is not weakly decreasing at i={i}", field="q", index=i)
    t = Triple(k, p, q)
    for i in range(1, t.s):
        if t.slack(i) < 0:
            raise InvalidTripleError(
                f"(*) violated at i={i}: k_{i + 1}-k_{i} = {k[i] - k[i - 1]} > "
                f"{(p[i - 1] - p[i]) + (q[i - 1] - q[i])} = p_{i}-p_{i + 1}+q_{i}-q_{i + 1}",
                field="*",
                index=i,
            )
    return t


def triple_reduce(t: Triple) -> Triple:
    """Delete row ``i`` whenever (*) is an equality between rows ``i`` and ``i+1``.

    When equality holds, the rank condition in row ``i`` follows from the one in
    row ``i+1``, so row ``i`` is the redundant one.  Repeats to a fixed point.
    """
    rows = t.rows()
    while True:
        cur = Triple(*map(tuple, zip(*rows))) if rows else Triple()
        tight = [i for i in range(1, cur.s) if cur.slack(i) == 0]
        if not tight:
            return cur
        del rows[tight[0] - 1]


def triple_equivalent(a: Triple, b: Triple) -> bool:
    return triple_reduce(a) == triple_reduce(b)


def triple_to_perm(t: Triple) -> SignedPermutation:
    """Build ``w(τ)`` by the bin-and-scan construction."""
    if t.s == 0:
        return sp_identity()
    pos: dict[int, int] = {}
    used: set[int] = set()
    prev_k = 0
    for k, p, q in t.rows():
        count = k - prev_k
        prev_k = k
        bin_: list[int] = []
        a = q
        while len(bin_) < count:
            if a not in used:
                bin_.append(-a)
            a += 1
        bin_.sort()
        at = p
        for v in bin_:
            while at in pos:
                at += 1
            pos[at] = v
            used.add(-v)
            at += 1
        assert len(used) == k, "bin did not fill"
    n = max(max(pos), max(used))
    spare = iter(x for x in range(1, n + 1) if x not in used)
    window = tuple(pos[i] if i in pos else next(spare) for i in range(1, n + 1))
    return SignedPermutation(window)


def triple_lambda(t: Triple) -> StrictPartition:
    """``λ_k = p_i + q_i - 1 + k_i - k`` for ``k_{i-1} < k <= k_i``."""
    parts = []
    prev_k = 0
    for k, p, q in t.rows():
        for kk in range(prev_k + 1, k + 1):
            parts.append(p + q - 1 + k - kk)
        prev_k = k
    return StrictPartition(tuple(parts))


def triple_dual(t: Triple) -> Triple:
    return Triple(t.k, t.q, t.p)


def corner_triple(w: SignedPermutation) -> Triple:
    """Read a candidate triple off the SE corners of ``ι(w)`` in the left half.

    Raises :class:`NotVexillaryError` if the corners do not form a valid triple.
    """
    v = embed(w, "odd", len(w.canonical))
    rows = []
    for c in wp_se_corners(v):
        if c.col >= 0:
            continue
        p, q = -c.col, c.row + 1
        rows.append((wp_rank(v, p, q), p, q))
    if not rows:
        return Triple()
    k, p, q = (tuple(x) for x in zip(*rows))
    try:
        return triple_validate(k, p, q)
    except InvalidTripleError as exc:
        raise NotVexillaryError(f"{w} is not vexillary: corners fail to chain ({exc})") from exc


def perm_to_triple(w: SignedPermutation) -> Triple:
    """The essential triple ``τ`` with ``w(τ) = w``."""
    t = corner_triple(w)
    if not t.is_essential or triple_to_perm(t) != w:
        raise NotVexillaryError(f"{w} is not vexillary")
    return t


def essential_triples(max_entry: int, max_s: int) -> Iterator[Triple]:
    """Every essential triple with ``s <= max_s`` and all entries ``<= max_entry``."""
    yield Triple()

    def rec(rows: list[tuple[int, int, int]]) -> Iterator[Triple]:
        if rows:
            yield Triple(*map(tuple, zip(*rows)))
        if len(rows) == max_s:
            return
        if rows:
            k0, p0, q0 = rows[-1]
            k_range = range(k0 + 1, max_entry + 1)
            p_range = range(1, p0 + 1)
            q_range = range(1, q0 + 1)
        else:
            k0 = p0 = q0 = 0
            k_range = p_range = q_range = range(1, max_entry + 1)
        for k in k_range:
            for p in p_range:
                for q in q_range:
                    if rows and (p0 - p) + (q0 - q) <= k - k0:
                        continue
                    rows.append((k, p, q))
                    yield from rec(rows)
                    rows.pop()

    yield from rec([])
