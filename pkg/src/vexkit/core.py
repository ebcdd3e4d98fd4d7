"""Signed permutations, window permutations and the hyperoctahedral group.

A signed permutation is stored by its window ``(w(1), ..., w(n))``.  Values
outside the window follow from ``w(-i) = -w(i)``, ``w(0) = 0`` and
``w(m) = m`` for ``|m| > n``.  Equality and hashing ignore trailing fixed
points, so ``W_n`` sits inside ``W_{n+1}`` transparently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Sequence

from .errors import InvalidPermutationError

Side = Literal["left", "right"]
Parity = Literal["odd", "even"]


def _trim(window: tuple[int, ...]) -> tuple[int, ...]:
    end = len(window)
    while end and window[end - 1] == end:
        end -= 1
    return window[:end]


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(x) for x in self.window)
        n = len(window)
        if any(x == 0 for x in window):
            raise InvalidPermutationError(f"zero entry in window {list(window)}")
        if sorted(abs(x) for x in window) != list(range(1, n + 1)):
            seen: set[int] = set()
            for x in window:
                if abs(x) in seen:
                    raise InvalidPermutationError(f"repeated absolute value {abs(x)} in {list(window)}")
                seen.add(abs(x))
            raise InvalidPermutationError(
                f"absolute values of {list(window)} are not a permutation of 1..{n}"
            )
        object.__setattr__(self, "window", window)

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def canonical(self) -> tuple[int, ...]:
        """Window with trailing fixed points removed."""
        return _trim(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        a = abs(i)
        if a > len(self.window):
            return i
        v = self.window[a - 1]
        return v if i > 0 else -v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return sp_compose(self, other)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.window) if self.window else "id"

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    def resized(self, n: int) -> SignedPermutation:
        """The same element written with a window of size ``n``."""
        if n < len(self.canonical):
            raise InvalidPermutationError(f"{self} does not lie in W_{n}")
        return SignedPermutation(tuple(self(i) for i in range(1, n + 1)))

    def inverse(self) -> SignedPermutation:
        return sp_inverse(self)

    @property
    def is_identity(self) -> bool:
        return not self.canonical


@dataclass(frozen=True)
class WindowPermutation:
    """A finite permutation of ``{-N..N}`` (odd) or ``{±1..±N}`` (even).

    ``values[t]`` is the image of ``domain[t]``; outside the domain ``v(m) = m``.
    """

    domain: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.domain) != len(self.values) or sorted(self.values) != sorted(self.domain):
            raise InvalidPermutationError("values are not a permutation of the domain")

    @classmethod
    def odd(cls, values: Sequence[int]) -> WindowPermutation:
        size = len(values)
        if size % 2 != 1:
            raise InvalidPermutationError("odd domain needs 2N+1 values")
        half = size // 2
        return cls(tuple(range(-half, half + 1)), tuple(values))

    @classmethod
    def even(cls, values: Sequence[int]) -> WindowPermutation:
        size = len(values)
        if size % 2:
            raise InvalidPermutationError("even domain needs 2N values")
        half = size // 2
        dom = tuple(range(-half, 0)) + tuple(range(1, half + 1))
        return cls(dom, tuple(values))

    @property
    def half(self) -> int:
        return len(self.domain) // 2

    @property
    def parity(self) -> Parity:
        return "odd" if len(self.domain) % 2 else "even"

    def _table(self) -> dict[int, int]:
        return dict(zip(self.domain, self.values))

    def __call__(self, i: int) -> int:
        return self._table().get(i, i)

    def inverse(self) -> WindowPermutation:
        table = dict(zip(self.values, self.domain))
        return WindowPermutation(self.domain, tuple(table[d] for d in self.domain))

    def compose(self, other: WindowPermutation) -> WindowPermutation:
        """``(self ∘ other)(i) = self(other(i))``; both must share a domain."""
        if self.domain != other.domain:
            raise InvalidPermutationError("domains differ")
        mine = self._table()
        return WindowPermutation(self.domain, tuple(mine[other(d)] for d in self.domain))

    def descents(self) -> list[int]:
        """Positions ``d`` in the domain with ``v(d) > v(next(d))``."""
        return [
            self.domain[t]
            for t in range(len(self.domain) - 1)
            if self.values[t] > self.values[t + 1]
        ]


@dataclass(frozen=True)
class Reflection:
    """``T(i, j)`` swaps positions i < j; ``S(i, j)`` exchanges i and -j (i <= j)."""

    kind: Literal["T", "S"]
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in ("T", "S"):
            raise ValueError(f"unknown reflection kind {self.kind!r}")
        if self.i < 1 or self.j < 1:
            raise ValueError("reflection indices must be positive")
        if self.kind == "T" and not self.i < self.j:
            raise ValueError("T(i, j) needs i < j")
        if self.kind == "S" and not self.i <= self.j:
            raise ValueError("S(i, j) needs i <= j")

    @classmethod
    def t(cls, i: int, j: int) -> Reflection:
        return cls("T", min(i, j), max(i, j))

    @classmethod
    def s(cls, i: int, j: int) -> Reflection:
        return cls("S", min(i, j), max(i, j))

    def __str__(self) -> str:
        return f"{self.kind}({self.i},{self.j})"


def sp_from_oneline(values: Iterable[int]) -> SignedPermutation:
    return SignedPermutation(tuple(values))


def sp_identity(n: int = 0) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def sp_length(w: SignedPermutation) -> int:
    """Inversions plus pairs ``i <= j`` with ``w(i) + w(j) < 0``."""
    win = w.canonical
    n = len(win)
    total = 0
    for i in range(n):
        wi = win[i]
        for j in range(i, n):
            wj = win[j]
            if j > i and wi > wj:
                total += 1
            if wi + wj < 0:
                total += 1
    return total


def sp_descents(w: SignedPermutation) -> set[int]:
    n = len(w.canonical)
    return {i for i in range(n) if w(i) > w(i + 1)}


def sp_inverse(w: SignedPermutation) -> SignedPermutation:
    n = w.n
    inv = [0] * n
    for i, v in enumerate(w.window, start=1):
        inv[abs(v) - 1] = i if v > 0 else -i
    return SignedPermutation(tuple(inv))


def sp_compose(u: SignedPermutation, w: SignedPermutation) -> SignedPermutation:
    """``(u ∘ w)(i) = u(w(i))``."""
    n = max(u.n, w.n)
    return SignedPermutation(tuple(u(w(i)) for i in range(1, n + 1)))


def embed(w: SignedPermutation, parity: Parity = "odd", n: int | None = None) -> WindowPermutation:
    """The odd embedding into permutations of ``{-n..n}`` or the even one into ``{±1..±n}``."""
    n = w.n if n is None else n
    if n < len(w.canonical):
        raise InvalidPermutationError(f"{w} does not lie in W_{n}")
    if parity == "odd":
        dom = tuple(range(-n, n + 1))
    elif parity == "even":
        dom = tuple(range(-n, 0)) + tuple(range(1, n + 1))
    else:
        raise ValueError(f"unknown parity {parity!r}")
    return WindowPermutation(dom, tuple(w(i) for i in dom))


def sp_multiply_simple(w: SignedPermutation, m: int, side: Side = "right") -> SignedPermutation:
    """``w * s_m`` (right) or ``s_m * w`` (left); the window grows to ``m + 1`` if needed."""
    if m < 0:
        raise ValueError("simple reflection index must be nonnegative")
    n = max(w.n, m + 1)
    win = [w(i) for i in range(1, n + 1)]
    if side == "right":
        if m == 0:
            win[0] = -win[0]
        else:
            win[m - 1], win[m] = win[m], win[m - 1]
    elif side == "left":
        def s(x: int) -> int:
            if m == 0:
                return -x if abs(x) == 1 else x
            if abs(x) == m:
                return x + 1 if x > 0 else x - 1
            if abs(x) == m + 1:
                return x - 1 if x > 0 else x + 1
            return x

        win = [s(x) for x in win]
    else:
        raise ValueError(f"unknown side {side!r}")
    return SignedPermutation(tuple(win))


def sp_apply_reflection(w: SignedPermutation, r: Reflection, side: Side = "right") -> SignedPermutation:
    """Right multiplication by a reflection (left multiplication via inverses)."""
    if side == "left":
        return sp_inverse(sp_apply_reflection(sp_inverse(w), r, "right"))
    n = max(w.n, r.j)
    win = [w(i) for i in range(1, n + 1)]
    a, b = r.i - 1, r.j - 1
    if r.kind == "T":
        win[a], win[b] = win[b], win[a]
    else:
        win[a], win[b] = -win[b], -win[a]
    return SignedPermutation(tuple(win))


def sp_longest(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def reflections(n: int) -> list[Reflection]:
    """All reflections of ``W_n``: ``T(i, j)`` for i < j and ``S(i, j)`` for i <= j."""
    out = [Reflection("T", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out += [Reflection("S", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return out


def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """All of ``W_n`` exactly once, lexicographic under ``-1 < 1 < -2 < 2 < ...``."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    alphabet = [v for a in range(1, n + 1) for v in (-a, a)]
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec() -> Iterator[SignedPermutation]:
        if len(prefix) == n:
            yield SignedPermutation(tuple(prefix))
            return
        for v in alphabet:
            if used[abs(v)]:
                continue
            used[abs(v)] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[abs(v)] = False

    yield from rec()


def group_order(n: int) -> int:
    total = 1
    for i in range(1, n + 1):
        total *= 2 * i
    return total


def wp_rank(v: WindowPermutation, p: int, q: int) -> int:
    """``#{i <= -p : v(i) >= q}`` over the domain of ``v``."""
    return sum(1 for d, x in zip(v.domain, v.values) if d <= -p and x >= q)


@lru_cache(maxsize=None)
def _bruhat_downsets(n: int) -> dict[tuple[int, ...], frozenset[tuple[int, ...]]]:
    # Keys are windows of size n.  lru_cache makes the table build-once; a
    # concurrent first call may build it twice but readers never see a partial table.
    elements = list(enumerate_group(n))
    length = {w.window: sp_length(w) for w in elements}
    refl = reflections(n)
    covers: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for w in elements:
        lw = length[w.window]
        below = []
        for r in refl:
            u = sp_apply_reflection(w, r).window
            if length[u] == lw - 1:
                below.append(u)
        covers[w.window] = below
    down: dict[tuple[int, ...], frozenset[tuple[int, ...]]] = {}
    for w in sorted(elements, key=lambda x: length[x.window]):
        acc = {w.window}
        for u in covers[w.window]:
            acc |= down[u]
        down[w.window] = frozenset(acc)
    return down


def bruhat_leq(u: SignedPermutation, w: SignedPermutation) -> bool:
    """Bruhat order via the transitive closure of downward reflection covers."""
    n = max(len(u.canonical), len(w.canonical))
    return u.resized(n).window in _bruhat_downsets(n)[w.resized(n).window]


def simple_word_length(w: SignedPermutation) -> int:
    """Minimal word length in ``s_0..s_{n-1}`` by breadth-first search (oracle; exponential)."""
    n = len(w.canonical)
    target = w.resized(n).window
    start = tuple(range(1, n + 1))
    frontier = [start]
    seen = {start}
    dist = 0
    while frontier:
        if target in seen:
            return dist
        nxt = []
        for win in frontier:
            x = SignedPermutation(win)
            for m in range(n):
                y = sp_multiply_simple(x, m).window
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        dist += 1
    raise AssertionError("unreachable element")  # pragma: no cover


__all__ = [
    "SignedPermutation",
    "WindowPermutation",
    "Reflection",
    "sp_from_oneline",
    "sp_identity",
    "sp_length",
    "sp_descents",
    "sp_inverse",
    "sp_compose",
    "embed",
    "sp_multiply_simple",
    "sp_apply_reflection",
    "sp_longest",
    "reflections",
    "enumerate_group",
    "group_order",
    "wp_rank",
    "bruhat_leq",
    "simple_word_length",
]
