"""Permutation matrices, diagrams, SE corners and essential sets.

Boxes are ``(row, col)`` pairs in matrix coordinates: rows grow downward and
columns grow rightward.  An essential position ``(p, q)`` always refers to the
box ``(q - 1, -p)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .core import SignedPermutation, WindowPermutation, embed, wp_rank


class Box(NamedTuple):
    row: int
    col: int


class BasicTriple(NamedTuple):
    k: int
    p: int
    q: int


@dataclass(frozen=True)
class DiagramData:
    dots: frozenset[Box]
    diagram: frozenset[Box]
    extended: frozenset[Box] = field(default_factory=frozenset)
    crosses: frozenset[Box] = field(default_factory=frozenset)
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()


def _in_diagram(v: WindowPermutation, vinv: WindowPermutation, a: int, b: int) -> bool:
    # Not weakly south of the dot in column b, not weakly east of the dot in row a.
    return v(b) > a and vinv(a) > b


def wp_diagram(v: WindowPermutation) -> DiagramData:
    vinv = v.inverse()
    dom = v.domain
    dots = frozenset(Box(x, i) for i, x in zip(dom, v.values))
    boxes = frozenset(Box(a, b) for a in dom for b in dom if _in_diagram(v, vinv, a, b))
    return DiagramData(dots=dots, diagram=boxes, extended=boxes, rows=dom, cols=dom)


def _se_corner(v: WindowPermutation, vinv: WindowPermutation, a: int, b: int) -> bool:
    return v(b) > a >= v(b + 1) and vinv(a) > b >= vinv(a + 1)


def wp_se_corners(v: WindowPermutation) -> list[Box]:
    """SE corners of the diagram of ``v``, ordered southwest to northeast."""
    if v.parity != "odd":
        raise ValueError("diagrams are defined on the odd domain")
    vinv = v.inverse()
    dom = v.domain
    corners = [Box(a, b) for a in dom for b in dom if _se_corner(v, vinv, a, b)]
    return sorted(corners, key=lambda c: (-c.row, c.col))


def wp_essential_set(v: WindowPermutation) -> set[BasicTriple]:
    return {BasicTriple(wp_rank(v, -c.col, c.row + 1), -c.col, c.row + 1) for c in wp_se_corners(v)}


def sp_rank(w: SignedPermutation, p: int, q: int) -> int:
    """``#{i >= p : w(i) <= -q}``; any integer ``p`` and ``q`` are accepted."""
    hi = max(len(w.canonical), -q, p)
    return sum(1 for i in range(p, hi + 1) if w(i) <= -q)


def sp_rank_reflected(w: SignedPermutation, p: int, q: int) -> int:
    """The same rank counted from the left half: ``#{i <= -p : w(i) >= q}``."""
    lo = -max(len(w.canonical), q, -p)
    return sum(1 for i in range(lo, -p + 1) if w(i) >= q)


def sp_extended_diagram(w: SignedPermutation, n: int | None = None) -> DiagramData:
    """Dots, crosses, extended diagram and diagram on the ``(2n+1) x n`` array."""
    n = w.n if n is None else n
    rows = tuple(range(-n, n + 1))
    cols = tuple(range(-n, 0))
    dots = frozenset(Box(-w(i), -i) for i in range(1, n + 1))
    crosses = frozenset(Box(w(i), c) for i in range(1, n + 1) for c in range(-i, 0))
    winv = w.inverse()

    def alive(a: int, b: int) -> bool:
        # Column b holds its dot in row w(b); row a holds its dot in column w^{-1}(a).
        return w(b) > a and winv(a) > b

    extended = frozenset(Box(a, b) for a in rows for b in cols if alive(a, b))
    return DiagramData(
        dots=dots,
        diagram=extended - crosses,
        extended=extended,
        crosses=crosses & extended,
        rows=rows,
        cols=cols,
    )


def sp_extended_corners(d: DiagramData) -> list[Box]:
    """SE corners of the extended diagram (the array's right edge is a wall)."""
    ext = d.extended
    corners = [c for c in ext if Box(c.row + 1, c.col) not in ext and Box(c.row, c.col + 1) not in ext]
    return sorted(corners, key=lambda c: (-c.row, c.col))


def sp_essential_set(w: SignedPermutation) -> set[BasicTriple]:
    d = sp_extended_diagram(w)
    corners = sp_extended_corners(d)
    corner_set = set(corners)
    out: set[BasicTriple] = set()
    for c in corners:
        p, q = -c.col, c.row + 1
        k = sp_rank(w, p, q)
        if p == 1 and q < 0:
            continue
        if (
            p > 1
            and q > 0
            and Box(-q, -p) in corner_set
            and k == sp_rank(w, p, -q + 1) - q + 1
        ):
            continue
        out.add(BasicTriple(k, p, q))
    return out


def _cell_width(labels: list[int]) -> int:
    return max([len(str(x)) for x in labels] + [1]) + 1


def render_ascii(d: DiagramData, w: SignedPermutation | None = None, essential: set[BasicTriple] | None = None) -> str:
    """Grid rendering: ``●`` dot, ``×`` cross, ``□`` diagram box, ``·`` crossed out.

    Essential corners, when given, are listed under the grid as
    ``(row,col) k=..`` lines rather than drawn in cells, so the ``□`` count
    of the grid always equals the size of the diagram.
    """
    lines: list[str] = []
    if w is not None:
        lines.append(f"w = {w}")
    if not d.rows or not d.cols:
        lines.append("(empty diagram)")
        return "\n".join(lines) + "\n"
    width = _cell_width(list(d.rows) + list(d.cols))
    head = " " * width + "".join(str(c).rjust(width) for c in d.cols)
    lines.append(head)
    for a in d.rows:
        cells = []
        for b in d.cols:
            box = Box(a, b)
            if box in d.dots:
                ch = "●"
            elif box in d.diagram:
                ch = "□"
            elif box in d.crosses:
                ch = "×"
            else:
                ch = "·"
            cells.append(ch.rjust(width))
        lines.append(str(a).rjust(width) + "".join(cells))
    if essential:
        lines.append("essential:")
        for t in sorted(essential, key=lambda t: (-t.q, t.p, t.k)):
            lines.append(f"  ({t.q - 1},{-t.p}) k={t.k}  (k,p,q)=({t.k},{t.p},{t.q})")
    return "\n".join(lines) + "\n"


def render_signed(w: SignedPermutation) -> str:
    return render_ascii(sp_extended_diagram(w), w, sp_essential_set(w))


def render_window(v: WindowPermutation) -> str:
    return render_ascii(wp_diagram(v), None, wp_essential_set(v))


def odd_essential_set(w: SignedPermutation, n: int | None = None) -> set[BasicTriple]:
    return wp_essential_set(embed(w, "odd", n))
