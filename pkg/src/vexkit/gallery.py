"""Worked examples with byte-stable text and JSON renderings.

``documents()`` maps a file name to its exact contents; the golden tests and
``scripts/reproduce_examples.py`` both read from here.
"""

from __future__ import annotations

from .core import SignedPermutation, embed, sp_length
from .diagrams import render_signed, render_window, sp_essential_set
from .lyd import LabelledYoungDiagram, lyd_dual, lyd_from_triple, lyd_to_perm, remove_label, render_lyd
from .serialize import (
    dumps,
    essential_to_json,
    expansion_to_json,
    lyd_to_json,
    perm_to_json,
    triple_to_json,
)
from .transitions import stanley_h
from .triples import Triple, triple_lambda, triple_to_perm

SMALL = SignedPermutation((-2, 3, -1))
LARGE_TRIPLE = Triple((1, 3, 4, 5, 8), (9, 9, 6, 4, 3), (12, 9, 8, 8, 5))
PAIRED_TRIPLE = Triple((2, 3), (2, 2), (3, 1))
REMOVAL_STEPS: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...] = (
    ((5, 3, 1), (3, 2, 0), 2),
    ((5, 2, 1), (3, 0), 3),
    ((5, 2, 1), (3, 0), 0),
    ((3, 2), (1,), 1),
)
STANLEY_INPUTS = (
    SignedPermutation((-4, -2, -1, 3)),
    SignedPermutation((2, 1)),
    SignedPermutation((3, 2, 1)),
    SignedPermutation((2, -4, -3, -1)),
)


def _build_record(t: Triple) -> dict:
    w = triple_to_perm(t)
    return {
        "triple": triple_to_json(t),
        "permutation": perm_to_json(w),
        "lambda": list(triple_lambda(t).parts),
        "length": sp_length(w),
        "essential": essential_to_json(sp_essential_set(w)),
    }


def documents() -> dict[str, str]:
    docs: dict[str, str] = {}
    docs["small_odd_diagram.txt"] = render_window(embed(SMALL, "odd"))
    docs["small_signed_diagram.txt"] = render_signed(SMALL)
    docs["small_signed.json"] = dumps(
        {"permutation": perm_to_json(SMALL), "essential": essential_to_json(sp_essential_set(SMALL))}
    )

    large = triple_to_perm(LARGE_TRIPLE)
    docs["large_vexillary_diagram.txt"] = render_signed(large)
    docs["large_vexillary.json"] = dumps(_build_record(LARGE_TRIPLE))

    y = lyd_from_triple(PAIRED_TRIPLE)
    docs["paired_lyd.txt"] = render_lyd(y) + render_lyd(lyd_dual(y))
    docs["paired_lyd.json"] = dumps(
        {
            "lyd": lyd_to_json(y),
            "dual": lyd_to_json(lyd_dual(y)),
            "permutation": perm_to_json(lyd_to_perm(y)),
            "dual_permutation": perm_to_json(lyd_to_perm(lyd_dual(y))),
        }
    )

    text, steps = [], []
    for shape, labels, m in REMOVAL_STEPS:
        before = LabelledYoungDiagram(shape, labels)
        after = remove_label(before, m)
        text.append(f"remove {m}\n" + render_lyd(before) + render_lyd(after))
        steps.append({"before": lyd_to_json(before), "m": m, "after": lyd_to_json(after)})
    docs["removal_sequence.txt"] = "\n".join(text)
    docs["removal_sequence.json"] = dumps(steps)

    docs["stanley_examples.json"] = dumps(
        [{"permutation": perm_to_json(w), "expansion": expansion_to_json(stanley_h(w))} for w in STANLEY_INPUTS]
    )
    return docs
