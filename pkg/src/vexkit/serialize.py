"""Wire formats: comma-separated one-line words and JSON documents.

All JSON is emitted with sorted keys, compact separators after commas and
colons, UTF-8 (``ensure_ascii=False``) and a trailing newline, so output is
byte-stable.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .core import SignedPermutation
from .diagrams import BasicTriple
from .errors import InvalidPermutationError
from .lyd import LabelledYoungDiagram
from .transitions import SchurPExpansion
from .triples import Triple, triple_validate


def parse_ints(text: str) -> tuple[int, ...]:
    """``"2,-4,-3,-1"`` -> ``(2, -4, -3, -1)``; blank text is the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse {text!r} as comma-separated integers") from exc


def parse_perm(text: str) -> SignedPermutation:
    text = text.strip()
    if text in ("", "id"):
        return SignedPermutation(())
    try:
        return SignedPermutation(parse_ints(text))
    except ValueError as exc:
        raise InvalidPermutationError(str(exc)) from exc


def format_oneline(w: SignedPermutation) -> str:
    return ",".join(map(str, w.window))


def perm_to_json(w: SignedPermutation) -> dict[str, Any]:
    return {"window": list(w.window)}


def perm_from_json(obj: dict[str, Any]) -> SignedPermutation:
    return SignedPermutation(tuple(obj["window"]))


def triple_to_json(t: Triple) -> dict[str, Any]:
    return {"k": list(t.k), "p": list(t.p), "q": list(t.q)}


def triple_from_json(obj: dict[str, Any]) -> Triple:
    return triple_validate(obj["k"], obj["p"], obj["q"])


def lyd_to_json(y: LabelledYoungDiagram) -> dict[str, Any]:
    return {"shape": list(y.shape.parts), "labels": list(y.labels)}


def lyd_from_json(obj: dict[str, Any]) -> LabelledYoungDiagram:
    return LabelledYoungDiagram(tuple(obj["shape"]), tuple(obj["labels"]))


def expansion_to_json(h: SchurPExpansion) -> list[dict[str, Any]]:
    return [{"partition": list(lam), "coeff": c} for lam, c in h.sorted_terms()]


def expansion_from_json(obj: list[dict[str, Any]]) -> SchurPExpansion:
    return SchurPExpansion([(tuple(t["partition"]), t["coeff"]) for t in obj])


def essential_to_json(ess: Iterable[BasicTriple]) -> list[dict[str, int]]:
    return [{"k": k, "p": p, "q": q} for k, p, q in sorted(ess)]


def essential_from_json(obj: list[dict[str, int]]) -> list[BasicTriple]:
    return [BasicTriple(t["k"], t["p"], t["q"]) for t in obj]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"
