"""``vexkit`` command line.

Exit codes: 0 success or a true verdict, 1 a false verdict, 2 bad input,
3 a counterexample, 4 a resource limit (node budget or rank cap).
Permutations are comma-separated one-line words; put ``--`` before a word
that starts with a minus sign (``vexkit stanley -- -4,-2,-1,3``).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import SignedPermutation, embed, sp_length
from .diagrams import render_signed, render_window, sp_essential_set
from .errors import (
    BudgetExceededError,
    CapExceededError,
    InvalidDiagramError,
    InvalidPermutationError,
    InvalidTripleError,
    NotVexillaryError,
)
from .lyd import lyd_from_triple, lyd_of_perm, render_lyd
from .serialize import (
    dumps,
    essential_to_json,
    expansion_to_json,
    lyd_to_json,
    parse_ints,
    parse_perm,
    perm_to_json,
    triple_to_json,
)
from .transitions import DEFAULT_BUDGET, stanley_h
from .triples import Triple, triple_lambda, triple_to_perm, triple_validate
from .verify import run_suites
from .vexillary import MODES, avoids_nine, is_vexillary, rank_cap

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_COUNTEREXAMPLE, EXIT_BUDGET = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class JobConfig:
    rank_cap: int = 7
    jobs: int = 1
    format: str = "text"
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.rank_cap < 0:
            raise ValueError("rank cap must be >= 0")
        if self.jobs < 1:
            raise ValueError("worker count must be >= 1")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.budget < 1:
            raise ValueError("node budget must be >= 1")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> JobConfig:
        return cls(rank_cap(), args.jobs, args.format, args.budget)


def _ess_text(w: SignedPermutation) -> str:
    return "{" + ", ".join(f"({k},{p},{q})" for k, p, q in sorted(sp_essential_set(w))) + "}"


def _emit(cfg: JobConfig, text: str, obj: object) -> None:
    sys.stdout.write(dumps(obj) if cfg.format == "json" else text)


def _triple_from_args(args: argparse.Namespace) -> Triple:
    return triple_validate(parse_ints(args.k), parse_ints(args.p), parse_ints(args.q))


def cmd_build(args: argparse.Namespace, cfg: JobConfig) -> int:
    t = _triple_from_args(args)
    w = triple_to_perm(t)
    lam = triple_lambda(t)
    text = f"w = {w}\nlambda = {lam}\nlength = {sp_length(w)}\nEss(w) = {_ess_text(w)}\n"
    _emit(
        cfg,
        text,
        {
            "triple": triple_to_json(t),
            "permutation": perm_to_json(w),
            "lambda": list(lam.parts),
            "length": sp_length(w),
            "essential": essential_to_json(sp_essential_set(w)),
        },
    )
    return EXIT_OK


def cmd_check(args: argparse.Namespace, cfg: JobConfig) -> int:
    w = parse_perm(args.perm)
    report = is_vexillary(w, args.mode)
    verdict = report.vexillary
    witness = avoids_nine(w) if not verdict else None
    if verdict:
        text = f"{w}: vexillary (mode={args.mode})\n"
    else:
        pat, pos = witness  # type: ignore[misc]
        text = (
            f"{w}: not vexillary (mode={args.mode})\n"
            f"witness [{' '.join(map(str, pat))}] at ({','.join(map(str, pos))})\n"
        )
    obj: dict[str, object] = {
        "permutation": perm_to_json(w),
        "mode": args.mode,
        "vexillary": verdict,
        "verdicts": dict(sorted(report.verdicts.items())),
    }
    if witness is not None:
        obj["witness"] = {"pattern": list(witness[0]), "positions": list(witness[1])}
    _emit(cfg, text, obj)
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_verify(args: argparse.Namespace, cfg: JobConfig) -> int:
    reports = run_suites([args.suite], args.n, jobs=cfg.jobs, cap=cfg.rank_cap)
    lines = []
    for r in reports:
        lines.append(r.line())
        lines.extend(f"  note: {note}" for note in r.notes)
        lines.extend(f"  counterexample #{idx}: {msg}" for idx, msg in r.failures)
    _emit(cfg, "\n".join(lines) + "\n", [r.to_json() for r in reports])
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_render(args: argparse.Namespace, cfg: JobConfig) -> int:
    if args.perm is not None:
        t, w = None, parse_perm(args.perm)
    else:
        t = _triple_from_args(args)
        w = triple_to_perm(t)
    w = SignedPermutation(w.canonical)
    obj: dict[str, object] = {"what": args.what, "permutation": perm_to_json(w)}
    if args.what == "diagram":
        text = render_signed(w)
    elif args.what == "window":
        text = render_window(embed(w, "odd", len(w.canonical)))
    else:
        y = lyd_from_triple(t) if t is not None else lyd_of_perm(w)
        obj["lyd"] = lyd_to_json(y)
        text = render_lyd(y)
    obj["text"] = text
    _emit(cfg, text, obj)
    return EXIT_OK


def cmd_stanley(args: argparse.Namespace, cfg: JobConfig) -> int:
    w = parse_perm(args.perm)
    h = stanley_h(w, budget=cfg.budget)
    text = "".join(f"P[{','.join(map(str, lam))}]: {c}\n" for lam, c in h.sorted_terms())
    _emit(cfg, text, expansion_to_json(h))
    return EXIT_OK


def cmd_essential(args: argparse.Namespace, cfg: JobConfig) -> int:
    w = parse_perm(args.perm)
    _emit(cfg, f"Ess(w) = {_ess_text(w)}\n", essential_to_json(sp_essential_set(w)))
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget for stanley")


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("-k", default="", help="comma-separated k_1..k_s")
    p.add_argument("-p", default="", help="comma-separated p_1..p_s")
    p.add_argument("-q", default="", help="comma-separated q_1..q_s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vexkit", description="Vexillary signed permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build w(τ) from a triple")
    _add_triple(p)
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="decide vexillarity")
    p.add_argument("perm")
    p.add_argument("--mode", choices=MODES + ("all",), default="patterns")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run exhaustive verification suites over W_n")
    p.add_argument("--suite", choices=("equivalence", "counting", "lyd", "transitions", "diagrams", "all"), default="all")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="ASCII rendering of a permutation or triple")
    p.add_argument("perm", nargs="?", default=None)
    p.add_argument("--what", choices=("diagram", "lyd", "window"), default="diagram")
    _add_triple(p)
    _add_common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("stanley", help="Schur-P expansion of H_w")
    p.add_argument("perm")
    _add_common(p)
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("essential", help="essential set of w")
    p.add_argument("perm")
    _add_common(p)
    p.set_defaults(func=cmd_essential)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    handlers: list[tuple[type[BaseException], int]] = [
        (BudgetExceededError, EXIT_BUDGET),
        (CapExceededError, EXIT_BUDGET),
        (InvalidTripleError, EXIT_INPUT),
        (InvalidPermutationError, EXIT_INPUT),
        (InvalidDiagramError, EXIT_INPUT),
        (NotVexillaryError, EXIT_INPUT),
        (ValueError, EXIT_INPUT),
    ]
    try:
        cfg = JobConfig.from_args(args)
        func: Callable[[argparse.Namespace, JobConfig], int] = args.func
        return func(args, cfg)
    except tuple(h for h, _ in handlers) as exc:
        code = next(c for h, c in handlers if isinstance(exc, h))
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
