"""Print the worked examples (diagrams, labelled Young diagrams, expansions).

    python3 scripts/reproduce_examples.py            # print everything
    python3 scripts/reproduce_examples.py --write tests/golden
"""

import argparse
from pathlib import Path

from vexkit.gallery import documents


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--write", type=Path, help="write each document into this directory instead of printing")
    args = ap.parse_args()

    for name, text in documents().items():
        if args.write:
            args.write.mkdir(parents=True, exist_ok=True)
            (args.write / name).write_bytes(text.encode("utf-8"))
            print(f"wrote {args.write / name}")
        else:
            print(f"==> {name}")
            print(text, end="" if text.endswith("\n") else "\n")


if __name__ == "__main__":
    main()
