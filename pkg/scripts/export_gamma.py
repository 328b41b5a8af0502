#!/usr/bin/env python3
"""Export the lowering digraph on heights of H^n — either the full graph on
individual heights or the reduced graph on equivalence classes — as JSON or
Graphviz dot."""

import argparse
import json
import sys

from adinkra import heights


def full_edges(n: int) -> list[tuple[int, int]]:
    src, _, dst = heights.lowering_edges(n)
    return sorted(zip(src.tolist(), dst.tolist()))


def reduced_edges(n: int) -> list[tuple[int, int]]:
    _, edges = heights.reduced_lowering_edges(n)
    return sorted(edges)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=4, choices=range(1, 6))
    parser.add_argument("--reduced", action="store_true",
                        help="collapse heights to equivalence classes")
    parser.add_argument("--format", choices=("json", "dot"), default="json")
    parser.add_argument("--out", metavar="FILE", help="write here instead of stdout")
    args = parser.parse_args()

    edges = reduced_edges(args.n) if args.reduced else full_edges(args.n)
    kind = "classes" if args.reduced else "heights"

    if args.format == "json":
        text = json.dumps({"n": args.n, "nodes": kind, "edges": edges}, indent=2)
    else:
        lines = [f"digraph gamma_{args.n} {{"]
        lines += [f"  {a} -> {b};" for a, b in edges]
        lines.append("}")
        text = "\n".join(lines)

    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
        print(f"wrote {len(edges)} edges to {args.out}", file=sys.stderr)
    else:
        print(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
