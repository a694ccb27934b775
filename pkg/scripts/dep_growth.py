#!/usr/bin/env python3
"""How the largest departing-path array grows with graph size.

Two families: random sparse graphs (short primary paths, tiny arrays) and
the nested-arcs construction whose arrays genuinely grow like sqrt(n).
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sdo.departing import build_dep
from sdo.generators import tree_plus_chords
from sdo.graphs import Graph
from sdo.oracle import build_oracle
from sdo.spt import dijkstra, tree_path


def nested_arcs(k: int) -> tuple[Graph, int]:
    pairs = [(i, i + 1) for i in range(k)]
    t = k + 1
    nxt = k + 2
    for j in range(k, -1, -1):
        prev = j
        for _ in range(2 * (k - j)):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
        pairs.append((prev, t))
    return Graph.from_pairs(nxt, pairs), t


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="64,256,1024",
                    type=lambda s: [int(x) for x in s.split(",")])
    ap.add_argument("--seeds", default="11,12,13,14,15",
                    type=lambda s: [int(x) for x in s.split(",")])
    args = ap.parse_args()

    print("random sparse (m ~ 3n), max |Dep| at the root over seeds:")
    for n in args.sizes:
        peak = 0
        for seed in args.seeds:
            root = build_oracle(tree_plus_chords(n, 2 * n, seed), 0).root
            if root.dep is not None:
                peak = max(peak, max((len(a) for a in root.dep), default=0))
        print(f"  n={n:>6}  max|Dep|={peak}")

    print("nested arcs, |Dep(t)| against sqrt(n):")
    for k in (8, 16, 32, 64):
        g, t = nested_arcs(k)
        spt = dijkstra(g, 0)
        dep, _ = build_dep(g, spt, tree_path(spt, 0, k))
        print(f"  n={g.n:>6}  |Dep(t)|={len(dep[t]):>4}  sqrt(n)={g.n ** 0.5:6.1f}")


if __name__ == "__main__":
    main()
