#!/usr/bin/env python3
"""Regenerate the unlabeled-graph corpora under data/.

Level n+1 is built from level n by attaching one new vertex to every subset
of existing vertices and deduplicating by canonical form; the per-level
counts are checked against the known unlabeled-graph numbers so a canonical-
form bug cannot silently corrupt the corpus.

Usage: python tools/gen_all_graphs.py [MAX_N] [OUTDIR]
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from minorsmith.canon import canonical_form  # noqa: E402
from minorsmith.graph import Graph  # noqa: E402

# numbers of unlabeled simple graphs on 1..9 vertices
EXPECTED = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]


def extend_all(parents, n):
    """Canonical forms of all graphs on n+1 vertices from n-vertex parents."""
    seen = {}
    for adj in parents:
        for mask in range(1 << n):
            child = list(adj) + [mask]
            for v in range(n):
                if mask >> v & 1:
                    child[v] |= 1 << n
            g = Graph.from_adj_masks(child)
            cf = canonical_form(g)
            if cf not in seen:
                seen[cf] = g._adj
    return seen


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    outdir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).resolve().parent.parent / "data"
    outdir.mkdir(parents=True, exist_ok=True)

    level = {canonical_form(Graph(1)): (0,)}
    write_level(outdir, 1, level)
    parents = list(level.values())
    for n in range(1, max_n):
        t0 = time.time()
        level = extend_all(parents, n)
        write_level(outdir, n + 1, level)
        count = len(level)
        want = EXPECTED[n] if n < len(EXPECTED) else None
        tag = "ok" if want == count else f"MISMATCH want {want}"
        print(f"n={n + 1}: {count} graphs ({tag}) in {time.time() - t0:.1f}s",
              flush=True)
        if want is not None and want != count:
            sys.exit(1)
        parents = list(level.values())

    combined = outdir / "graphs_n_le_8.g6"
    with combined.open("w") as out:
        for n in range(1, min(max_n, 8) + 1):
            out.write((outdir / f"graphs_n{n}.g6").read_text())
    print(f"wrote {combined}", flush=True)


def write_level(outdir, n, level):
    path = outdir / f"graphs_n{n}.g6"
    with path.open("w") as out:
        for cf in sorted(level):
            out.write(cf + "\n")


if __name__ == "__main__":
    main()
