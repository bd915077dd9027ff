"""Splitter-theorem moves: one-step extensions and bounded reachability.

Both moves (adding an edge between non-adjacent vertices, splitting a vertex
of degree >= 4) grow the edge count by exactly one, so reachability search is
monotone and prunes any state larger than the target.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .canon import canonical_form
from .graph import Graph, SplitSpec, add_edge, all_split_specs, is_k_connected, split_vertex
from .minors import has_minor, has_topological_minor


@dataclass(frozen=True)
class ExtensionStep:
    kind: str  # add_edge | split
    u: int = -1
    v: int = -1
    spec: Optional[SplitSpec] = None
    result_canonical: str = ""

    def describe(self) -> dict:
        if self.kind == "add_edge":
            return {"kind": "add_edge", "u": self.u, "v": self.v,
                    "result_canonical": self.result_canonical}
        return {
            "kind": "split",
            "vertex": self.spec.vertex,
            "side_a": sorted(self.spec.a),
            "side_b": sorted(self.spec.b),
            "result_canonical": self.result_canonical,
        }


def enumerate_extensions(g: Graph) -> list[tuple[ExtensionStep, Graph]]:
    """One representative per isomorphism class of one-step extensions.

    Edge additions are enumerated before splits; within each kind the first
    representative in ascending order is kept.
    """
    seen: set[str] = set()
    out: list[tuple[ExtensionStep, Graph]] = []
    for u, v in g.non_edges():
        h = add_edge(g, u, v)
        cf = canonical_form(h)
        if cf not in seen:
            seen.add(cf)
            out.append((ExtensionStep("add_edge", u=u, v=v, result_canonical=cf), h))
    for spec in all_split_specs(g):
        h = split_vertex(g, spec)
        cf = canonical_form(h)
        if cf not in seen:
            seen.add(cf)
            out.append((ExtensionStep("split", spec=spec, result_canonical=cf), h))
    return out


def split_classes(g: Graph) -> list[Graph]:
    """Isomorphism classes of single-vertex splits of g."""
    return [h for step, h in enumerate_extensions(g) if step.kind == "split"]


def splitter_reach(start: Graph, target: Graph,
                   max_steps: int) -> Optional[list[ExtensionStep]]:
    """Shortest extension sequence from start to (an isomorph of) target.

    Breadth-first over canonical forms; states exceeding the target's order
    or size are pruned.  Returns None when the target is out of reach within
    ``max_steps``.
    """
    for g, who in ((start, "start"), (target, "target")):
        if not is_k_connected(g, 3):
            warnings.warn(f"splitter_reach: {who} graph is not 3-connected",
                          stacklevel=2)
    target_cf = canonical_form(target)
    if canonical_form(start) == target_cf:
        return []
    frontier: list[tuple[Graph, list[ExtensionStep]]] = [(start, [])]
    visited = {canonical_form(start)}
    for _ in range(max_steps):
        nxt: list[tuple[Graph, list[ExtensionStep]]] = []
        for g, steps in frontier:
            for step, h in enumerate_extensions(g):
                if h.n > target.n or h.m > target.m:
                    continue
                if step.result_canonical in visited:
                    continue
                visited.add(step.result_canonical)
                path = steps + [step]
                if step.result_canonical == target_cf:
                    return path
                nxt.append((h, path))
        frontier = nxt
        if not frontier:
            return None
    return None


def check_subdivision_promotion(host: Graph, pattern: Graph) -> bool:
    """Whether the minor-to-subdivision promotion holds for this pair:
    a pattern minor with no split-of-pattern minor forces a subdivision.
    Vacuously true when the antecedent fails."""
    if has_minor(host, pattern) is None:
        return True
    for h in split_classes(pattern):
        if has_minor(host, h) is not None:
            return True
    return has_topological_minor(host, pattern) is not None
