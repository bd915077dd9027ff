"""Segments, barks, unstable fragments, and stable-bridge analysis.

A bridge of a subdivision image is unstable when all its attachments fit
inside one fragment: a branch vertex together with one whole segment, two
segments sharing an end, or the three segments at a degree-3 branch vertex.
Stable bridges are the ones no local rerouting of the subdivision absorbs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, BridgeData, bridges
from .minors import SubdivisionMap, subdivision_maps


@dataclass(frozen=True)
class Bark:
    center: int  # pattern vertex
    vertices: frozenset  # eta(v) plus internals of segments ending at eta(v)


@dataclass(frozen=True)
class Fragment:
    kind: str  # vertex_plus_segment | two_segments_shared_end | three_segments_at_degree3
    anchor: tuple  # (v, edge) | (edge, edge) | (v,)
    vertices: frozenset


@dataclass(frozen=True)
class BridgeClassification:
    bridge: BridgeData
    stable: bool
    witness_fragment: Optional[Fragment]


def _pattern_degree(eta: SubdivisionMap, v: int) -> int:
    return sum(1 for e in eta.segments if v in e)


def barks(host: Graph, eta: SubdivisionMap) -> list[Bark]:
    out = []
    for v, hv in sorted(eta.branch_vertices.items()):
        verts = {hv}
        for edge, path in eta.segments.items():
            if v in edge:
                verts.update(path[1:-1])
        out.append(Bark(v, frozenset(verts)))
    return out


def enumerate_unstable_fragments(host: Graph, eta: SubdivisionMap) -> list[Fragment]:
    """All fragments of the three kinds, in deterministic order.

    vertex_plus_segment ranges over every (branch vertex, segment) pair; the
    degree for the third kind is taken in the subdivision image.
    """
    frags = []
    edge_keys = sorted(eta.segments)
    for v in sorted(eta.branch_vertices):
        hv = eta.branch_vertices[v]
        for e in edge_keys:
            verts = frozenset(eta.segments[e]) | {hv}
            frags.append(Fragment("vertex_plus_segment", (v, e), verts))
    for e1, e2 in combinations(edge_keys, 2):
        if set(e1) & set(e2):
            verts = frozenset(eta.segments[e1]) | frozenset(eta.segments[e2])
            frags.append(Fragment("two_segments_shared_end", (e1, e2), verts))
    for v in sorted(eta.branch_vertices):
        incident = [e for e in edge_keys if v in e]
        if len(incident) == 3:
            verts = frozenset()
            for e in incident:
                verts |= frozenset(eta.segments[e])
            frags.append(Fragment("three_segments_at_degree3", (v,), verts))
    return frags


def classify_bridges(host: Graph, eta: SubdivisionMap) -> list[BridgeClassification]:
    """Classify every bridge of the subdivision image as stable or unstable,
    attaching the first covering fragment as the instability witness."""
    frags = enumerate_unstable_fragments(host, eta)
    out = []
    for br in bridges(host, eta.image_vertices()):
        witness = None
        for fr in frags:
            if br.attachments <= fr.vertices:
                witness = fr
                break
        out.append(BridgeClassification(br, stable=witness is None, witness_fragment=witness))
    return out


def is_spanning(host: Graph, eta: SubdivisionMap) -> bool:
    return eta.image_vertices() == frozenset(range(host.n))


def classification_to_dict(cls: BridgeClassification) -> dict:
    """JSON form of one bridge classification (ships next to the witness)."""
    d = {
        "schema": "minorsmith.witness/1",
        "kind": "bridge-classification",
        "interior": sorted(cls.bridge.interior),
        "attachments": sorted(cls.bridge.attachments),
        "stable": cls.stable,
    }
    if cls.witness_fragment is not None:
        d["fragment"] = {
            "kind": cls.witness_fragment.kind,
            "anchor": repr(cls.witness_fragment.anchor),
            "vertices": sorted(cls.witness_fragment.vertices),
        }
    return d


def find_stable_subdivision(host: Graph, pattern: Graph) -> Optional[SubdivisionMap]:
    """First subdivision whose segments are induced host paths and whose
    bridges are all stable, or None.

    Exhausts subdivision embeddings; the image of the first-placed pattern
    vertex is restricted to host vertex orbit representatives, which is safe
    because host automorphisms preserve both properties.
    """
    from .canon import automorphism_group, orbits_of

    gens = automorphism_group(host).generators
    reps = sorted(
        min(orbit) for orbit in orbits_of(range(host.n), gens, lambda p, v: p[v])
    )
    for eta in subdivision_maps(host, pattern, induced_only=True, first_candidates=reps):
        if all(c.stable for c in classify_bridges(host, eta)):
            return eta
    return None
