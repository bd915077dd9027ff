"""Immutable small-graph representation and structural predicates.

Graphs are simple and undirected, capped at 64 vertices so every adjacency
row fits in one Python int used as a bit vector.  All operations are pure:
edits return new Graph values and never mutate their input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import (
    EditPreconditionViolated,
    InvalidPartition,
    SplitDegreeTooLow,
    TooManyEdges,
)

MAX_VERTICES = 64


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bit-vector rows.

    Equality and hashing are structural (order + adjacency); the optional
    ``labels`` tuple is display metadata and is ignored by both.
    """

    __slots__ = ("n", "_adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) references a vertex >= n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_adj_masks(cls, masks: Iterable[int], labels=None) -> "Graph":
        """Build from per-vertex neighbor masks (validated)."""
        masks = tuple(masks)
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = masks
        g.labels = tuple(labels) if labels is not None else None
        g.validate()
        return g

    def validate(self) -> None:
        if self.n > MAX_VERTICES:
            raise ValueError("too many vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self._adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex range")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in _bits(row):
                if not self._adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at ({v},{u})")

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(_popcount(r) for r in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return _popcount(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((_popcount(r) for r in self._adj), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u]) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if not self._adj[u] >> v & 1
        ]

    def label_of(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ----------------------------------------------------

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        perm = tuple(perm)
        adj = [0] * self.n
        for v, row in enumerate(self._adj):
            nv = perm[v]
            for u in _bits(row):
                adj[nv] |= 1 << perm[u]
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
        return Graph.from_adj_masks(adj, labels)

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, renumbered in ascending order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            for u in _bits(self._adj[v]):
                if u in index:
                    adj[index[v]] |= 1 << index[u]
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Graph.from_adj_masks(adj, labels)

    # -- connectivity helpers ----------------------------------------------

    def component_mask(self, start: int, allowed: Optional[int] = None) -> int:
        """Mask of vertices reachable from ``start`` inside ``allowed``."""
        if allowed is None:
            allowed = (1 << self.n) - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self._adj[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, allowed: Optional[int] = None) -> list[int]:
        """Masks of the connected components inside ``allowed``."""
        if allowed is None:
            allowed = (1 << self.n) - 1
        out = []
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = self.component_mask(v, allowed=rest)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.component_mask(0) == (1 << self.n) - 1

    def connected_within(self, mask: int) -> bool:
        if mask == 0:
            return False
        v = (mask & -mask).bit_length() - 1
        return self.component_mask(v, allowed=mask) == mask


# ---------------------------------------------------------------------------
# Edits


@dataclass(frozen=True)
class Edit:
    """One elementary edit; ``kind`` selects the variant."""

    kind: str  # add_edge | delete_edge | delete_vertex | contract_edge | subdivide_edge
    u: int
    v: int = -1

    KINDS = ("add_edge", "delete_edge", "delete_vertex", "contract_edge", "subdivide_edge")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertices(g, u, v)
    if g.has_edge(u, v) or u == v:
        raise EditPreconditionViolated(f"add_edge({u},{v}): edge exists or loop")
    adj = list(g._adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph.from_adj_masks(adj, g.labels)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertices(g, u, v)
    if not g.has_edge(u, v):
        raise EditPreconditionViolated(f"delete_edge({u},{v}): no such edge")
    adj = list(g._adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph.from_adj_masks(adj, g.labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Delete v; higher indices shift down by one (ids stay dense)."""
    _check_vertices(g, v)
    low = (1 << v) - 1
    adj = []
    for w in range(g.n):
        if w == v:
            continue
        row = g._adj[w] & ~(1 << v)
        adj.append((row & low) | ((row >> (v + 1)) << v))
    labels = None
    if g.labels is not None:
        labels = [g.labels[w] for w in range(g.n) if w != v]
    return Graph.from_adj_masks(adj, labels)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract uv onto the lower endpoint; loops and parallels discarded."""
    _check_vertices(g, u, v)
    if not g.has_edge(u, v):
        raise EditPreconditionViolated(f"contract_edge({u},{v}): no such edge")
    lo, hi = min(u, v), max(u, v)
    merged = (g._adj[lo] | g._adj[hi]) & ~(1 << lo) & ~(1 << hi)
    adj = []
    for w in range(g.n):
        if w == lo:
            adj.append(merged)
        elif w == hi:
            adj.append(0)
        else:
            row = g._adj[w] & ~(1 << hi)
            if merged >> w & 1:
                row |= 1 << lo
            adj.append(row)
    g2 = Graph.from_adj_masks(adj, g.labels)
    return delete_vertex(g2, hi)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by a path u-w-v where w is a fresh vertex (index n)."""
    _check_vertices(g, u, v)
    if not g.has_edge(u, v):
        raise EditPreconditionViolated(f"subdivide_edge({u},{v}): no such edge")
    if g.n + 1 > MAX_VERTICES:
        raise EditPreconditionViolated("vertex capacity exceeded")
    w = g.n
    adj = list(g._adj) + [0]
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    adj[u] |= 1 << w
    adj[v] |= 1 << w
    adj[w] = (1 << u) | (1 << v)
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [f"s{w}"]
    return Graph.from_adj_masks(adj, labels)


def apply_edit(g: Graph, e: Edit) -> Graph:
    if e.kind == "add_edge":
        return add_edge(g, e.u, e.v)
    if e.kind == "delete_edge":
        return delete_edge(g, e.u, e.v)
    if e.kind == "delete_vertex":
        return delete_vertex(g, e.u)
    if e.kind == "contract_edge":
        return contract_edge(g, e.u, e.v)
    if e.kind == "subdivide_edge":
        return subdivide_edge(g, e.u, e.v)
    raise EditPreconditionViolated(f"unknown edit kind {e.kind!r}")


def _check_vertices(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise EditPreconditionViolated(f"vertex {v} not in graph of order {g.n}")


# ---------------------------------------------------------------------------
# Vertex splitting


@dataclass(frozen=True)
class SplitSpec:
    """Split vertex ``v`` with N(v) partitioned into sides a | b.

    The pair (a, b) is unordered; the constructor normalises so the side
    containing the smallest neighbor comes first.
    """

    vertex: int
    a: frozenset
    b: frozenset

    def __post_init__(self):
        a, b = frozenset(self.a), frozenset(self.b)
        if a and b and min(a) > min(b):
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def key(self):
        return (self.vertex, tuple(sorted(self.a)), tuple(sorted(self.b)))


def split_vertex(g: Graph, spec: SplitSpec) -> Graph:
    """Replace v by adjacent v1 (at index v, joined to side a) and v2 (new
    index n, joined to side b).  Edge count grows by exactly one."""
    v = spec.vertex
    _check_vertices(g, v)
    if g.degree(v) < 4:
        raise SplitDegreeTooLow(f"deg({v}) = {g.degree(v)} < 4")
    nbrs = set(g.neighbors(v))
    if (
        spec.a | spec.b != nbrs
        or spec.a & spec.b
        or len(spec.a) < 2
        or len(spec.b) < 2
    ):
        raise InvalidPartition(f"sides {sorted(spec.a)} | {sorted(spec.b)} do not split N({v})")
    if g.n + 1 > MAX_VERTICES:
        raise InvalidPartition("vertex capacity exceeded")
    w = g.n
    adj = list(g._adj) + [0]
    for x in nbrs:
        adj[x] &= ~(1 << v)
    adj[v] = 0
    for x in spec.a:
        adj[v] |= 1 << x
        adj[x] |= 1 << v
    for x in spec.b:
        adj[w] |= 1 << x
        adj[x] |= 1 << w
    adj[v] |= 1 << w
    adj[w] |= 1 << v
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [g.labels[v] + "'"]
    return Graph.from_adj_masks(adj, labels)


def split_specs(g: Graph, v: int) -> list[SplitSpec]:
    """All valid splits at v (unordered sides, each of size >= 2)."""
    nbrs = g.neighbors(v)
    d = len(nbrs)
    if d < 4:
        return []
    out = []
    anchor = nbrs[0]
    rest = nbrs[1:]
    # anchor stays on side a; choose its companions
    for k in range(1, d - 1):
        for extra in combinations(rest, k):
            a = frozenset((anchor,) + extra)
            b = frozenset(nbrs) - a
            if len(b) >= 2:
                out.append(SplitSpec(v, a, b))
    return out


def all_split_specs(g: Graph) -> list[SplitSpec]:
    out = []
    for v in g.vertices():
        out.extend(split_specs(g, v))
    return out


# ---------------------------------------------------------------------------
# Connectivity


def is_k_connected(g: Graph, k: int) -> bool:
    """|V| > k and no cut of fewer than k vertices (exhaustive enumeration)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n <= k:
        return False
    if not g.is_connected():
        return False
    full = (1 << g.n) - 1
    for size in range(1, k):
        for cut in combinations(range(g.n), size):
            rest = full
            for v in cut:
                rest &= ~(1 << v)
            if rest and len(g.components(rest)) > 1:
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity via unit-capacity max flow (Menger).

    Independent of the cut-enumeration path in is_k_connected; the two are
    cross-checked in the test corpus.
    """
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    for s in range(n):
        for t in range(n):
            if s != t and not g.has_edge(s, t):
                best = min(best, _max_vertex_disjoint_paths(g, s, t))
    return best


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    # node-split digraph: v_in = 2v, v_out = 2v+1, all capacities 1
    n = g.n
    cap = {}

    def arc(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        # BFS augmenting path
        prev = {source: None}
        queue = [source]
        while queue and sink not in prev:
            a = queue.pop(0)
            for (x, y), c in cap.items():
                if x == a and c > 0 and y not in prev:
                    prev[y] = a
                    queue.append(y)
        if sink not in prev:
            return flow
        y = sink
        while prev[y] is not None:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1


def is_internally_4_connected(g: Graph) -> bool:
    """3-connected, >= 5 vertices, and every 3-cut is independent and splits
    off a single vertex; K3,3 is admitted by the definition's special clause."""
    if g.n < 5:
        return False
    if not is_k_connected(g, 3):
        return False
    if _is_k33(g):
        return True
    full = (1 << g.n) - 1
    for cut in combinations(range(g.n), 3):
        a, b, c = cut
        rest = full & ~(1 << a) & ~(1 << b) & ~(1 << c)
        comps = g.components(rest)
        if len(comps) < 2:
            continue
        if len(comps) != 2:
            return False
        if min(_popcount(x) for x in comps) != 1:
            return False
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            return False
    return True


def _is_k33(g: Graph) -> bool:
    if g.n != 6 or g.m != 9 or g.degree_sequence() != (3,) * 6:
        return False
    part = bipartition(g)
    return part is not None and {len(part[0]), len(part[1])} == {3}


# ---------------------------------------------------------------------------
# Bridges


@dataclass(frozen=True)
class BridgeData:
    """One bridge of a subgraph H: a component of G - V(H) plus attachments.

    Edges with both ends in H are never bridges.
    """

    interior: frozenset
    attachments: frozenset
    edges: tuple  # connecting edges (interior_vertex, attachment)


def bridges(g: Graph, h_vertices: Iterable[int]) -> list[BridgeData]:
    h_mask = 0
    for v in h_vertices:
        h_mask |= 1 << v
    outside = ((1 << g.n) - 1) & ~h_mask
    out = []
    for comp in g.components(outside):
        attach = 0
        conn = []
        for v in _bits(comp):
            hits = g.neighbors_mask(v) & h_mask
            attach |= hits
            conn.extend((v, a) for a in _bits(hits))
        out.append(
            BridgeData(
                interior=frozenset(_bits(comp)),
                attachments=frozenset(_bits(attach)),
                edges=tuple(sorted(conn)),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Structural predicates


@dataclass(frozen=True)
class StructuralSummary:
    bipartition: Optional[tuple[frozenset, frozenset]]
    girth: float  # int, or math.inf for forests
    has_triangle: bool
    degree_sequence: tuple[int, ...]


def bipartition(g: Graph) -> Optional[tuple[frozenset, frozenset]]:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(g.neighbors_mask(v)):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return (
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


def girth(g: Graph) -> float:
    """Length of a shortest cycle; math.inf when the graph is a forest."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            if dist[v] * 2 >= best:
                break
            for u in _bits(g.neighbors_mask(v)):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[v] + dist[u] + 1)
    return best


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.neighbors_mask(u) & g.neighbors_mask(v):
            return True
    return False


def structural_predicates(g: Graph) -> StructuralSummary:
    return StructuralSummary(
        bipartition=bipartition(g),
        girth=girth(g),
        has_triangle=has_triangle(g),
        degree_sequence=g.degree_sequence(),
    )


def line_graph(g: Graph) -> Graph:
    """Vertices are g's edges (sorted); adjacency is edge incidence."""
    es = g.edges()
    if len(es) > MAX_VERTICES:
        raise TooManyEdges(f"{len(es)} edges > {MAX_VERTICES}")
    pairs = []
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if len({a, b} & {c, d}) == 1:
                pairs.append((i, j))
    return Graph(len(es), pairs)
