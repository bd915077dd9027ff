"""Canonical labeling, automorphism groups, and orbit enumeration.

Canonical forms come from individualization-refinement over the coarsest
equitable partition, branching on the first non-singleton cell with targets
tried in ascending vertex order.  Two graphs are isomorphic iff their
canonical forms are byte-equal.  Automorphisms discovered as equal-code
leaves are reused to prune sibling branches and generate the full group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .formats import graph_to_graph6
from .graph import Graph, SplitSpec


def _popcount(x: int) -> int:
    return x.bit_count()


def perm_compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a o b)[i] = a[b[i]] (apply b first)."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inverse(a: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    for u, v in g.edges():
        if not g.has_edge(perm[u], perm[v]):
            return False
    return True


# ---------------------------------------------------------------------------
# Equitable refinement


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Refine ``cells`` to the coarsest equitable partition.

    ``splitters`` is a work list of vertex masks used to split other cells by
    neighbor counts; new fragments are enqueued until stable.  Fragment order
    (ascending count) depends only on the partition, keeping the result
    isomorphism-invariant.
    """
    cells = [list(c) for c in cells]
    queue = list(splitters)
    while queue:
        smask = queue.pop(0)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) > 1:
                counts: dict[int, list[int]] = {}
                for v in cell:
                    counts.setdefault(_popcount(adj[v] & smask), []).append(v)
                if len(counts) > 1:
                    parts = [counts[k] for k in sorted(counts)]
                    cells[i : i + 1] = parts
                    for p in parts:
                        pm = 0
                        for v in p:
                            pm |= 1 << v
                        queue.append(pm)
                    i += len(parts) - 1
            i += 1
    return cells


def _initial_partition(g: Graph) -> list[list[int]]:
    if g.n == 0:
        return []
    full = (1 << g.n) - 1
    return _refine(g._adj, [list(range(g.n))], [full])


# ---------------------------------------------------------------------------
# Canonical search


class _CanonSearch:
    AUT_PRUNE_CAP = 512  # automorphisms consulted per prune check

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g._adj
        self.n = g.n
        self.first_code = None
        self.first_order = None
        self.best_code = None
        self.best_order = None
        self.auts: list[tuple[int, ...]] = []
        self._aut_seen: set[tuple[int, ...]] = set()

    def run(self):
        if self.n == 0:
            self.best_code = ()
            self.best_order = ()
            return self
        self._node(_initial_partition(self.g), [])
        return self

    def _code_for(self, order: Sequence[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        out = []
        for v in order:
            row = 0
            m = self.adj[v]
            while m:
                low = m & -m
                row |= 1 << pos[low.bit_length() - 1]
                m ^= low
            out.append(row)
        return tuple(out)

    def _record_aut(self, order_a: Sequence[int], order_b: Sequence[int]) -> None:
        sigma = [0] * self.n
        for i in range(self.n):
            sigma[order_a[i]] = order_b[i]
        sig = tuple(sigma)
        if sig not in self._aut_seen and any(sig[i] != i for i in range(self.n)):
            self._aut_seen.add(sig)
            self.auts.append(sig)
            inv = perm_inverse(sig)
            if inv not in self._aut_seen:
                self._aut_seen.add(inv)
                self.auts.append(inv)

    def _leaf(self, cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        code = self._code_for(order)
        if self.first_code is None:
            self.first_code = code
            self.first_order = order
            self.best_code = code
            self.best_order = order
            return
        if code == self.first_code:
            self._record_aut(self.first_order, order)
        if code == self.best_code and order != self.best_order:
            self._record_aut(self.best_order, order)
        if code < self.best_code:
            self.best_code = code
            self.best_order = order

    def _node(self, cells: list[list[int]], prefix: list[int]) -> None:
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target is None:
            self._leaf(cells)
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if self._pruned(v, explored, prefix):
                continue
            newcells = (
                cells[:target] + [[v], [w for w in cells[target] if w != v]] + cells[target + 1 :]
            )
            refined = _refine(self.adj, newcells, [1 << v])
            self._node(refined, prefix + [v])
            explored.append(v)

    def _pruned(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        if not explored:
            return False
        for sigma in self.auts[: self.AUT_PRUNE_CAP]:
            if sigma[v] == v:
                continue
            ok = True
            for p in prefix:
                if sigma[p] != p:
                    ok = False
                    break
            if ok:
                for w in explored:
                    if sigma[w] == v:
                        return True
        return False


@lru_cache(maxsize=65536)
def _canon_cached(g: Graph) -> tuple[str, tuple[tuple[int, ...], ...], tuple[int, ...]]:
    search = _CanonSearch(g).run()
    order = search.best_order
    # labeling: vertex order[i] gets new index i
    perm = perm_inverse(tuple(order)) if g.n else ()
    canon = g.relabel(perm) if g.n else g
    return graph_to_graph6(canon), tuple(search.auts), tuple(perm)


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabeled graph."""
    return _canon_cached(g)[0]


def canonical_graph(g: Graph) -> Graph:
    from .formats import graph_from_graph6

    return graph_from_graph6(canonical_form(g))


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """perm with perm[v] = canonical index of v."""
    return _canon_cached(g)[2]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# Group machinery


@dataclass(frozen=True)
class AutGroup:
    order: int
    generators: tuple[tuple[int, ...], ...]
    canonical_form: str

    def vertex_orbits(self, n: int) -> list[frozenset]:
        return orbits_of(range(n), self.generators, lambda s, v: s[v])


def group_order(n: int, gens: Iterable[Sequence[int]]) -> int:
    """Order of <gens> by a deterministic Schreier-Sims chain."""
    gens = [tuple(g) for g in gens]
    gens = [g for g in gens if any(g[i] != i for i in range(n))]
    if not gens:
        return 1
    b = min(i for g in gens for i in range(n) if g[i] != i)
    identity = tuple(range(n))
    transversal = {b: identity}
    frontier = [b]
    while frontier:
        p = frontier.pop(0)
        t = transversal[p]
        for g in gens:
            q = g[p]
            if q not in transversal:
                transversal[q] = perm_compose(g, t)
                frontier.append(q)
    subgens = set()
    for p, t in transversal.items():
        for g in gens:
            u_inv = perm_inverse(transversal[g[p]])
            s = perm_compose(u_inv, perm_compose(g, t))
            if any(s[i] != i for i in range(n)):
                subgens.add(s)
    return len(transversal) * group_order(n, subgens)


def automorphism_group(g: Graph) -> AutGroup:
    form, auts, _ = _canon_cached(g)
    return AutGroup(
        order=group_order(g.n, auts),
        generators=auts,
        canonical_form=form,
    )


# ---------------------------------------------------------------------------
# Orbits of labeled objects under the automorphism group


def orbits_of(
    objects: Iterable[Hashable],
    generators: Iterable[Sequence[int]],
    action: Callable,
) -> list[frozenset]:
    """Partition ``objects`` into orbits under the generated group.

    ``action(perm, obj)`` must return an object of the same kind; orbits are
    closed by breadth-first application of the generators, so only the
    generating set is needed.
    """
    objs = list(objects)
    index = {o: i for i, o in enumerate(objs)}
    gens = [tuple(p) for p in generators]
    seen = [False] * len(objs)
    out = []
    for i, o in enumerate(objs):
        if seen[i]:
            continue
        orbit = {o}
        queue = [o]
        seen[i] = True
        while queue:
            cur = queue.pop()
            for p in gens:
                img = action(p, cur)
                if img not in orbit:
                    if img not in index:
                        raise ValueError(f"action left the object family: {img!r}")
                    orbit.add(img)
                    seen[index[img]] = True
                    queue.append(img)
        out.append(frozenset(orbit))
    return out


def orbit_representatives(
    g: Graph,
    objects: Iterable[Hashable],
    action: Callable,
) -> list[tuple[Hashable, int]]:
    """One representative per orbit of ``objects`` under Aut(g), with sizes.

    Representatives are the orbit minima under a stable sort key, listed in
    that same order; orbit sizes sum to the number of objects.
    """
    gens = automorphism_group(g).generators
    reps = []
    for orbit in orbits_of(objects, gens, action):
        rep = min(orbit, key=_sort_key)
        reps.append((rep, len(orbit)))
    reps.sort(key=lambda t: _sort_key(t[0]))
    return reps


def _sort_key(obj):
    if isinstance(obj, SplitSpec):
        return (2, obj.key())
    if isinstance(obj, frozenset):
        inner = sorted(_sort_key(x) for x in obj)
        return (1, tuple(inner))
    if isinstance(obj, tuple):
        return (1, tuple(_sort_key(x) for x in obj))
    return (0, obj)


# standard actions ----------------------------------------------------------


def act_vertex(perm: Sequence[int], v: int) -> int:
    return perm[v]


def act_vertex_tuple(perm: Sequence[int], t: tuple) -> tuple:
    return tuple(perm[v] for v in t)


def act_vertex_set(perm: Sequence[int], s: frozenset) -> frozenset:
    return frozenset(perm[v] for v in s)


act_edge = act_vertex_set  # an edge is a 2-element vertex set


def act_edge_pair(perm: Sequence[int], pair: frozenset) -> frozenset:
    return frozenset(frozenset(perm[v] for v in e) for e in pair)


def act_split_spec(perm: Sequence[int], spec: SplitSpec) -> SplitSpec:
    return SplitSpec(
        perm[spec.vertex],
        frozenset(perm[v] for v in spec.a),
        frozenset(perm[v] for v in spec.b),
    )
