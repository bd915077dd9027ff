"""Decision procedures with witnesses: minors, subdivisions, Hamilton cycles.

All searchers are deterministic (candidates in ascending vertex order, first
witness returned) and every positive answer carries a certificate that
verify_certificate() checks against the host with logic the searchers do not
share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Union

from .errors import HostTooLarge
from .graph import Graph
from .report import WITNESS_SCHEMA

ORACLE_HOST_CAP = 10


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Witness types


@dataclass
class MinorCertificate:
    """Branch sets (pattern vertex -> host vertex set, connected and disjoint)
    plus one chosen host edge per pattern edge."""

    branch_sets: dict
    connecting_edges: dict  # (u, v) with u < v -> (a, b), a in mu(u), b in mu(v)


@dataclass
class SubdivisionMap:
    """Injective branch-vertex map plus internally disjoint segment paths."""

    branch_vertices: dict  # pattern vertex -> host vertex
    segments: dict  # (u, v) with u < v -> host path from eta(u) to eta(v)

    def image_vertices(self) -> frozenset:
        out = set(self.branch_vertices.values())
        for path in self.segments.values():
            out.update(path)
        return frozenset(out)


@dataclass
class HamiltonCycle:
    order: tuple  # cyclic vertex sequence, each host vertex exactly once


Witness = Union[MinorCertificate, SubdivisionMap, HamiltonCycle]


# ---------------------------------------------------------------------------
# Minor search


def has_minor(host: Graph, pattern: Graph) -> Optional[MinorCertificate]:
    """First minor model of pattern in host, or None.

    Branches over pattern vertices in decreasing-degree order; branch sets
    grow vertex-by-vertex with bit-vector frontier intersection, pruned by
    boundary feasibility and remaining-vertex counting.
    """
    p = pattern.n
    if p == 0:
        return MinorCertificate({}, {})
    if host.n < p or host.m < pattern.m:
        return None
    order = sorted(range(p), key=lambda v: (-pattern.degree(v), v))
    slot_of = {pv: i for i, pv in enumerate(order)}
    earlier = []  # slot -> slots of already-placed pattern neighbors
    later_cnt = []
    for i, pv in enumerate(order):
        eb = [slot_of[u] for u in pattern.neighbors(pv) if slot_of[u] < i]
        earlier.append(eb)
        later_cnt.append(pattern.degree(pv) - len(eb))

    adj = host._adj
    assigned = [0] * p
    assigned_nbr = [0] * p

    def place(i: int, free: int) -> bool:
        if i == p:
            return True
        slots_left = p - i - 1
        max_size = free.bit_count() - slots_left
        if max_size <= 0:
            return False
        req = [assigned_nbr[j] & free for j in earlier[i]]
        if any(a == 0 for a in req):
            return False
        need = later_cnt[i]

        def grow(S: int, snbr: int, ext: int, banned: int) -> bool:
            if all(S & a for a in req) and (snbr & free & ~S).bit_count() >= need:
                assigned[i] = S
                assigned_nbr[i] = snbr
                if place(i + 1, free & ~S):
                    return True
            if S.bit_count() >= max_size:
                return False
            rest = ext
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                ns = S | low
                if grow(ns, snbr | adj[v], (rest | (adj[v] & free)) & ~banned & ~ns, banned):
                    return True
                banned |= low
            return False

        seeds = req[0] if req else free
        banned_pre = 0
        while seeds:
            low = seeds & -seeds
            seeds ^= low
            s = low.bit_length() - 1
            if grow(low, adj[s], adj[s] & free & ~banned_pre & ~low, banned_pre):
                return True
            banned_pre |= low
        return False

    if not place(0, (1 << host.n) - 1):
        return None
    branch_sets = {}
    for i, pv in enumerate(order):
        branch_sets[pv] = frozenset(_bits(assigned[i]))
    connecting = {}
    for u, v in pattern.edges():
        bu, bv = assigned[slot_of[u]], assigned[slot_of[v]]
        pick = None
        for a in _bits(bu):
            hit = adj[a] & bv
            if hit:
                b = (hit & -hit).bit_length() - 1
                if pick is None or (a, b) < pick:
                    pick = (a, b)
        connecting[(u, v)] = pick
    return MinorCertificate(branch_sets, connecting)


def oracle_has_minor(host: Graph, pattern: Graph) -> bool:
    """Ground-truth minor test by exhaustive assignment enumeration.

    Enumerates every way of giving each pattern vertex a disjoint set of host
    vertices (remaining hosts unused), with straightforward set-based
    connectivity and edge checks; shares no code with has_minor.
    """
    if host.n > ORACLE_HOST_CAP:
        raise HostTooLarge(f"oracle capped at {ORACLE_HOST_CAP} host vertices")
    p = pattern.n
    if p == 0:
        return True
    if p > host.n or pattern.m > host.m:
        return False
    nbrs = [set(host.neighbors(v)) for v in range(host.n)]
    earlier_adj = [[j for j in range(k) if pattern.has_edge(j, k)] for k in range(p)]

    def connected(group: tuple) -> bool:
        todo = {group[0]}
        seen = set()
        members = set(group)
        while todo:
            x = todo.pop()
            seen.add(x)
            todo |= (nbrs[x] & members) - seen
        return seen == members

    def place(k: int, remaining: set, chosen: list) -> bool:
        if k == p:
            return True
        spare = len(remaining) - (p - k - 1)
        pool = sorted(remaining)
        for size in range(1, spare + 1):
            for combo in combinations(pool, size):
                if not connected(combo):
                    continue
                group = set(combo)
                ok = True
                for j in earlier_adj[k]:
                    if not any(nbrs[x] & group for x in chosen[j]):
                        ok = False
                        break
                if not ok:
                    continue
                chosen.append(group)
                if place(k + 1, remaining - group, chosen):
                    return True
                chosen.pop()
        return False

    return place(0, set(range(host.n)), [])


# ---------------------------------------------------------------------------
# Topological minors


def has_topological_minor(host: Graph, pattern: Graph) -> Optional[SubdivisionMap]:
    """First subdivision of pattern in host, or None.

    Places branch vertices in decreasing-degree order and routes each edge to
    the already-placed neighbors immediately, shortest paths first, with
    backtracking across both levels.
    """
    return next(subdivision_maps(host, pattern), None)


def subdivision_maps(host: Graph, pattern: Graph, induced_only: bool = False,
                     first_candidates=None) -> Iterator[SubdivisionMap]:
    """Enumerate subdivisions of pattern in host, deterministically.

    ``induced_only`` restricts segment routing to induced host paths;
    ``first_candidates`` restricts the image of the first (highest-degree)
    pattern vertex, e.g. to orbit representatives.
    """
    p = pattern.n
    if p > host.n or pattern.m > host.m:
        return
    if p == 0:
        yield SubdivisionMap({}, {})
        return
    order = sorted(range(p), key=lambda v: (-pattern.degree(v), v))
    images: dict = {}
    segments: dict = {}
    used = 0  # branch images plus segment internals
    host_deg = [host.degree(v) for v in range(host.n)]

    def route(edges_todo: list, k: int) -> Iterator[SubdivisionMap]:
        nonlocal used
        if not edges_todo:
            yield from place(k + 1)
            return
        pu, pv = edges_todo[0]
        a, b = images[pu], images[pv]
        # internals may not eat vertices the unplaced branch vertices need
        budget = host.n - used.bit_count() - (p - k - 1)
        if budget < 0:
            return
        for path in _paths(host, a, b, blocked=used & ~(1 << a) & ~(1 << b),
                           max_len=budget + 1):
            if induced_only and not _is_induced_path(host, path):
                continue
            internal = 0
            for x in path[1:-1]:
                internal |= 1 << x
            used |= internal
            key = (pu, pv) if pu < pv else (pv, pu)
            segments[key] = tuple(path if pu < pv else reversed(path))
            yield from route(edges_todo[1:], k)
            del segments[key]
            used &= ~internal

    def place(k: int) -> Iterator[SubdivisionMap]:
        nonlocal used
        if k == p:
            yield SubdivisionMap(dict(images), dict(segments))
            return
        if host.n - used.bit_count() < p - k:
            return
        pv = order[k]
        want = pattern.degree(pv)
        candidates = range(host.n) if k or first_candidates is None else first_candidates
        for h in candidates:
            hb = 1 << h
            if used & hb or host_deg[h] < want:
                continue
            images[pv] = h
            used |= hb
            todo = [(u, pv) for u in pattern.neighbors(pv) if u in images and u != pv]
            yield from route(todo, k)
            used &= ~hb
            del images[pv]

    yield from place(0)


def _is_induced_path(host: Graph, path: list) -> bool:
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if host.has_edge(path[i], path[j]):
                return False
    return True


def _paths(host: Graph, a: int, b: int, blocked: int, max_len: int):
    """Simple a-b paths whose internal vertices avoid ``blocked``, yielded in
    order of increasing length, then lexicographically."""
    adj = host._adj
    bbit = 1 << b
    for length in range(1, max_len + 1):

        def dfs(v: int, steps: int, mask: int, acc: list):
            if steps == length - 1:
                if adj[v] & bbit and not mask & bbit:
                    yield acc + [b]
                return
            cand = adj[v] & ~mask & ~blocked & ~bbit
            for u in _bits(cand):
                yield from dfs(u, steps + 1, mask | (1 << u), acc + [u])

        yield from dfs(a, 0, 1 << a, [a])


# ---------------------------------------------------------------------------
# Hamiltonicity


def is_hamiltonian(g: Graph) -> Optional[HamiltonCycle]:
    """Exact backtracking search; lowest-degree-first extension order with
    degree and connectivity pruning."""
    n = g.n
    if n < 3 or not g.is_connected():
        return None
    if any(g.degree(v) < 2 for v in range(n)):
        return None
    adj = g._adj
    start = min(range(n), key=lambda v: (g.degree(v), v))
    sbit = 1 << start
    path = [start]

    def extend(v: int, unused: int) -> bool:
        if unused == 0:
            return bool(adj[v] & sbit)
        avail = unused | sbit | (1 << v)
        rest = unused
        while rest:
            low = rest & -rest
            rest ^= low
            if (adj[low.bit_length() - 1] & avail).bit_count() < 2:
                return False
        if not adj[start] & unused:
            return False
        comp = g.component_mask(v, allowed=unused | (1 << v))
        if comp & unused != unused:
            return False
        cands = sorted(
            _bits(adj[v] & unused),
            key=lambda u: ((adj[u] & unused).bit_count(), u),
        )
        for u in cands:
            path.append(u)
            if extend(u, unused & ~(1 << u)):
                return True
            path.pop()
        return False

    if extend(start, ((1 << n) - 1) & ~sbit):
        return HamiltonCycle(tuple(path))
    return None


def is_hamiltonian_dp(g: Graph) -> bool:
    """Subset dynamic programming; independent cross-check for n <= 18."""
    n = g.n
    if n > 18:
        raise ValueError("DP variant capped at 18 vertices")
    if n < 3 or not g.is_connected():
        return False
    adj = g._adj
    endp = [0] * (1 << n)  # mask -> bitmask of reachable endpoints (paths from 0)
    endp[1] = 1
    full = (1 << n) - 1
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        em = endp[mask]
        if not em:
            continue
        for v in _bits(em):
            ext = adj[v] & ~mask
            for u in _bits(ext):
                endp[mask | (1 << u)] |= 1 << u
    return bool(endp[full] & adj[0]) if n >= 3 else False


# ---------------------------------------------------------------------------
# Certificate verification (independent of all searchers)


def verify_certificate(host: Graph, witness: Witness, pattern: Optional[Graph] = None) -> bool:
    """Check witness invariants directly against the host (and pattern)."""
    if isinstance(witness, HamiltonCycle):
        return _check_hamilton(host, witness)
    if isinstance(witness, MinorCertificate):
        return _check_minor(host, witness, pattern)
    if isinstance(witness, SubdivisionMap):
        return _check_subdivision(host, witness, pattern)
    return False


def _check_hamilton(host: Graph, w: HamiltonCycle) -> bool:
    seq = list(w.order)
    if len(seq) != host.n or host.n < 3:
        return False
    if sorted(seq) != list(range(host.n)):
        return False
    return all(
        host.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
    )


def _set_connected(host: Graph, group: frozenset) -> bool:
    group = set(group)
    if not group:
        return False
    todo = {next(iter(sorted(group)))}
    seen = set()
    while todo:
        x = todo.pop()
        seen.add(x)
        for y in group - seen:
            if host.has_edge(x, y):
                todo.add(y)
    return seen == group


def _check_minor(host: Graph, w: MinorCertificate, pattern: Optional[Graph]) -> bool:
    sets = w.branch_sets
    taken = set()
    for pv, group in sets.items():
        group = set(group)
        if not group or not all(0 <= x < host.n for x in group):
            return False
        if group & taken:
            return False
        taken |= group
        if not _set_connected(host, frozenset(group)):
            return False
    for (u, v), edge in w.connecting_edges.items():
        if u not in sets or v not in sets or edge is None:
            return False
        a, b = edge
        if a not in sets[u] or b not in sets[v]:
            return False
        if not host.has_edge(a, b):
            return False
    if pattern is not None:
        if set(sets) != set(range(pattern.n)):
            return False
        want = {(min(u, v), max(u, v)) for u, v in pattern.edges()}
        if set(w.connecting_edges) != want:
            return False
    return True


def _check_subdivision(host: Graph, w: SubdivisionMap, pattern: Optional[Graph]) -> bool:
    images = w.branch_vertices
    if len(set(images.values())) != len(images):
        return False
    if not all(0 <= h < host.n for h in images.values()):
        return False
    image_set = set(images.values())
    seen_internal: set = set()
    for (u, v), path in w.segments.items():
        path = list(path)
        if u not in images or v not in images:
            return False
        if len(path) < 2 or path[0] != images[u] or path[-1] != images[v]:
            return False
        if len(set(path)) != len(path):
            return False
        for i in range(len(path) - 1):
            if not host.has_edge(path[i], path[i + 1]):
                return False
        internal = set(path[1:-1])
        if internal & image_set or internal & seen_internal:
            return False
        seen_internal |= internal
    if pattern is not None:
        if set(images) != set(range(pattern.n)):
            return False
        want = {(min(u, v), max(u, v)) for u, v in pattern.edges()}
        if set(w.segments) != want:
            return False
    return True


# ---------------------------------------------------------------------------
# Spanning-path form of branch sets (checked on demand, not searched for)


def minor_branch_sets_path_form(host: Graph, pattern: Graph,
                                cert: MinorCertificate) -> bool:
    """Whether every branch set of a degree-<=4 pattern vertex carries a
    spanning path whose end-vertices absorb the connecting edges, each end
    meeting at least two of them.  Singleton branch sets qualify trivially."""
    contacts: dict = {pv: [] for pv in cert.branch_sets}
    for (u, v), (a, b) in cert.connecting_edges.items():
        contacts[u].append(a)
        contacts[v].append(b)
    for pv, group in cert.branch_sets.items():
        if pattern.degree(pv) > 4:
            continue
        group = sorted(group)
        if len(group) == 1:
            continue
        touch = contacts[pv]
        if not any(
            _spanning_path_ok(host, group, perm_ends, touch)
            for perm_ends in _spanning_paths(host, group)
        ):
            return False
    return True


def _spanning_paths(host: Graph, group: list):
    """All spanning paths of host[group], as (first, last) end pairs."""
    n = len(group)

    def extend(path):
        if len(path) == n:
            yield (path[0], path[-1])
            return
        for x in group:
            if x not in path and host.has_edge(path[-1], x):
                yield from extend(path + [x])

    seen = set()
    for s in group:
        for ends in extend([s]):
            key = tuple(sorted(ends))
            if key not in seen:
                seen.add(key)
                yield ends


def _spanning_path_ok(host, group, ends, touch) -> bool:
    e1, e2 = ends
    if any(t not in (e1, e2) for t in touch):
        return False
    return touch.count(e1) >= 2 and touch.count(e2) >= 2


# ---------------------------------------------------------------------------
# Witness JSON


def witness_to_dict(w: Witness) -> dict:
    if isinstance(w, MinorCertificate):
        return {
            "schema": WITNESS_SCHEMA,
            "kind": "minor",
            "branch_sets": {str(k): sorted(v) for k, v in sorted(w.branch_sets.items())},
            "connecting_edges": {
                f"{u},{v}": list(e) for (u, v), e in sorted(w.connecting_edges.items())
            },
        }
    if isinstance(w, SubdivisionMap):
        return {
            "schema": WITNESS_SCHEMA,
            "kind": "subdivision",
            "branch_vertices": {str(k): v for k, v in sorted(w.branch_vertices.items())},
            "segments": {f"{u},{v}": list(p) for (u, v), p in sorted(w.segments.items())},
        }
    if isinstance(w, HamiltonCycle):
        return {"schema": WITNESS_SCHEMA, "kind": "hamilton", "order": list(w.order)}
    raise TypeError(f"not a witness: {w!r}")


def witness_from_dict(d: dict) -> Witness:
    kind = d.get("kind")
    if kind == "minor":
        return MinorCertificate(
            branch_sets={int(k): frozenset(v) for k, v in d["branch_sets"].items()},
            connecting_edges={
                tuple(int(x) for x in k.split(",")): tuple(v)
                for k, v in d["connecting_edges"].items()
            },
        )
    if kind == "subdivision":
        return SubdivisionMap(
            branch_vertices={int(k): v for k, v in d["branch_vertices"].items()},
            segments={
                tuple(int(x) for x in k.split(",")): tuple(p)
                for k, p in d["segments"].items()
            },
        )
    if kind == "hamilton":
        return HamiltonCycle(tuple(d["order"]))
    raise ValueError(f"unknown witness kind {kind!r}")
