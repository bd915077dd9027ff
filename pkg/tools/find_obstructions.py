#!/usr/bin/env python3
"""Derive the 3-connected minor-minimal non-projective-planar graphs.

Projective planarity is decided through Negami's double-cover criterion: a
connected graph embeds in the projective plane iff some edge signature gives
a planar double cover.  Signatures are enumerated up to switching (one per
cotree-edge subset); double-cover planarity uses networkx.  Minor-minimal
non-projective-planar graphs are collected by randomized delete/contract
reduction from a diverse seed pool, then validated exhaustively (every
single-edge deletion and contraction must become projective-planar).  The
published count of three-connected members (23) certifies completeness of
the found set.

Usage:
  python tools/find_obstructions.py selftest
  python tools/find_obstructions.py hunt [MINUTES] [SEED]
  python tools/find_obstructions.py status
"""

import json
import os
import random
import sys
import time
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from minorsmith.canon import canonical_form  # noqa: E402
from minorsmith.catalog import builtin_graph  # noqa: E402
from minorsmith.formats import graph_from_graph6, graph_to_graph6  # noqa: E402
from minorsmith.graph import (  # noqa: E402
    Graph,
    bipartition,
    contract_edge,
    delete_edge,
    delete_vertex,
    is_k_connected,
)
from minorsmith.minors import has_minor  # noqa: E402

STATE = Path(os.environ.get(
    "MINORSMITH_OBSTRUCTION_STATE",
    Path(__file__).resolve().parent / "obstructions_found.json",
))

_pp_memo: dict = {}
_nonpp_certs: list = []  # known non-projective-planar graphs, used as fast certificates


def _nx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _planar(g: Graph) -> bool:
    return nx.check_planarity(_nx(g), counterexample=False)[0]


def _double_cover_planar(g: Graph, neg_edges) -> bool:
    neg = set(neg_edges)
    h = nx.Graph()
    for u, v in g.edges():
        if (u, v) in neg or (v, u) in neg:
            h.add_edge(u, v + g.n)
            h.add_edge(u + g.n, v)
        else:
            h.add_edge(u, v)
            h.add_edge(u + g.n, v + g.n)
    h.add_nodes_from(range(2 * g.n))
    return nx.check_planarity(h, counterexample=False)[0]


def _cotree_edges(g: Graph) -> list:
    """Edges outside a BFS spanning forest; signatures are enumerated on
    these only (switching normalizes tree edges to +)."""
    seen = set()
    tree = set()
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    tree.add((min(u, v), max(u, v)))
                    queue.append(u)
    return [e for e in g.edges() if e not in tree]


def is_projective_planar(g: Graph) -> bool:
    """Negami: pp iff some double cover is planar.  Memoized."""
    if g.n <= 4:
        return True
    key = canonical_form(g)
    hit = _pp_memo.get(key)
    if hit is not None:
        return hit
    _pp_memo[key] = result = _pp_uncached(g)
    return result


def _pp_uncached(g: Graph) -> bool:
    comps = g.components()
    if len(comps) > 1:
        nonplanar = []
        for mask in comps:
            sub = g.induced([v for v in range(g.n) if mask >> v & 1])
            if not _planar(sub):
                nonplanar.append(sub)
        if not nonplanar:
            return True
        if len(nonplanar) > 1:
            return False
        return is_projective_planar(nonplanar[0])
    if g.n >= 3 and g.m > 3 * g.n - 3:
        return False
    if g.n >= 3 and bipartition(g) is not None and g.m > 2 * g.n - 2:
        return False
    if _planar(g):
        return True
    for cert in _nonpp_certs:
        if cert.n <= g.n and cert.m <= g.m and has_minor(g, cert) is not None:
            return False
    cotree = _cotree_edges(g)
    for mask in range(1, 1 << len(cotree)):
        neg = [cotree[i] for i in range(len(cotree)) if mask >> i & 1]
        if _double_cover_planar(g, neg):
            return True
    return False


def register_cert(g: Graph) -> None:
    key = canonical_form(g)
    if all(canonical_form(c) != key for c in _nonpp_certs):
        _nonpp_certs.append(g)


def _children(g: Graph):
    """All single-step minors: edge deletions and contractions, with isolated
    vertices dropped after deletion."""
    for u, v in g.edges():
        h = delete_edge(g, u, v)
        for w in sorted((u, v), reverse=True):
            if h.degree(w) == 0:
                h = delete_vertex(h, w)
        yield ("del", (u, v), h)
        yield ("con", (u, v), contract_edge(g, u, v))


def is_minor_minimal_nonpp(g: Graph) -> bool:
    if is_projective_planar(g):
        return False
    return all(is_projective_planar(h) for _, _, h in _children(g))


def _strip_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    if len(keep) == g.n:
        return g
    return g.induced(keep)


def minimize(g: Graph, rng: random.Random) -> Graph:
    """Randomized descent to a minor-minimal non-projective-planar graph."""
    g = _strip_isolated(g)
    while True:
        kids = list(_children(g))
        rng.shuffle(kids)
        for _, _, h in kids:
            if not is_projective_planar(h):
                g = _strip_isolated(h)
                break
        else:
            return g


# ---------------------------------------------------------------------------
# Seed pool


def _complete(n):
    return Graph(n, list(combinations(range(n), 2)))


def _complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _random_graph(rng, n, m):
    edges = list(combinations(range(n), 2))
    rng.shuffle(edges)
    return Graph(n, edges[:m])


def _seed_pool(rng: random.Random):
    yield _complete(7)
    k7edges = list(combinations(range(7), 2))
    for _ in range(30):
        drop = rng.sample(range(len(k7edges)), rng.randint(1, 4))
        yield Graph(7, [e for i, e in enumerate(k7edges) if i not in drop])
    for a, b in [(3, 5), (3, 6), (3, 7), (4, 4), (4, 5), (4, 6), (5, 5)]:
        g = _complete_bipartite(a, b)
        yield g
        for _ in range(4):
            h = g
            extra = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
            for u, v in rng.sample(extra, min(3, len(extra))):
                h = Graph(h.n, h.edges() + [(u, v)])
            yield h
    for name in ("D17", "E20", "E22", "F4", "V8", "Qplus", "Herschel"):
        base = builtin_graph(name)
        yield base
        nonedges = base.non_edges()
        for _ in range(12):
            h = base
            for u, v in rng.sample(nonedges, min(rng.randint(1, 4), len(nonedges))):
                if not h.has_edge(u, v):
                    h = Graph(h.n, h.edges() + [(u, v)])
            # sometimes add an apex as well
            if rng.random() < 0.5:
                targets = rng.sample(range(h.n), rng.randint(3, min(5, h.n)))
                h = Graph(h.n + 1, h.edges() + [(h.n, t) for t in targets])
            yield h
    k8edges = list(combinations(range(8), 2))
    k9edges = list(combinations(range(9), 2))
    while True:
        mode = rng.random()
        if mode < 0.45 and _nonpp_certs:
            # mutate a known obstruction: add edges / an apex / a split, then
            # descend again -- nearby obstructions share these neighborhoods
            yield _mutate(rng, rng.choice(_nonpp_certs))
        elif mode < 0.6:
            if rng.random() < 0.6:
                drop = rng.sample(range(len(k8edges)), rng.randint(8, 13))
                yield Graph(8, [e for i, e in enumerate(k8edges) if i not in drop])
            else:
                drop = rng.sample(range(len(k9edges)), rng.randint(16, 22))
                yield Graph(9, [e for i, e in enumerate(k9edges) if i not in drop])
        elif mode < 0.75:
            n = rng.randint(7, 9)
            mu = rng.randint(7, 11)
            yield _random_graph(rng, n, min(n + mu, n * (n - 1) // 2))
        else:
            n = rng.randint(8, 14)
            mu = rng.randint(6, 12)
            yield _random_graph(rng, n, min(n + mu, n * (n - 1) // 2))


def _mutate(rng: random.Random, g: Graph) -> Graph:
    """Perturb an obstruction while keeping m - n small: the signature scan
    is exponential in it, so the budget is two extra units at most."""
    from minorsmith.graph import split_specs, split_vertex, subdivide_edge

    h = g
    budget = 2  # allowed growth of m - n
    for _ in range(rng.randint(1, 3)):
        op = rng.random()
        if op < 0.5 and h.n < 14:
            # vertex split: m - n unchanged
            specs = [s for v in range(h.n) for s in split_specs(h, v)]
            if specs:
                h = split_vertex(h, rng.choice(specs))
        elif op < 0.75 and budget > 0:
            non = h.non_edges()
            if non:
                u, v = rng.choice(non)
                h = Graph(h.n, h.edges() + [(u, v)])
                budget -= 1
        elif budget > 0 and h.m and h.n < 14:
            u, v = rng.choice(h.edges())
            h = subdivide_edge(h, u, v)
            others = [w for w in range(h.n - 1) if w not in (u, v)]
            if others:
                h = Graph(h.n, h.edges() + [(h.n - 1, rng.choice(others))])
                budget -= 1
    return h


# ---------------------------------------------------------------------------
# State


def load_state():
    if STATE.is_file():
        return json.loads(STATE.read_text())
    return {"found": []}


def save_state(state):
    STATE.write_text(json.dumps(state, indent=1, sort_keys=True))


def record(state, g: Graph) -> bool:
    cf = canonical_form(g)
    if any(e["canonical"] == cf for e in state["found"]):
        return False
    entry = {
        "canonical": cf,
        "graph6": graph_to_graph6(g),
        "n": g.n,
        "m": g.m,
        "mu": g.m - g.n,
        "three_connected": is_k_connected(g, 3),
        "validated": False,
    }
    state["found"].append(entry)
    save_state(state)
    return True


# ---------------------------------------------------------------------------
# Commands


def selftest():
    t0 = time.time()
    checks = [
        ("K5 pp", _complete(5), True),
        ("K6 pp", _complete(6), True),
        ("K34 pp", builtin_graph("K34"), True),
        ("Petersen pp", Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                              + [(i, i + 5) for i in range(5)]
                              + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]), True),
        ("K7 non-pp", _complete(7), False),
        ("K35 non-pp", _complete_bipartite(3, 5), False),
        ("D17 non-pp", builtin_graph("D17"), False),
        ("E20 non-pp", builtin_graph("E20"), False),
        ("E22 non-pp", builtin_graph("E22"), False),
        ("F4 non-pp", builtin_graph("F4"), False),
        ("K5+K5 non-pp", Graph(10, list(combinations(range(5), 2))
                               + [(5 + u, 5 + v) for u, v in combinations(range(5), 2)]), False),
        ("Herschel pp", builtin_graph("Herschel"), True),
    ]
    ok = True
    for label, g, want in checks:
        got = is_projective_planar(g)
        tag = "ok" if got == want else "FAIL"
        ok &= got == want
        print(f"{tag:4s} {label}: pp={got} (want {want})")
    for name in ("D17", "E20", "E22", "F4"):
        got = is_minor_minimal_nonpp(builtin_graph(name))
        tag = "ok" if got else "FAIL"
        ok &= got
        print(f"{tag:4s} {name} is minor-minimal non-pp: {got}")
    print(f"selftest {'passed' if ok else 'FAILED'} in {time.time() - t0:.1f}s")
    sys.exit(0 if ok else 1)


def hunt(minutes: float, seed: int):
    rng = random.Random(seed)
    state = load_state()
    for e in state["found"]:
        register_cert(graph_from_graph6(e["graph6"]))
    deadline = time.time() + minutes * 60
    pool = _seed_pool(rng)
    runs = 0
    seeds_seen = 0
    while time.time() < deadline:
        g = next(pool)
        seeds_seen += 1
        if seeds_seen % 100 == 0:
            print(f"... {seeds_seen} seeds, {runs} reductions, "
                  f"{len(state['found'])} found", flush=True)
        if g.m - g.n > 13:
            continue
        if is_projective_planar(g):
            continue
        obstruction = minimize(g, rng)
        runs += 1
        if record(state, obstruction):
            register_cert(obstruction)
            n3 = sum(1 for e in state["found"] if e["three_connected"])
            print(f"[{runs}] NEW n={obstruction.n} m={obstruction.m} "
                  f"mu={obstruction.m - obstruction.n} "
                  f"3conn={is_k_connected(obstruction, 3)}  "
                  f"(total {len(state['found'])}, 3-connected {n3})", flush=True)
    status()


def validate_cmd():
    state = load_state()
    for e in state["found"]:
        if e["validated"]:
            continue
        g = graph_from_graph6(e["graph6"])
        t0 = time.time()
        ok = is_minor_minimal_nonpp(g)
        e["validated"] = bool(ok)
        if not ok:
            print(f"REMOVING non-minimal entry {e['graph6']}")
            state["found"] = [x for x in state["found"] if x is not e]
        else:
            print(f"validated {e['graph6']} n={e['n']} m={e['m']} "
                  f"({time.time() - t0:.1f}s)", flush=True)
        save_state(state)
    status()


ROSTER = {
    11: ["A2"],
    10: ["B1", "B7"],
    9: ["C3", "C4", "C7"],
    8: ["D2", "D3", "D9", "D12", "D17"],
    7: ["E2", "E3", "E5", "E11", "E18", "E19", "E20", "E22", "E27"],
    6: ["F1", "F4"],
    5: ["G1"],
}


def emit(outpath: str):
    """Write the validated 23-graph collection as a catalog JSON file.

    Letters follow the m-n rule confirmed on every pinned member; the four
    text-reconstructible graphs keep their own names, the rest take roster
    numbers in canonical-form order (a recorded convention, not read from
    the source figures).
    """
    from minorsmith.canon import automorphism_group, are_isomorphic
    from minorsmith.graph import is_internally_4_connected

    state = load_state()
    entries = [e for e in state["found"] if e["three_connected"]]
    if len(entries) != 23:
        sys.exit(f"need exactly 23 three-connected graphs, have {len(entries)}")
    if not all(e["validated"] for e in entries):
        sys.exit("run 'validate' first: some entries are not validated")
    pinned = {name: builtin_graph(name) for name in ("D17", "E20", "E22", "F4")}
    by_mu: dict = {}
    for e in entries:
        by_mu.setdefault(e["mu"], []).append(e)
    counts = {mu: len(v) for mu, v in by_mu.items()}
    want = {mu: len(names) for mu, names in ROSTER.items()}
    if counts != want:
        sys.exit(f"mu distribution {counts} does not match the roster {want}")
    out = []
    for mu in sorted(ROSTER, reverse=True):
        names = list(ROSTER[mu])
        group = sorted(by_mu[mu], key=lambda e: e["canonical"])
        assigned: dict = {}
        for e in group:
            g = graph_from_graph6(e["graph6"])
            for pname, pg in pinned.items():
                if pname in names and are_isomorphic(g, pg):
                    assigned[e["canonical"]] = pname
                    names.remove(pname)
                    break
        for e in group:
            if e["canonical"] not in assigned:
                assigned[e["canonical"]] = names.pop(0)
        for e in group:
            g = graph_from_graph6(e["graph6"])
            name = assigned[e["canonical"]]
            exp = {
                "order": g.n,
                "size": g.m,
                "aut_order": automorphism_group(g).order,
                "connectivity_at_least": 3,
            }
            if name in pinned:
                exp["internally_4_connected"] = True
                exp["must_not_contain_minors"] = ["K34"]
                if name != "E22":
                    exp["must_not_contain_minors"].append("Qplus")
                else:
                    exp["must_contain_minors"] = ["Qplus"]
            else:
                exp["must_contain_minors"] = ["K34"]
            entry = {
                "name": name,
                "graph6": e["graph6"],
                "expectations": exp,
                "provenance_note": (
                    "derived in-repo: minor-minimal non-projective-planar via the "
                    "double-cover planarity criterion; completeness certified by "
                    "the published count of 23 three-connected members"
                ),
            }
            if name not in pinned:
                entry["name_note"] = ("roster number assigned in canonical-form "
                                      "order within the m-n class")
            out.append(entry)
    Path(outpath).write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {outpath} with {len(out)} entries")
    # sanity pass: every internally-4-connected check on the four pinned ones
    for e in out:
        if e["name"] in pinned:
            g = graph_from_graph6(e["graph6"])
            assert is_internally_4_connected(g)


def status():
    state = load_state()
    found = state["found"]
    n3 = [e for e in found if e["three_connected"]]
    rest = [e for e in found if not e["three_connected"]]
    by_mu: dict = {}
    for e in n3:
        by_mu.setdefault(e["mu"], []).append(e)
    print(f"found {len(found)} minor-minimal non-pp graphs; "
          f"{len(n3)} three-connected (target 23), {len(rest)} other (known 12)")
    for mu in sorted(by_mu, reverse=True):
        entries = by_mu[mu]
        print(f"  mu={mu}: {len(entries)} graphs "
              f"{[(e['n'], e['m']) for e in sorted(entries, key=lambda x: (x['n'], x['graph6']))]}")
    print(f"validated: {sum(1 for e in found if e['validated'])}/{len(found)}")


if __name__ == "__main__":
    cmd = sys.argv[1] if len(sys.argv) > 1 else "status"
    if cmd == "selftest":
        selftest()
    elif cmd == "hunt":
        minutes = float(sys.argv[2]) if len(sys.argv) > 2 else 10.0
        seed = int(sys.argv[3]) if len(sys.argv) > 3 else 1
        hunt(minutes, seed)
    elif cmd == "validate":
        validate_cmd()
    elif cmd == "merge":
        state = load_state()
        have = {e["canonical"] for e in state["found"]}
        added = 0
        for other in sys.argv[2:]:
            for e in json.loads(Path(other).read_text())["found"]:
                if e["canonical"] not in have:
                    have.add(e["canonical"])
                    e["validated"] = False
                    state["found"].append(e)
                    added += 1
        save_state(state)
        print(f"merged {added} new entries")
        status()
    elif cmd == "emit":
        emit(sys.argv[2] if len(sys.argv) > 2
             else str(Path(__file__).resolve().parent.parent
                      / "src/minorsmith/data/archdeacon23.json"))
    else:
        status()
