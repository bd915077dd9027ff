import pytest

from conftest import complete, cycle, petersen, random_connected_graph
from minorsmith.catalog import builtin, builtin_graph
from minorsmith.graph import Graph
from minorsmith.minors import SubdivisionMap, has_minor, has_topological_minor
from minorsmith.subdivision import (
    barks,
    classify_bridges,
    enumerate_unstable_fragments,
    find_stable_subdivision,
    is_spanning,
)


def identity_eta(g: Graph) -> SubdivisionMap:
    return SubdivisionMap({v: v for v in range(g.n)},
                          {(u, v): (u, v) for u, v in g.edges()})


def e20_plus_apex(names):
    ng = builtin("E20")
    return Graph(10, ng.graph.edges() + [(9, ng.labels[x]) for x in names])


def test_barks_cover_image():
    e20 = builtin_graph("E20")
    eta = identity_eta(e20)
    bs = barks(e20, eta)
    union = frozenset().union(*(b.vertices for b in bs))
    assert union == eta.image_vertices()
    # identity subdivision: bark of v is its closed neighborhood minus nothing
    for b in bs:
        assert eta.branch_vertices[b.center] in b.vertices


def test_fragments_identity_e20():
    ng = builtin("E20")
    eta = identity_eta(ng.graph)
    frags = enumerate_unstable_fragments(ng.graph, eta)
    deg3 = {f.anchor[0] for f in frags if f.kind == "three_segments_at_degree3"}
    want = {ng.labels[x] for x in ("e3_1", "e3_2", "e3_3", "e4")}
    assert deg3 == want
    two = [f for f in frags if f.kind == "two_segments_shared_end"]
    incident_pairs = sum(
        ng.graph.degree(v) * (ng.graph.degree(v) - 1) // 2 for v in range(9)
    )
    assert len(two) == incident_pairs
    vps = [f for f in frags if f.kind == "vertex_plus_segment"]
    assert len(vps) == 9 * 16


def test_triangle_has_no_degree3_fragments():
    t = cycle(3)
    frags = enumerate_unstable_fragments(t, identity_eta(t))
    assert not any(f.kind == "three_segments_at_degree3" for f in frags)


def test_unstable_bridge_inside_degree3_star():
    host = e20_plus_apex(["e3_1", "e2", "e4"])
    cl = classify_bridges(host, identity_eta(builtin_graph("E20")))
    assert len(cl) == 1
    assert not cl[0].stable
    assert cl[0].witness_fragment is not None
    assert cl[0].bridge.attachments <= cl[0].witness_fragment.vertices


def test_unstable_bridge_vertex_plus_segment():
    # attachments {e0, e3_1, e4} sit inside the fragment {e0} + segment e3_1-e4
    host = e20_plus_apex(["e0", "e3_1", "e4"])
    cl = classify_bridges(host, identity_eta(builtin_graph("E20")))
    assert len(cl) == 1
    assert not cl[0].stable


def test_stable_bridge_four_branch_vertices():
    host = e20_plus_apex(["e0", "e3_1", "e3_2", "e4"])
    cl = classify_bridges(host, identity_eta(builtin_graph("E20")))
    assert len(cl) == 1
    assert cl[0].stable
    assert cl[0].witness_fragment is None


def test_identity_subdivision_has_no_bridges():
    f4 = builtin_graph("F4")
    assert classify_bridges(f4, identity_eta(f4)) == []


def test_classification_invariant_under_relabeling(rng):
    base = builtin_graph("E20")
    host = e20_plus_apex(["e0", "e3_1", "e3_2", "e4"])
    eta = identity_eta(base)
    perm = list(range(10))
    rng.shuffle(perm)
    host2 = host.relabel(perm)
    eta2 = SubdivisionMap(
        {pv: perm[h] for pv, h in eta.branch_vertices.items()},
        {e: tuple(perm[x] for x in p) for e, p in eta.segments.items()},
    )
    got1 = [c.stable for c in classify_bridges(host, eta)]
    got2 = [c.stable for c in classify_bridges(host2, eta2)]
    assert got1 == got2


def test_spread_attachments_are_stable(rng):
    # attachments meeting >= 4 distinct barks with no shared segment
    base = builtin_graph("E20")
    eta = identity_eta(base)
    import itertools

    for combo in itertools.combinations([0, 1, 2, 4, 8], 4):
        host = Graph(10, base.edges() + [(9, t) for t in combo])
        for c in classify_bridges(host, eta):
            attach_barks = {
                b.center for b in barks(host, eta) if c.bridge.attachments & b.vertices
            }
            if len(attach_barks) >= 4:
                assert c.stable


def test_is_spanning():
    e20 = builtin_graph("E20")
    assert is_spanning(e20, identity_eta(e20))
    host = Graph(10, e20.edges() + [(9, 0), (9, 1)])
    assert not is_spanning(host, identity_eta(e20))
    from minorsmith.graph import subdivide_edge

    h2 = subdivide_edge(e20, 0, 1)
    eta = has_topological_minor(h2, e20)
    assert eta is not None and is_spanning(h2, eta)


def test_find_stable_subdivision_identity():
    f4 = builtin_graph("F4")
    eta = find_stable_subdivision(f4, f4)
    assert eta is not None
    assert classify_bridges(f4, eta) == []


def test_find_stable_subdivision_with_stable_bridge():
    host = e20_plus_apex(["e0", "e3_1", "e3_2", "e4"])
    eta = find_stable_subdivision(host, builtin_graph("E20"))
    assert eta is not None
    cl = classify_bridges(host, eta)
    assert cl and all(c.stable for c in cl)
    # postcondition: all segments are induced paths
    for path in eta.segments.values():
        for i in range(len(path)):
            for j in range(i + 2, len(path)):
                assert not host.has_edge(path[i], path[j])


def test_no_f4_subdivision_in_planar_host():
    f4 = builtin_graph("F4")
    # F4 is non-planar (K33 minor), so no planar host contains it
    assert has_minor(f4, builtin_graph("K33")) is not None
    antiprism = Graph(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
        + [(i, 5 + i) for i in range(5)]
        + [(i, 5 + (i + 1) % 5) for i in range(5)],
    )
    assert find_stable_subdivision(antiprism, f4) is None


def test_classification_json():
    import json

    from minorsmith.subdivision import classification_to_dict

    host = e20_plus_apex(["e3_1", "e2", "e4"])
    (cls,) = classify_bridges(host, identity_eta(builtin_graph("E20")))
    d = classification_to_dict(cls)
    assert d["stable"] is False and d["fragment"]["vertices"]
    json.dumps(d)
