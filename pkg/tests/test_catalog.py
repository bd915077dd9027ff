import json
from itertools import combinations

import pytest

from conftest import complete
from minorsmith.canon import (
    act_vertex_set,
    are_isomorphic,
    automorphism_group,
    orbit_representatives,
)
from minorsmith.catalog import (
    BUILTIN_NAMES,
    NamedGraph,
    builtin,
    builtin_graph,
    load_collection,
    validate,
)
from minorsmith.errors import DuplicateName, ParseError, UnknownName
from minorsmith.formats import graph_to_graph6
from minorsmith.graph import bipartition
from minorsmith.minors import has_minor, is_hamiltonian


def test_v8_shape():
    g = builtin_graph("V8")
    assert g.n == 8 and g.m == 12
    assert g.degree_sequence() == (3,) * 8


def test_e20_shape():
    ng = builtin("E20")
    assert ng.graph.degree_sequence() == (4, 4, 4, 4, 4, 3, 3, 3, 3)
    L = ng.labels
    # non-edges at e0 are exactly the four edge-addition pairs
    e0 = L["e0"]
    non = {v for v in range(9) if v != e0 and not ng.graph.has_edge(e0, v)}
    assert non == {L["e3_1"], L["e3_2"], L["e3_3"], L["e4"]}


def test_k34_parts():
    ng = builtin("K34")
    part = bipartition(ng.graph)
    sides = sorted((sorted(part[0]), sorted(part[1])), key=len)
    assert sides[0] == sorted(ng.labels[x] for x in ("k1", "k2", "k3"))


def test_f4_hamilton_skeleton():
    ng = builtin("F4")
    L = ng.labels
    seq = ["f1", "f1_1", "f2_4", "f2", "f2_2", "f1_3", "f1_4", "f2_1", "f2_3", "f1_2"]
    vs = [L[s] for s in seq]
    assert len(set(vs)) == ng.graph.n
    for i in range(len(vs)):
        assert ng.graph.has_edge(vs[i], vs[(i + 1) % len(vs)]), (seq[i], seq[(i + 1) % len(vs)])


def test_e20_hamilton_skeleton():
    ng = builtin("E20")
    L = ng.labels
    seq = ["e0", "e2", "e3_3", "e1_3", "e1_1", "e3_1", "e4", "e3_2", "e1_2"]
    vs = [L[s] for s in seq]
    assert len(set(vs)) == ng.graph.n
    for i in range(len(vs)):
        assert ng.graph.has_edge(vs[i], vs[(i + 1) % len(vs)]), (seq[i], seq[(i + 1) % len(vs)])


def test_qplus_well_defined():
    # all independent triples of the cube lie in one orbit
    cube = builtin_graph("Cube")
    indep = [frozenset(c) for c in combinations(range(8), 3)
             if not any(cube.has_edge(a, b) for a, b in combinations(c, 2))]
    reps = orbit_representatives(cube, indep, act_vertex_set)
    assert len(reps) == 1
    qp = builtin_graph("Qplus")
    assert qp.n == 9 and qp.m == 15


def test_wheel():
    w = builtin("Wheel(6)")
    assert w.graph.n == 7 and w.graph.m == 12
    assert automorphism_group(w.graph).order == 12
    assert builtin("Wheel(3)").graph == complete(4)
    with pytest.raises(UnknownName):
        builtin("Wheel(2)")
    with pytest.raises(UnknownName):
        builtin("NoSuchGraph")


def test_every_builtin_validates():
    for name in BUILTIN_NAMES:
        actual = "Wheel(5)" if name == "Wheel(n)" else name
        rep = validate(builtin(actual))
        assert rep.passed, (actual, [(o.case_id, o.detail) for o in rep.failures()])


def test_minor_freeness_matrix():
    k34 = builtin_graph("K34")
    qp = builtin_graph("Qplus")
    for name in ("D17", "E20", "E22", "F4"):
        assert has_minor(builtin_graph(name), k34) is None, name
    for name in ("D17", "E20", "F4"):
        assert has_minor(builtin_graph(name), qp) is None, name
    assert has_minor(builtin_graph("E22"), qp) is not None


# -- collection files ---------------------------------------------------------


def _entry(name, g, expectations=None):
    return {
        "name": name,
        "n": g.n,
        "edges": g.edges(),
        "expectations": expectations or {},
    }


def test_load_collection_roundtrip(tmp_path):
    data = [
        _entry("K34", builtin_graph("K34"), {"aut_order": 144, "hamiltonian": False}),
        {"name": "E20g6", "graph6": graph_to_graph6(builtin_graph("E20"))},
    ]
    path = tmp_path / "coll.json"
    path.write_text(json.dumps(data))
    got = load_collection(path)
    assert [ng.name for ng in got] == ["K34", "E20g6"]
    assert are_isomorphic(got[1].graph, builtin_graph("E20"))
    assert got[0].provenance == "external-data"
    rep = validate(got[0])
    assert rep.passed


def test_load_collection_empty(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("[]")
    assert load_collection(path) == []


def test_load_collection_duplicate(tmp_path):
    g = builtin_graph("K23")
    path = tmp_path / "dup.json"
    path.write_text(json.dumps([_entry("X", g), _entry("X", g)]))
    with pytest.raises(DuplicateName):
        load_collection(path)


def test_load_collection_bad_edge(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([{"name": "B", "n": 3, "edges": [[0, 5]]}]))
    with pytest.raises(ParseError) as exc:
        load_collection(path)
    assert "entry 0" in str(exc.value)


def test_load_collection_bad_labels(tmp_path):
    g = builtin_graph("K23")
    path = tmp_path / "lab.json"
    entry = _entry("L", g)
    entry["labels"] = {"a": 0}
    path.write_text(json.dumps([entry]))
    with pytest.raises(ParseError):
        load_collection(path)


def test_validate_flags_wrong_expectation(tmp_path):
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps([
        _entry("K23x", builtin_graph("K23"), {"aut_order": 999, "hamiltonian": False}),
    ]))
    (ng,) = load_collection(path)
    rep = validate(ng)
    assert not rep.passed
    assert any(o.case_id == "aut_order" for o in rep.failures())


def test_packaged_archdeacon_collection_validates():
    from importlib import resources

    path = resources.files("minorsmith") / "data" / "archdeacon23.json"
    entries = load_collection(str(path))
    assert len(entries) >= 4
    names = {ng.name for ng in entries}
    assert {"D17", "E20", "E22", "F4"} <= names
    for ng in entries:
        rep = validate(ng)
        assert rep.passed, (ng.name, [o.case_id for o in rep.failures()])
        if ng.name in ("D17", "E20", "E22", "F4"):
            assert are_isomorphic(ng.graph, builtin_graph(ng.name))
