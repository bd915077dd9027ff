import json
from pathlib import Path

import pytest

from minorsmith.catalog import builtin_graph
from minorsmith.formats import graph_to_graph6
from minorsmith.graph import Graph
from minorsmith.lemmas import (
    ARCHDEACON_NAMES,
    DataPaths,
    registry,
    statement_ids,
    verify,
    verify_all,
)
from minorsmith.minors import verify_certificate, witness_from_dict

FAST_IDS = [s.id for s in registry() if not s.slow]


def test_registry_contents():
    ids = statement_ids()
    for required in ("D17-ext-split", "E20-split", "E20+I", "E20+Y-clique",
                     "E20+Y-indep", "E20+X", "E20+H", "F4-split", "F4+I", "F4+Y",
                     "F4+X", "F4+H", "F4+T", "E22-split-pairs",
                     "E22-eps1-split-unique", "E22-no-eps2-split-conclusion",
                     "archdeacon-19", "named-nonhamiltonian", "lineK33-hamiltonian",
                     "seven-vertex-K34"):
        assert required in ids
    by_id = {s.id: s for s in registry()}
    assert by_id["E20-split"].expected_cases == 4
    assert by_id["F4-split"].expected_cases == 2
    assert by_id["F4+I"].expected_cases == 4


def test_unknown_statement():
    with pytest.raises(KeyError):
        verify("no-such-statement")


@pytest.mark.parametrize("sid", [s for s in FAST_IDS if s != "archdeacon-19"])
def test_statement_passes(sid):
    rep = verify(sid)
    assert rep.status == "pass", (sid, [(o.case_id, o.detail) for o in rep.failures()])


def test_paper_counts():
    assert verify("E20-split").cases_up_to_symmetry == 4
    assert verify("F4-split").cases_up_to_symmetry == 2
    rep = verify("F4+I")
    assert rep.cases_total == 8 and rep.cases_up_to_symmetry == 4
    assert verify("E20+Y-clique").cases_up_to_symmetry == 2
    assert verify("E20+Y-indep").cases_up_to_symmetry == 3
    assert verify("E20+X").cases_up_to_symmetry == 8
    assert verify("E20+H").cases_up_to_symmetry == 11
    assert verify("E22-eps1-split-unique").cases_up_to_symmetry == 1
    assert verify("E22-split-pairs").cases_up_to_symmetry == 4


def test_witnesses_verify_independently():
    for sid in ("E20-split", "F4+I", "E22-split-pairs"):
        rep = verify(sid)
        seen = 0
        for o in rep.outcomes:
            if o.witness and "branch_sets" in o.witness:
                seen += 1
                pattern = builtin_graph(o.witness["pattern"])
                w = {k: v for k, v in o.witness.items() if k != "pattern"}
                # the case graph is not stored, so rebuild the claim only
                # structurally: the witness parses and references the pattern
                cert = witness_from_dict(w)
                assert set(cert.branch_sets) == set(range(pattern.n))
        assert seen > 0


def test_archdeacon_missing_file(tmp_path):
    rep = verify("archdeacon-19",
                 DataPaths(archdeacon=tmp_path / "absent.json"))
    assert rep.status == "data-missing"
    assert "absent.json" in rep.notes[0]


def test_archdeacon_incomplete_roster():
    rep = verify("archdeacon-19")  # packaged file carries only what is sourced
    if rep.status == "data-missing":
        assert "lacks" in rep.notes[0]
    else:
        assert rep.status == "pass"


def test_seven_vertex_missing_corpus(tmp_path):
    rep = verify("seven-vertex-K34", DataPaths(small_graphs=tmp_path / "no.g6"))
    assert rep.status == "data-missing"


def test_fault_injection_corrupted_base(monkeypatch, tmp_path):
    # a corrupted E20 edge list must make statements fail loudly
    import minorsmith.lemmas as lemmas_mod
    from minorsmith.catalog import NamedGraph, builtin as real_builtin

    def fake_builtin(name):
        ng = real_builtin(name)
        if name == "E20":
            edges = ng.graph.edges()
            edges[0] = (ng.labels["e0"], ng.labels["e3_1"])  # wrong adjacency
            return NamedGraph(ng.name, Graph(9, edges), ng.labels, ng.expectations)
        return ng

    monkeypatch.setattr(lemmas_mod, "builtin", fake_builtin)
    rep = verify("E20-split")
    assert rep.status == "fail"


def test_verify_all_excludes_and_merges():
    reports = verify_all(include_slow=False, exclude=("archdeacon-19",))
    ids = [r.statement_id for r in reports]
    assert "D17-ext-split" not in ids and "archdeacon-19" not in ids
    assert ids == [s for s in FAST_IDS if s != "archdeacon-19"]
    assert all(r.status == "pass" for r in reports)


def test_verify_all_parallel_matches_serial():
    pick = [s for s in FAST_IDS if s in ("E20-split", "F4-split", "named-nonhamiltonian")]
    serial = [verify(sid) for sid in pick]
    parallel = verify_all(jobs=2, include_slow=False,
                          exclude=tuple(s for s in FAST_IDS if s not in pick))
    assert [r.statement_id for r in parallel] == pick  # registry order
    for a, b in zip(serial, parallel):
        assert a.status == b.status
        assert a.cases_total == b.cases_total
        assert [o.ok for o in a.outcomes] == [o.ok for o in b.outcomes]


def test_report_json_schema():
    rep = verify("F4-split")
    d = rep.to_dict()
    assert d["schema"] == "minorsmith.report/1"
    assert d["status"] == "pass"
    json.dumps(d)  # serializable


def test_raw_and_symmetry_reduced_agree():
    # conclusion holds for all raw cases iff it holds for the orbit reps
    from minorsmith.canon import orbit_representatives, act_edge
    from minorsmith.catalog import builtin
    from minorsmith.graph import add_edge
    from minorsmith.minors import has_minor

    base = builtin("E20")
    L = base.labels
    pairs = [frozenset({L["e0"], L[x]}) for x in ("e3_1", "e3_2", "e3_3", "e4")]
    k34 = builtin_graph("K34")
    raw = [has_minor(add_edge(base.graph, *sorted(p)), k34) is not None for p in pairs]
    reps = orbit_representatives(base.graph, pairs, act_edge)
    reduced = [has_minor(add_edge(base.graph, *sorted(r)), k34) is not None
               for r, _ in reps]
    assert all(raw) == all(reduced) and all(raw)
