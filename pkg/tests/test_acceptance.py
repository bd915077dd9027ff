"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the module is also the reference for every pinned tolerance.
"""

import random
import time
from pathlib import Path

import pytest

import bruteforce
from conftest import DATA, complete_bipartite, random_graph
from minorsmith.canon import automorphism_group
from minorsmith.catalog import builtin, builtin_graph
from minorsmith.cli import SweepSpec, run_sweep
from minorsmith.graph import Graph, bipartition, is_internally_4_connected, is_k_connected
from minorsmith.lemmas import registry, verify, verify_all
from minorsmith.minors import (
    HamiltonCycle,
    has_minor,
    is_hamiltonian,
    oracle_has_minor,
    verify_certificate,
)
from minorsmith.splitter import check_subdivision_promotion

# witnesses gathered by criteria 5-9, re-verified wholesale in criterion 10
_WITNESSES: list = []


def _announce(num, text, elapsed):
    print(f"PASS criterion {num}: {text} [{elapsed:.2f}s]")


def test_criterion_01_automorphism_orders():
    t0 = time.time()
    want = {"D17": 48, "E20": 6, "E22": 24, "F4": 4}
    for name, order in want.items():
        assert automorphism_group(builtin_graph(name)).order == order, name
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _announce(1, "automorphism orders 48/6/24/4", elapsed)


def test_criterion_02_internal_4_connectivity():
    t0 = time.time()
    for name in ("D17", "E20", "E22", "F4", "K33"):
        assert is_internally_4_connected(builtin_graph(name)), name
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _announce(2, "internal 4-connectivity of the catalog graphs", elapsed)


def test_criterion_03_hamiltonicity():
    t0 = time.time()
    d17 = builtin_graph("D17")
    cycle = is_hamiltonian(d17)
    assert cycle is not None and verify_certificate(d17, cycle)
    for name, order in (("K34", 7), ("Qplus", 9), ("Herschel", 11)):
        g = builtin_graph(name)
        assert is_hamiltonian(g) is None, name
        assert bipartition(g) is not None and g.n == order and order % 2 == 1
    lk33 = builtin_graph("LineK33")
    cyc = is_hamiltonian(lk33)
    assert cyc is not None and verify_certificate(lk33, cyc)
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _announce(3, "hamiltonicity verdicts across the catalog", elapsed)


def test_criterion_04_hamilton_skeletons():
    t0 = time.time()
    f4 = builtin("F4")
    seq = ["f1", "f1_1", "f2_4", "f2", "f2_2", "f1_3", "f1_4", "f2_1", "f2_3", "f1_2"]
    w = HamiltonCycle(tuple(f4.labels[s] for s in seq))
    assert verify_certificate(f4.graph, w)
    e20 = builtin("E20")
    seq = ["e0", "e2", "e3_3", "e1_3", "e1_1", "e3_1", "e4", "e3_2", "e1_2"]
    w = HamiltonCycle(tuple(e20.labels[s] for s in seq))
    assert verify_certificate(e20.graph, w)
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _announce(4, "explicit Hamilton-cycle skeletons on F4 and E20", elapsed)


def test_criterion_05_minor_freeness_matrix():
    t0 = time.time()
    k34 = builtin_graph("K34")
    qp = builtin_graph("Qplus")
    for name in ("D17", "E20", "E22", "F4"):
        assert has_minor(builtin_graph(name), k34) is None, name
    for name in ("D17", "E20", "F4"):
        assert has_minor(builtin_graph(name), qp) is None, name
    e22 = builtin_graph("E22")
    cert = has_minor(e22, qp)
    assert cert is not None
    _WITNESSES.append((e22, cert, qp))
    elapsed = time.time() - t0
    assert elapsed < 10.0
    _announce(5, "minor-freeness matrix incl. Qplus-in-E22 witness", elapsed)


def test_criterion_06_lemma_suite_fast():
    t0 = time.time()
    reports = verify_all(include_slow=False)
    elapsed = time.time() - t0
    by_id = {r.statement_id: r for r in reports}
    data_dependent = {s.id for s in registry() if s.data_dependent}
    for r in reports:
        if r.statement_id in data_dependent and r.status == "data-missing":
            continue
        assert r.status == "pass", (r.statement_id, r.notes,
                                    [(o.case_id, o.detail) for o in r.failures()])
    # paper-stated counts, exactly
    assert by_id["E20-split"].cases_up_to_symmetry == 4
    assert by_id["F4-split"].cases_up_to_symmetry == 2
    assert by_id["F4+I"].cases_up_to_symmetry == 4
    assert by_id["E20+Y-clique"].cases_up_to_symmetry == 2
    assert by_id["E22-eps1-split-unique"].cases_up_to_symmetry == 1
    aut2 = [o for o in by_id["E22-eps1-split-unique"].outcomes if o.case_id == "aut-order-2"]
    assert aut2 and aut2[0].ok
    assert elapsed < 120.0
    missing = [r.statement_id for r in reports if r.status == "data-missing"]
    note = f" (data-missing: {', '.join(missing)})" if missing else ""
    _announce(6, f"lemma suite (excl. D17-ext-split) with exact counts{note}", elapsed)


@pytest.mark.slow
def test_criterion_06b_lemma_suite_slow_statement():
    t0 = time.time()
    rep = verify("D17-ext-split")
    elapsed = time.time() - t0
    assert rep.status == "pass", rep.notes
    assert elapsed < 600.0
    _announce(6, f"D17-ext-split over {rep.cases_total} raw cases "
                 f"({rep.cases_up_to_symmetry} classes)", elapsed)


def test_criterion_07_engine_vs_oracle():
    t0 = time.time()
    rng = random.Random(0xACCE55)
    disagreements = 0
    for _ in range(10_000):
        host = random_graph(rng, rng.randint(1, 9),
                            rng.choice([0.2, 0.35, 0.5, 0.65, 0.8]))
        pat = random_graph(rng, rng.randint(1, 6), rng.choice([0.3, 0.5, 0.7, 0.9]))
        cert = has_minor(host, pat)
        if (cert is not None) != oracle_has_minor(host, pat):
            disagreements += 1
        if cert is not None:
            _WITNESSES.append((host, cert, pat))
    assert disagreements == 0
    rng = random.Random(0x4A11)
    mismatches = 0
    for _ in range(1_000):
        g = random_graph(rng, rng.randint(3, 9), rng.choice([0.3, 0.5, 0.7]))
        cyc = is_hamiltonian(g)
        if (cyc is not None) != bruteforce.hamiltonian_chain(g):
            mismatches += 1
        if cyc is not None:
            _WITNESSES.append((g, cyc, None))
    assert mismatches == 0
    _announce(7, "10^4 minor pairs + 10^3 hamiltonicity vs brute force, zero disagreements",
              time.time() - t0)


def test_criterion_08_promotion_property():
    t0 = time.time()
    patterns = [builtin_graph(x) for x in ("V8", "E20", "F4")]
    rng = random.Random(0x5EED)
    hosts = 0
    violations = 0
    while hosts < 1_000:
        g = random_graph(rng, rng.randint(8, 12), rng.choice([0.45, 0.6, 0.75]))
        if not is_k_connected(g, 3):
            continue
        hosts += 1
        for pat in patterns:
            if not check_subdivision_promotion(g, pat):
                violations += 1
    assert violations == 0
    _announce(8, "promotion property on 10^3 sampled 3-connected hosts x 3 patterns",
              time.time() - t0)


def _corpus_lines(*names):
    lines = []
    for name in names:
        path = DATA / name
        if not path.is_file():
            pytest.skip(f"corpus file {name} not generated (run tools/gen_all_graphs.py)")
        lines.extend(ln for ln in path.read_text().splitlines() if ln.strip())
    return lines


@pytest.mark.slow
def test_criterion_09_main_theorem_sweep(tmp_path):
    from minorsmith.formats import graph_to_graph6

    t0 = time.time()
    # complete corpus through n = 9 (all unlabeled graphs), plus structured
    # and randomly sampled 10-vertex graphs; the full external n = 10 corpus
    # is not reproducible offline (see decisions ledger)
    lines = _corpus_lines("graphs_n_le_8.g6", "graphs_n9.g6")
    extra = [complete_bipartite(4, 6), complete_bipartite(4, 5), complete_bipartite(5, 5)]
    rng = random.Random(0xC0DE)
    sampled = 0
    while sampled < 2_000:
        g = random_graph(rng, 10, rng.choice([0.5, 0.65, 0.8]))
        if is_k_connected(g, 4):
            extra.append(g)
            sampled += 1
    src = tmp_path / "sweep_4conn.g6"
    src.write_text("\n".join(lines + [graph_to_graph6(g) for g in extra]) + "\n")
    spec = SweepSpec(source=str(src), connectivity=4, non_hamiltonian=True,
                     check=["K34"], budget=30.0, jobs=2)
    counts, failures, timeouts = run_sweep(spec)
    assert failures == [] and timeouts == []
    assert counts["passed"] >= 2  # K45 and K46 at least
    elapsed = time.time() - t0
    assert elapsed < 1800.0
    _announce(9, f"4-connected sweep: scanned={counts['scanned']} "
                 f"non-hamiltonian={counts['filtered_in']} all with K34 minors",
              elapsed)


@pytest.mark.slow
def test_criterion_09b_two_connected_k23_sweep(tmp_path):
    t0 = time.time()
    lines = _corpus_lines("graphs_n_le_8.g6")
    src = tmp_path / "sweep_2conn.g6"
    src.write_text("\n".join(lines) + "\n")
    spec = SweepSpec(source=str(src), connectivity=2, non_hamiltonian=True,
                     check=["K23"], budget=30.0, jobs=2)
    counts, failures, timeouts = run_sweep(spec)
    assert failures == [] and timeouts == []
    assert counts["filtered_in"] > 0
    elapsed = time.time() - t0
    assert elapsed < 1800.0
    _announce(9, f"2-connected n<=8 sweep vs K23: {counts['filtered_in']} "
                 f"non-hamiltonian graphs, zero failures", elapsed)


def test_criterion_10_certificate_soundness():
    t0 = time.time()
    assert _WITNESSES, "criteria 5/7 must run before the soundness audit"
    bad = 0
    for host, witness, pattern in _WITNESSES:
        if not verify_certificate(host, witness, pattern):
            bad += 1
    assert bad == 0
    # lemma-suite witnesses are verified at creation time by _minor_case;
    # re-check a sample end to end through the JSON layer
    from minorsmith.minors import witness_from_dict

    rep = verify("E20-split")
    for o in rep.outcomes:
        if o.witness and "branch_sets" in o.witness:
            w = witness_from_dict({k: v for k, v in o.witness.items() if k != "pattern"})
            assert set(w.branch_sets)
    _announce(10, f"{len(_WITNESSES)} gathered witnesses all pass verify_certificate",
              time.time() - t0)
