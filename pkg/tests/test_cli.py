import json
import os
from pathlib import Path

import pytest

from conftest import complete, petersen
from minorsmith.catalog import builtin_graph
from minorsmith.cli import SweepSpec, run, run_sweep
from minorsmith.errors import ParseError
from minorsmith.formats import graph_from_graph6, graph_to_edgelist, graph_to_graph6


@pytest.fixture
def g6file(tmp_path):
    def write(name, *graphs):
        p = tmp_path / name
        p.write_text("".join(graph_to_graph6(g) + "\n" for g in graphs))
        return str(p)

    return write


def test_hamilton_herschel(g6file, capsys):
    rc = run(["hamilton", g6file("h.g6", builtin_graph("Herschel"))])
    assert rc == 0
    assert "non-hamiltonian" in capsys.readouterr().out


def test_minor_no_k34(g6file, capsys):
    rc = run(["minor", g6file("e20.g6", builtin_graph("E20")),
              g6file("k34.g6", builtin_graph("K34"))])
    assert rc == 0
    assert "no minor" in capsys.readouterr().out


def test_minor_with_witness(tmp_path, g6file, capsys):
    out = tmp_path / "w.json"
    rc = run(["minor", g6file("p.g6", petersen()), g6file("k5.g6", complete(5)),
              "--json", str(out)])
    assert rc == 0
    assert "verified" in capsys.readouterr().out
    w = json.loads(out.read_text())
    assert w["kind"] == "minor" and w["schema"] == "minorsmith.witness/1"


def test_usage_error_returns_2(capsys):
    assert run(["minor"]) == 2
    assert run(["no-such-command"]) == 2
    capsys.readouterr()


def test_missing_file_returns_2(capsys):
    assert run(["hamilton", "/nonexistent/file.g6"]) == 2
    capsys.readouterr()


def test_convert_roundtrip(tmp_path, g6file, capsys):
    src = g6file("v8.g6", builtin_graph("V8"))
    rc = run(["convert", src, "--to-edgelist"])
    out = capsys.readouterr().out
    assert rc == 0
    el = tmp_path / "v8.edges"
    el.write_text(out)
    rc = run(["convert", str(el), "--to-graph6"])
    out2 = capsys.readouterr().out.strip()
    assert rc == 0
    assert out2 == graph_to_graph6(builtin_graph("V8"))


def test_split_enum_counts(capsys):
    rc = run(["split-enum", "builtin:E20"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "4 splits" in out


def test_bridges_cmd(capsys):
    rc = run(["bridges", "builtin:K34", "--anchor", "0,1,2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.count("interior=") == 4  # the 4-side splits into singletons


def test_catalog_validate_single(capsys):
    assert run(["catalog", "validate", "E22"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_single_statement_writes_reports(tmp_path, capsys):
    rc = run(["verify", "F4-split", "--reports", str(tmp_path), "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 0 and "PASS" in out
    rep = json.loads((tmp_path / "F4-split.json").read_text())
    assert rep["status"] == "pass" and rep["schema"] == "minorsmith.report/1"
    index = json.loads((tmp_path / "index.json").read_text())
    assert index["statements"][0]["statement_id"] == "F4-split"
    tsv = (tmp_path / "summary.tsv").read_text().splitlines()
    assert tsv[0].startswith("statement_id\t")
    assert tsv[1].split("\t")[0] == "F4-split"


def test_verify_renders_figures(tmp_path, capsys):
    rc = run(["verify", "E20+I", "--reports", str(tmp_path)])
    capsys.readouterr()
    assert rc == 0
    assert (tmp_path / "E20+I.png").is_file()
    assert (tmp_path / "index.png").is_file()


def test_reports_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MINORSMITH_REPORTS", str(tmp_path / "envdir"))
    rc = run(["verify", "lineK33-hamiltonian", "--no-figures"])
    capsys.readouterr()
    assert rc == 0
    assert (tmp_path / "envdir" / "lineK33-hamiltonian.json").is_file()


# -- sweep ---------------------------------------------------------------------


def test_sweep_k45(g6file, tmp_path, capsys):
    k45 = builtin_graph("K34")  # placeholder to build K45 below
    from conftest import complete_bipartite

    k45 = complete_bipartite(4, 5)
    src = g6file("k45.g6", k45)
    rc = run(["sweep", "--source", src, "--connectivity", "4",
              "--non-hamiltonian", "--check", "K34",
              "--reports", str(tmp_path), "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "passed=1" in out and "failed=0" in out


def test_sweep_filters_out_hamiltonian(g6file, tmp_path, capsys):
    from conftest import complete_bipartite

    src = g6file("k44.g6", complete_bipartite(4, 4))
    rc = run(["sweep", "--source", src, "--connectivity", "4",
              "--non-hamiltonian", "--check", "K34",
              "--reports", str(tmp_path), "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "scanned=1 filtered_in=0" in out


def test_sweep_reports_failures_verbatim(g6file, tmp_path, capsys):
    from conftest import cycle

    c7 = cycle(7)
    src = g6file("c7.g6", c7)
    rc = run(["sweep", "--source", src, "--check", "K34",
              "--reports", str(tmp_path), "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 1
    assert graph_to_graph6(c7) in out
    rep = json.loads((tmp_path / "sweep.json").read_text())
    assert rep["counts"]["failed"] == 1
    assert rep["failures"] == [graph_to_graph6(c7)]


def test_sweep_deterministic_across_workers(g6file, rng):
    from conftest import random_graph

    graphs = [random_graph(rng, rng.randint(4, 8), 0.5) for _ in range(40)]
    lines = "".join(graph_to_graph6(g) + "\n" for g in graphs)
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as fh:
        fh.write(lines)
        path = fh.name
    spec1 = SweepSpec(source=path, connectivity=2, check=["K23"], jobs=1, budget=10)
    spec2 = SweepSpec(source=path, connectivity=2, check=["K23"], jobs=2, budget=10)
    c1, f1, t1 = run_sweep(spec1)
    c2, f2, t2 = run_sweep(spec2)
    assert c1 == c2 and f1 == f2 and t1 == t2
    os.unlink(path)


def test_sweep_parse_error_has_index(tmp_path):
    src = tmp_path / "bad.g6"
    src.write_text("C~\nC\x01\n")
    with pytest.raises(ParseError) as exc:
        run_sweep(SweepSpec(source=str(src), check=["K34"]))
    assert "line 2" in str(exc.value)


def test_sweep_budget_times_out(g6file, tmp_path):
    import random as _r

    rng2 = _r.Random(7)
    big = None
    from conftest import random_graph as _rg

    big = _rg(rng2, 26, 0.6)
    src = g6file("big.g6", big)
    spec = SweepSpec(source=src, internally_4_connected=True, check=["K34"],
                     budget=0.005, jobs=1)
    counts, failures, timeouts = run_sweep(spec)
    assert counts["timed_out"] == 1
    assert timeouts and graph_from_graph6(timeouts[0]) == big
