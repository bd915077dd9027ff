"""Named graph catalog: built-in constructions, expectations, validation.

Every built-in records the invariants it is expected to satisfy; validate()
recomputes them with the engine, so a wrong reconstruction fails loudly
instead of silently poisoning downstream case analyses.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import DuplicateName, ParseError, UnknownName
from .formats import graph_from_graph6
from .graph import Graph


@dataclass(frozen=True)
class Expectations:
    order: Optional[int] = None
    size: Optional[int] = None
    degree_sequence: Optional[tuple[int, ...]] = None
    aut_order: Optional[int] = None
    connectivity_at_least: Optional[int] = None
    internally_4_connected: Optional[bool] = None
    hamiltonian: Optional[bool] = None
    bipartite: Optional[bool] = None
    bipartite_odd: Optional[bool] = None
    has_triangle: Optional[bool] = None
    must_contain_minors: tuple[str, ...] = ()
    must_not_contain_minors: tuple[str, ...] = ()


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    labels: dict[str, int] = field(default_factory=dict)
    expectations: Expectations = field(default_factory=Expectations)
    provenance: str = "paper-text"  # paper-text | external-data

    def vertex_of(self, label: str) -> int:
        return self.labels[label]


# ---------------------------------------------------------------------------
# Built-in constructions


def _k34() -> NamedGraph:
    labels = {"k1": 0, "k2": 1, "k3": 2, "k1_1": 3, "k1_2": 4, "k2_1": 5, "k2_2": 6}
    edges = [(i, j) for i in range(3) for j in range(3, 7)]
    return NamedGraph(
        "K34",
        Graph(7, edges),
        labels,
        Expectations(
            order=7,
            size=12,
            aut_order=144,
            connectivity_at_least=3,
            hamiltonian=False,
            bipartite_odd=True,
            internally_4_connected=False,
        ),
    )


def _cube_edges() -> list[tuple[int, int]]:
    return [
        (i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)
    ]


def _cube() -> NamedGraph:
    labels = {f"c{i:03b}": i for i in range(8)}
    return NamedGraph(
        "Cube",
        Graph(8, _cube_edges()),
        labels,
        Expectations(order=8, size=12, aut_order=48, hamiltonian=True, bipartite=True,
                     connectivity_at_least=3),
    )


def _qplus() -> NamedGraph:
    # cube plus an apex joined to three pairwise non-adjacent cube vertices;
    # all independent triples of the cube are equivalent, so the choice of
    # {3, 5, 6} is immaterial up to isomorphism (checked in tests).
    edges = _cube_edges() + [(8, 3), (8, 5), (8, 6)]
    labels = {f"c{i:03b}": i for i in range(8)}
    labels["apex"] = 8
    return NamedGraph(
        "Qplus",
        Graph(9, edges),
        labels,
        Expectations(
            order=9,
            size=15,
            aut_order=12,
            connectivity_at_least=3,
            hamiltonian=False,
            bipartite_odd=True,
            must_not_contain_minors=("K34",),
        ),
    )


def _herschel() -> NamedGraph:
    # outer diamond T,R,B,L; inner diamonds (mu,a,M,b) and (M,c,md,d)
    names = ["T", "R", "B", "L", "a", "b", "c", "d", "M", "mu", "md"]
    labels = {s: i for i, s in enumerate(names)}
    L = labels
    edges = [
        (L["T"], L["R"]), (L["R"], L["B"]), (L["B"], L["L"]), (L["L"], L["T"]),
        (L["mu"], L["a"]), (L["a"], L["M"]), (L["M"], L["b"]), (L["b"], L["mu"]),
        (L["M"], L["c"]), (L["c"], L["md"]), (L["md"], L["d"]), (L["d"], L["M"]),
        (L["T"], L["mu"]), (L["B"], L["md"]),
        (L["L"], L["a"]), (L["L"], L["c"]), (L["R"], L["b"]), (L["R"], L["d"]),
    ]
    return NamedGraph(
        "Herschel",
        Graph(11, edges),
        labels,
        Expectations(
            order=11,
            size=18,
            aut_order=12,
            connectivity_at_least=3,
            hamiltonian=False,
            bipartite_odd=True,
            degree_sequence=(4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 3),
            must_not_contain_minors=("K34", "Qplus"),
        ),
    )


def _v8() -> NamedGraph:
    labels = {f"v{i + 1}": i for i in range(8)}
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return NamedGraph(
        "V8",
        Graph(8, edges),
        labels,
        Expectations(order=8, size=12, aut_order=16, connectivity_at_least=3,
                     hamiltonian=True, degree_sequence=(3,) * 8),
    )


def _d17() -> NamedGraph:
    labels = {f"d1_{i + 1}": i for i in range(4)}
    labels.update({f"d2_{i + 1}": 4 + i for i in range(4)})
    edges = (
        [(i, j) for i in range(4) for j in range(i + 1, 4)]
        + [(4 + i, 4 + j) for i in range(4) for j in range(i + 1, 4)]
        + [(i, i + 4) for i in range(4)]
    )
    return NamedGraph(
        "D17",
        Graph(8, edges),
        labels,
        Expectations(
            order=8,
            size=16,
            aut_order=48,
            internally_4_connected=True,
            hamiltonian=True,
            must_not_contain_minors=("K34", "Qplus"),
        ),
    )


def _e20() -> NamedGraph:
    names = ["e0", "e1_1", "e1_2", "e1_3", "e2", "e3_1", "e3_2", "e3_3", "e4"]
    labels = {s: i for i, s in enumerate(names)}
    L = labels
    edges = [
        (L["e0"], L["e1_1"]), (L["e0"], L["e1_2"]), (L["e0"], L["e1_3"]), (L["e0"], L["e2"]),
        (L["e1_1"], L["e1_2"]), (L["e1_2"], L["e1_3"]), (L["e1_1"], L["e1_3"]),
        (L["e1_1"], L["e3_1"]), (L["e1_2"], L["e3_2"]), (L["e1_3"], L["e3_3"]),
        (L["e2"], L["e3_1"]), (L["e2"], L["e3_2"]), (L["e2"], L["e3_3"]),
        (L["e3_1"], L["e4"]), (L["e3_2"], L["e4"]), (L["e3_3"], L["e4"]),
    ]
    return NamedGraph(
        "E20",
        Graph(9, edges),
        labels,
        Expectations(
            order=9,
            size=16,
            aut_order=6,
            internally_4_connected=True,
            hamiltonian=True,
            degree_sequence=(4, 4, 4, 4, 4, 3, 3, 3, 3),
            must_not_contain_minors=("K34", "Qplus"),
        ),
    )


def _e22() -> NamedGraph:
    names = ["eps0"] + [f"eps1_{i}" for i in range(1, 5)] + [f"eps2_{i}" for i in range(1, 5)]
    labels = {s: i for i, s in enumerate(names)}
    edges = []
    for i in range(1, 5):  # eps1_i ~ eps2_i, eps2_{i+1}, eps2_{i+3}  (mod 4)
        for off in (0, 1, 3):
            j = (i - 1 + off) % 4 + 1
            edges.append((labels[f"eps1_{i}"], labels[f"eps2_{j}"]))
    edges += [(labels["eps0"], labels[f"eps2_{j}"]) for j in range(1, 5)]
    return NamedGraph(
        "E22",
        Graph(9, edges),
        labels,
        Expectations(
            order=9,
            size=16,
            aut_order=24,
            internally_4_connected=True,
            hamiltonian=False,
            bipartite_odd=True,
            must_contain_minors=("Qplus",),
            must_not_contain_minors=("K34",),
        ),
    )


def _f4() -> NamedGraph:
    names = (
        ["f1"] + [f"f1_{j}" for j in range(1, 5)] + ["f2"] + [f"f2_{j}" for j in range(1, 5)]
    )
    labels = {s: i for i, s in enumerate(names)}
    L = labels
    edges = []
    for i in (1, 2):
        hub, mid = L[f"f{i}"], L[f"f{i}_3"]
        for j in (1, 2, 4):
            edges.append((hub, L[f"f{i}_{j}"]))
            edges.append((mid, L[f"f{i}_{j}"]))
    for j in range(1, 5):  # cross edges f1_j ~ f2_{5-j}
        edges.append((L[f"f1_{j}"], L[f"f2_{5 - j}"]))
    return NamedGraph(
        "F4",
        Graph(10, edges),
        labels,
        Expectations(
            order=10,
            size=16,
            aut_order=4,
            internally_4_connected=True,
            hamiltonian=True,
            has_triangle=False,
            must_not_contain_minors=("K34", "Qplus"),
        ),
    )


def _k33() -> NamedGraph:
    labels = {f"a{i + 1}": i for i in range(3)}
    labels.update({f"b{i + 1}": 3 + i for i in range(3)})
    edges = [(i, 3 + j) for i in range(3) for j in range(3)]
    return NamedGraph(
        "K33",
        Graph(6, edges),
        labels,
        Expectations(order=6, size=9, aut_order=72, internally_4_connected=True,
                     hamiltonian=True, bipartite=True),
    )


def _line_k33() -> NamedGraph:
    from .graph import line_graph

    base = _k33()
    lg = line_graph(base.graph)
    labels = {}
    for idx, (u, v) in enumerate(base.graph.edges()):
        lu = [s for s, w in base.labels.items() if w == u][0]
        lv = [s for s, w in base.labels.items() if w == v][0]
        labels[f"{lu}{lv}"] = idx
    return NamedGraph(
        "LineK33",
        lg,
        labels,
        Expectations(order=9, size=18, aut_order=72, hamiltonian=True,
                     degree_sequence=(4,) * 9),
    )


def _k23() -> NamedGraph:
    labels = {"u1": 0, "u2": 1, "w1": 2, "w2": 3, "w3": 4}
    edges = [(i, j) for i in range(2) for j in range(2, 5)]
    return NamedGraph(
        "K23",
        Graph(5, edges),
        labels,
        Expectations(order=5, size=6, hamiltonian=False, bipartite_odd=True,
                     connectivity_at_least=2),
    )


def _wheel(k: int) -> NamedGraph:
    if k < 3:
        raise UnknownName(f"Wheel({k}): rim must have >= 3 vertices")
    labels = {f"r{i}": i for i in range(k)}
    labels["hub"] = k
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return NamedGraph(
        f"Wheel({k})",
        Graph(k + 1, edges),
        labels,
        Expectations(order=k + 1, size=2 * k, hamiltonian=True,
                     aut_order=24 if k == 3 else 2 * k),
    )


_BUILDERS = {
    "K34": _k34,
    "Qplus": _qplus,
    "Herschel": _herschel,
    "V8": _v8,
    "Cube": _cube,
    "D17": _d17,
    "E20": _e20,
    "E22": _e22,
    "F4": _f4,
    "K33": _k33,
    "LineK33": _line_k33,
    "K23": _k23,
}

BUILTIN_NAMES = tuple(_BUILDERS) + ("Wheel(n)",)

_WHEEL_RE = re.compile(r"^Wheel\((\d+)\)$")


def builtin(name: str) -> NamedGraph:
    m = _WHEEL_RE.match(name)
    if m:
        return _wheel(int(m.group(1)))
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownName(name) from None


def builtin_graph(name: str) -> Graph:
    return builtin(name).graph


# ---------------------------------------------------------------------------
# Collection files


_EXPECTATION_KEYS = {f.name for f in Expectations.__dataclass_fields__.values()}  # type: ignore[attr-defined]


def _expectations_from_dict(d: dict, entry: int) -> Expectations:
    kwargs = {}
    for key, val in d.items():
        if key not in _EXPECTATION_KEYS:
            raise ParseError(f"unknown expectation key {key!r}", entry=entry)
        if key in ("must_contain_minors", "must_not_contain_minors"):
            val = tuple(val)
        elif key == "degree_sequence":
            val = tuple(val)
        kwargs[key] = val
    return Expectations(**kwargs)


def load_collection(path: str | Path) -> list[NamedGraph]:
    """Parse a JSON collection of named graphs with expectations.

    Entries carry either {n, edges} or a graph6 payload; labels are optional.
    Structural problems raise ParseError with the entry index; semantic
    expectations are checked separately by validate().
    """
    text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", line=exc.lineno) from None
    if not isinstance(raw, list):
        raise ParseError("collection must be a JSON array")
    out = []
    seen = set()
    for idx, entry in enumerate(raw):
        if not isinstance(entry, dict) or "name" not in entry:
            raise ParseError("entry must be an object with a 'name'", entry=idx)
        name = entry["name"]
        if name in seen:
            raise DuplicateName(name)
        seen.add(name)
        if "graph6" in entry:
            try:
                g = graph_from_graph6(entry["graph6"])
            except ParseError as exc:
                raise ParseError(f"{name}: {exc}", entry=idx) from None
        else:
            if "n" not in entry or "edges" not in entry:
                raise ParseError(f"{name}: need n/edges or graph6", entry=idx)
            try:
                g = Graph(entry["n"], [tuple(e) for e in entry["edges"]])
            except ValueError as exc:
                raise ParseError(f"{name}: {exc}", entry=idx) from None
        labels = {str(k): int(v) for k, v in entry.get("labels", {}).items()}
        if labels:
            vals = sorted(labels.values())
            if len(labels) != g.n or vals != list(range(g.n)):
                raise ParseError(f"{name}: labels are not a bijection onto vertices",
                                 entry=idx)
        expectations = _expectations_from_dict(entry.get("expectations", {}), idx)
        out.append(
            NamedGraph(name, g, labels, expectations, provenance="external-data")
        )
    return out


# ---------------------------------------------------------------------------
# Validation


def validate(ng: NamedGraph):
    """Check every recorded expectation against the engine.

    Returns a VerificationReport whose cases are the individual claims.
    """
    from . import minors
    from .canon import automorphism_group
    from .graph import (
        bipartition,
        has_triangle,
        is_internally_4_connected,
        is_k_connected,
    )
    from .report import CaseOutcome, VerificationReport, mk_report

    exp = ng.expectations
    g = ng.graph
    outcomes = []

    def claim(cid, expected, actual, witness=None):
        outcomes.append(
            CaseOutcome(
                case_id=cid,
                ok=expected == actual,
                detail=f"expected {expected!r}, got {actual!r}",
                witness=witness,
            )
        )

    if exp.order is not None:
        claim("order", exp.order, g.n)
    if exp.size is not None:
        claim("size", exp.size, g.m)
    if exp.degree_sequence is not None:
        claim("degree_sequence", tuple(exp.degree_sequence), g.degree_sequence())
    if exp.aut_order is not None:
        claim("aut_order", exp.aut_order, automorphism_group(g).order)
    if exp.connectivity_at_least is not None:
        claim(f"{exp.connectivity_at_least}-connected", True,
              is_k_connected(g, exp.connectivity_at_least))
    if exp.internally_4_connected is not None:
        claim("internally_4_connected", exp.internally_4_connected,
              is_internally_4_connected(g))
    if exp.hamiltonian is not None:
        cycle = minors.is_hamiltonian(g)
        claim("hamiltonian", exp.hamiltonian, cycle is not None,
              witness=None if cycle is None else minors.witness_to_dict(cycle))
    if exp.bipartite is not None:
        claim("bipartite", exp.bipartite, bipartition(g) is not None)
    if exp.bipartite_odd is not None:
        claim("bipartite_odd", exp.bipartite_odd,
              bipartition(g) is not None and g.n % 2 == 1)
    if exp.has_triangle is not None:
        claim("has_triangle", exp.has_triangle, has_triangle(g))
    for pat_name in exp.must_contain_minors:
        cert = minors.has_minor(g, builtin_graph(pat_name))
        claim(f"contains_{pat_name}_minor", True, cert is not None,
              witness=None if cert is None else minors.witness_to_dict(cert))
    for pat_name in exp.must_not_contain_minors:
        cert = minors.has_minor(g, builtin_graph(pat_name))
        claim(f"no_{pat_name}_minor", True, cert is None)

    return mk_report(f"catalog:{ng.name}", outcomes, cases_total=len(outcomes))
