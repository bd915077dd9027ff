"""graph6 and edge-list encodings.

graph6 follows the standard byte layout: N(n), then the upper triangle in
column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each
byte offset by 63.  The optional ``>>graph6<<`` header is accepted on input
and never written.  Round trips are bit-exact.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph

HEADER = ">>graph6<<"


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126)]
        out.extend(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def graph_from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError(f"invalid graph6 byte in {line!r}")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 order field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6]
            if (byte >> (5 - idx % 6)) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def read_graph6_stream(text: str) -> list[Graph]:
    graphs = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(graph_from_graph6(line))
        except ParseError as exc:
            raise ParseError(str(exc), line=ln) from None
    return graphs


def graph_to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_edgelist(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("first line must be 'n m'", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("first line must be 'n m'", line=1) from None
    edges = []
    for ln, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge lines must be 'u v'", line=ln)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge lines must be 'u v'", line=ln) from None
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header says {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_graph(path: str | Path) -> Graph:
    """Read one graph from a file; sniffs edge-list vs graph6.

    When ``<path>.labels.json`` exists (a label -> vertex map), the labels
    ride along on the returned graph.
    """
    path = Path(path)
    text = path.read_text()
    first = text.lstrip().splitlines()[0] if text.strip() else ""
    parts = first.split()
    if len(parts) == 2 and all(p.isdigit() for p in parts):
        g = graph_from_edgelist(text)
    else:
        g = graph_from_graph6(first)
    sidecar = path.with_name(path.name + ".labels.json")
    if sidecar.is_file():
        import json

        mapping = json.loads(sidecar.read_text())
        labels = [""] * g.n
        for label, v in mapping.items():
            if not 0 <= int(v) < g.n:
                raise ParseError(f"label {label!r} maps to vertex {v} out of range")
            labels[int(v)] = str(label)
        g = Graph.from_adj_masks(g._adj, labels)
    return g


def write_labels_sidecar(path: str | Path, labels: dict) -> Path:
    import json

    path = Path(path)
    sidecar = path.with_name(path.name + ".labels.json")
    sidecar.write_text(json.dumps(labels, indent=1, sort_keys=True) + "\n")
    return sidecar


def load_graphs(path: str | Path) -> list[Graph]:
    """Read a graph6 stream (one graph per line)."""
    return read_graph6_stream(Path(path).read_text())
