"""Line-oriented text formats for matroids and graphs, plus result records.

Matroid files:
    # optional comments
    elements x y z p q r
    row 111000
    row 110101

Graph files:
    vertices 3
    edge 1 2 bottom

Row strings are written first-label-leftmost in header order, so files
diff cleanly against printed matrices.  Parse errors carry line numbers.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid, Graph


class FileFormatError(ValueError):
    """Malformed matroid/graph file; message includes the offending line."""


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_matroid(text: str) -> BinaryMatroid:
    labels = None
    rows = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "elements":
            if labels is not None:
                raise FileFormatError(f"line {lineno}: duplicate elements header")
            labels = tuple(tokens[1:])
        elif tokens[0] == "row":
            if labels is None:
                raise FileFormatError(f"line {lineno}: row before elements header")
            if len(tokens) != 2:
                raise FileFormatError(f"line {lineno}: expected 'row <bits>'")
            bits = tokens[1]
            if len(bits) != len(labels):
                raise FileFormatError(
                    f"line {lineno}: row has {len(bits)} entries for "
                    f"{len(labels)} elements")
            if set(bits) - {"0", "1"}:
                raise FileFormatError(f"line {lineno}: row entries must be 0/1")
            rows.append(sum(int(b) << j for j, b in enumerate(bits)))
        else:
            raise FileFormatError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if labels is None:
        raise FileFormatError("missing 'elements' header line")
    try:
        return BinaryMatroid(labels, Gf2Matrix(tuple(rows), len(labels)))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None


def write_matroid(m: BinaryMatroid) -> str:
    lines = ["elements " + " ".join(m.labels)]
    lines.extend("row " + m.rep.row_string(i) for i in range(m.rep.n_rows))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n_vertices = None
    edges = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "vertices":
            if n_vertices is not None:
                raise FileFormatError(f"line {lineno}: duplicate vertices header")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise FileFormatError(f"line {lineno}: expected 'vertices <n>'")
            n_vertices = int(tokens[1])
        elif tokens[0] == "edge":
            if n_vertices is None:
                raise FileFormatError(f"line {lineno}: edge before vertices header")
            if len(tokens) != 4:
                raise FileFormatError(f"line {lineno}: expected 'edge <u> <v> <label>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise FileFormatError(f"line {lineno}: endpoints must be integers") \
                    from None
            if not (1 <= u <= n_vertices and 1 <= v <= n_vertices):
                raise FileFormatError(
                    f"line {lineno}: endpoint outside 1..{n_vertices}")
            edges.append((u, v, tokens[3]))
        else:
            raise FileFormatError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if n_vertices is None:
        raise FileFormatError("missing 'vertices' header line")
    try:
        return Graph(n_vertices, tuple(edges))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None


def write_graph(g: Graph) -> str:
    lines = [f"vertices {g.n_vertices}"]
    lines.extend(f"edge {u} {v} {lab}" for u, v, lab in g.edges)
    return "\n".join(lines) + "\n"


def load_any(path) -> tuple[str, BinaryMatroid, Graph | None]:
    """Load a matroid or graph file; graphs also yield their cycle matroid.

    Returns (kind, matroid, graph) with kind in {"matroid", "graph"}.
    """
    text = Path(path).read_text()
    for _, line in _content_lines(text):
        head = line.split()[0]
        if head == "elements":
            return "matroid", parse_matroid(text), None
        if head == "vertices":
            g = parse_graph(text)
            return "graph", BinaryMatroid.from_graph(g), g
        break
    raise FileFormatError(
        f"{path}: first directive must be 'elements' or 'vertices'")


# -- machine-readable result records ------------------------------------------


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def result_record(operation: str, inputs: dict, params: dict,
                  matroid: BinaryMatroid | None = None, **extra) -> dict:
    """Key/value document emitted by every CLI command.

    The output matroid is embedded as matroid-file lines so the record
    round-trips through parse_matroid.
    """
    record = {"operation": operation, "inputs": inputs, "params": params}
    if matroid is not None:
        record["matroid"] = write_matroid(matroid).splitlines()
    record.update(extra)
    return record


def record_to_json(record: dict) -> str:
    return json.dumps(record, indent=2, sort_keys=True)


def matroid_from_record(record: dict) -> BinaryMatroid:
    return parse_matroid("\n".join(record["matroid"]))
