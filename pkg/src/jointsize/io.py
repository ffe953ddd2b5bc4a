"""Graph serialization (graph6, edge lists) and report text.

graph6
    ``N(n)`` then the upper triangle of the adjacency matrix, column by
    column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte,
    high bit first, zero padded, each byte offset by 63.  ``N(n)`` is the
    single byte ``63 + n`` for n <= 62, else ``126`` and three 6-bit bytes.

edge list
    First non-comment line is the vertex count, then one ``u v`` pair per
    line with 0-based labels.  ``#`` starts a comment.

reports
    JSON objects with ``"schema": 1`` and ``"type"`` in
    {check, sweep, probe}.  Rationals are ``"num/den"`` strings and integers
    are decimal strings, so values of any size survive any JSON reader.
    Booleans stay JSON booleans, text stays text, and seconds are JSON
    numbers.
"""

from __future__ import annotations

import json
import re
from dataclasses import fields
from fractions import Fraction
from pathlib import Path
from typing import Union

from .graph import Graph, GraphError, build_graph
from .reports import CheckReport, ProbeResult, SweepSummary

SCHEMA = 1
MAX_GRAPH6_ORDER = 258047


class FormatError(ValueError):
    """Malformed graph text; ``offset`` (graph6) or ``line`` (edge list) locate it."""

    def __init__(self, message: str, *, offset: int = None, line: int = None):
        where = f"byte {offset}" if offset is not None else f"line {line}"
        super().__init__(f"{where}: {message}")
        self.offset = offset
        self.line = line


def _n_header(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 supports n <= {MAX_GRAPH6_ORDER}, got {n}")
    out = bytearray(_n_header(n))
    acc = nbits = 0
    rows = g.rows
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    data = text.rstrip("\r\n")
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = data.encode("latin-1", errors="replace")
    for pos, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise FormatError(f"byte value {b} outside 63..126", offset=pos)
    if not raw:
        raise FormatError("empty graph6 line", offset=0)
    if raw[0] != 126:
        n, pos = raw[0] - 63, 1
    else:
        if len(raw) < 4:
            raise FormatError("truncated long-form order header", offset=len(raw))
        if raw[1] == 126:
            raise FormatError(f"orders above {MAX_GRAPH6_ORDER} are not supported", offset=1)
        n = (raw[1] - 63) << 12 | (raw[2] - 63) << 6 | (raw[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[pos:]
    if len(body) < nbytes:
        raise FormatError(f"body truncated: expected {nbytes} bytes, got {len(body)}", offset=len(raw))
    if len(body) > nbytes:
        raise FormatError("trailing bytes after body", offset=pos + nbytes)
    if nbytes:
        pad = nbytes * 6 - nbits
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise FormatError("nonzero padding bits", offset=pos + nbytes - 1)
    rows = [0] * n
    k = 0
    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    total = nbytes * 6
    for j in range(1, n):
        for i in range(j):
            if bits >> (total - 1 - k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1 or not tokens[0].isdigit():
                raise FormatError(f"expected vertex count, got {line!r}", line=lineno)
            n = int(tokens[0])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise FormatError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise FormatError(f"endpoint out of range 0..{n - 1} in {line!r}", line=lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise FormatError("missing vertex count", line=1)
    return build_graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse graph6 or edge-list text; digits never occur in graph6."""
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            if stripped[0].isdigit():
                return parse_edge_list(text)
            return parse_graph6(stripped)
    raise FormatError("no graph in input", line=1)


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text())


# -- reports ---------------------------------------------------------------

_INT_RE = re.compile(r"-?\d+\Z")
_RAT_RE = re.compile(r"-?\d+/\d+\Z")


def encode_value(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        if _INT_RE.match(value) or _RAT_RE.match(value):
            raise ValueError(f"text field {value!r} would read back as a number")
        return value
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if hasattr(value, "item"):  # numpy scalar
        return encode_value(value.item())
    raise TypeError(f"cannot serialize {type(value).__name__}")


def decode_value(value):
    if isinstance(value, str):
        if _INT_RE.match(value):
            return int(value)
        if _RAT_RE.match(value):
            return Fraction(value)
        return value
    if isinstance(value, dict):
        return {k: decode_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode_value(v) for v in value]
    return value


_TYPES = {"check": CheckReport, "sweep": SweepSummary, "probe": ProbeResult}


def report_to_dict(report) -> dict:
    for tag, cls in _TYPES.items():
        if isinstance(report, cls):
            body = {f.name: getattr(report, f.name) for f in fields(cls)}
            return {"schema": SCHEMA, "type": tag, **encode_value(body)}
    raise TypeError(f"not a report: {type(report).__name__}")


def report_from_dict(obj: dict):
    if obj.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
    cls = _TYPES[obj["type"]]
    body = {f.name: decode_value(obj[f.name]) for f in fields(cls) if f.name in obj}
    if cls is CheckReport and body.get("residual") is not None:
        body["residual"] = Fraction(body["residual"])
    if cls is ProbeResult:
        body["ratio"] = Fraction(body["ratio"])
    return cls(**body)


def emit_report(report, indent=None) -> str:
    return json.dumps(report_to_dict(report), indent=indent, sort_keys=True)


def parse_report(text: str):
    return report_from_dict(json.loads(text))
