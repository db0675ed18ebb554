"""graph6, DOT and JSON edge-list serialization for :class:`Graph`."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph

__all__ = [
    "render_label",
    "to_graph6",
    "from_graph6",
    "to_dot",
    "to_json_dict",
    "to_json",
    "from_json_dict",
]


def render_label(label: Any) -> str:
    """Line-graph vertices carry endpoint pairs; they render as ``a|b``."""
    if isinstance(label, tuple):
        return "|".join(render_label(x) for x in label)
    return str(label)


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 string without header or trailing newline.

    Upper-triangle bits are taken column by column: x(0,1), x(0,2), x(1,2), ...
    """
    n = g.order
    nbrs = g.neighbor_sets
    bits = [1 if i in nbrs[j] else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (_encode_order(n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = [c - 63 for c in data.encode("ascii")]
    if any(not 0 <= c < 64 for c in raw):
        raise ValueError("invalid graph6 character")
    if raw[0] != 63:
        n, pos = raw[0], 1
    elif len(raw) > 1 and raw[1] == 63:
        n, pos = 0, 2
        for c in raw[2:8]:
            n = (n << 6) | c
        pos = 8
    else:
        n = 0
        for c in raw[1:4]:
            n = (n << 6) | c
        pos = 4
    bits = [(c >> s) & 1 for c in raw[pos:] for s in range(5, -1, -1)]
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ValueError("graph6 body too short")
    edges = []
    it = iter(bits)
    for j in range(1, n):
        for i in range(j):
            if next(it):
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if g.labels is not None:
            lab = render_label(g.labels[v]).replace('"', '\\"')
            lines.append(f'  {v} [label="{lab}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"order": g.order, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        out["labels"] = [render_label(x) for x in g.labels]
    return out


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json_dict(data: dict[str, Any]) -> Graph:
    return Graph.from_edges(
        int(data["order"]),
        [(int(u), int(v)) for u, v in data["edges"]],
        data.get("labels"),
    )
