"""Text, JSON and DOT formats for graphs, digraphs, covers and designs.

Text format: a header line ``n m`` followed by ``m`` lines ``u v``.  Blank
lines and ``#`` comments are ignored.  JSON: ``{"n": ..., "edges": [...]}``
for graphs, ``{"n": ..., "arcs": [...]}`` for digraphs.
"""

from __future__ import annotations

import json
from typing import Any

from .cover import CliqueCover, SdrAssignment
from .designs import Bibd
from .errors import ParseError
from .graphs import Digraph, Graph


def _parse_text_pairs(text: str) -> tuple[int, list[tuple[int, int]], list[int]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty input", 1, 1)
    lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError("header must be 'n m'", lineno, 1)
    n, m = (_int_field(header, f, lineno) for f in fields)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno, 1)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} pairs, found {len(body)}", lineno, len(header.rstrip()))
    pairs, lines = [], []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected two vertex indices 'u v'", lineno, 1)
        pairs.append(tuple(_int_field(line, f, lineno) for f in fields))
        lines.append(lineno)
    return n, pairs, lines


def _int_field(line: str, token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno, line.index(token) + 1) from None


def _check_pairs(n: int, pairs, lines, directed: bool) -> None:
    seen = set()
    kind = "arc" if directed else "edge"
    for idx, (u, v) in enumerate(pairs):
        line = lines[idx] if lines else None
        if u == v:
            raise ParseError(f"loop at vertex {u}", line, 1)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"{kind} ({u}, {v}) out of range for n={n}", line, 1)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate {kind} ({u}, {v})", line, 1)
        seen.add(key)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _json_pairs(data: Any, key: str) -> tuple[int, list[tuple[int, int]]]:
    if not isinstance(data, dict) or "n" not in data or key not in data:
        raise ParseError(f'expected an object with "n" and "{key}"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError('"n" must be a non-negative integer')
    pairs = []
    for item in data[key]:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise ParseError(f"malformed pair {item!r} in {key!r}")
        pairs.append((item[0], item[1]))
    return n, pairs


def _looks_like_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def parse_graph(text: str) -> Graph:
    if _looks_like_json(text):
        n, pairs = _json_pairs(_load_json(text), "edges")
        lines = None
    else:
        n, pairs, lines = _parse_text_pairs(text)
    _check_pairs(n, pairs, lines, directed=False)
    return Graph(n, pairs)


def parse_digraph(text: str) -> Digraph:
    if _looks_like_json(text):
        n, pairs = _json_pairs(_load_json(text), "arcs")
        lines = None
    else:
        n, pairs, lines = _parse_text_pairs(text)
    _check_pairs(n, pairs, lines, directed=True)
    return Digraph(n, pairs)


def parse_any(text: str, directed: bool = False) -> Graph | Digraph:
    """JSON decides by its key; text input needs ``directed`` to say which."""
    if _looks_like_json(text):
        data = _load_json(text)
        if isinstance(data, dict) and "arcs" in data:
            return parse_digraph(text)
        return parse_graph(text)
    return parse_digraph(text) if directed else parse_graph(text)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def digraph_to_json(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in d.sorted_arcs()]}


def to_json(obj: Graph | Digraph) -> dict:
    return digraph_to_json(obj) if isinstance(obj, Digraph) else graph_to_json(obj)


def to_text(obj: Graph | Digraph) -> str:
    pairs = obj.sorted_arcs() if isinstance(obj, Digraph) else obj.sorted_edges()
    lines = [f"{obj.n} {len(pairs)}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def to_dot(obj: Graph | Digraph, name: str = "G", labels: list[str] | None = None) -> str:
    directed = isinstance(obj, Digraph)
    keyword, link = ("digraph", "->") if directed else ("graph", "--")
    pairs = obj.sorted_arcs() if directed else obj.sorted_edges()
    out = [f"{keyword} {name} {{"]
    for v in range(obj.n):
        label = f' [label="{labels[v]}"]' if labels else ""
        out.append(f"  {v}{label};")
    out.extend(f"  {u} {link} {v};" for u, v in pairs)
    out.append("}")
    return "\n".join(out) + "\n"


def parse_cover(text: str) -> CliqueCover:
    data = _load_json(text)
    if not isinstance(data, dict) or not isinstance(data.get("cliques"), list):
        raise ParseError('expected {"cliques": [[v, ...], ...]}')
    cliques = []
    for c in data["cliques"]:
        if not isinstance(c, list) or not all(isinstance(v, int) for v in c) or len(set(c)) != len(c):
            raise ParseError(f"malformed clique {c!r}")
        cliques.append(c)
    return CliqueCover(cliques)


def cover_to_json(c: CliqueCover) -> dict:
    return {"cliques": c.as_lists()}


def parse_sdr(text: str) -> SdrAssignment:
    data = _load_json(text)
    reps = data.get("representatives") if isinstance(data, dict) else None
    if not isinstance(reps, list) or not all(isinstance(v, int) for v in reps):
        raise ParseError('expected {"representatives": [v, ...]}')
    return SdrAssignment(reps)


def sdr_to_json(s: SdrAssignment) -> dict:
    return {"representatives": list(s.representatives)}


def parse_bibd(text: str) -> Bibd:
    data = _load_json(text)
    keys = ("b", "v", "r", "k", "lambda", "blocks")
    if not isinstance(data, dict) or any(key not in data for key in keys):
        raise ParseError(f"BIBD object needs keys {', '.join(keys)}")
    for key in keys[:-1]:
        if not isinstance(data[key], int) or isinstance(data[key], bool):
            raise ParseError(f'"{key}" must be an integer')
    blocks = data["blocks"]
    if not isinstance(blocks, list) or not all(
        isinstance(B, list) and all(isinstance(x, int) for x in B) for B in blocks
    ):
        raise ParseError('"blocks" must be a list of integer lists')
    return Bibd(data["b"], data["v"], data["r"], data["k"], data["lambda"], blocks)


def bibd_to_json(d: Bibd) -> dict:
    return d.as_dict()


def certificate_to_json(cert) -> dict:
    out: dict = {"verdict": cert.verdict}
    if cert.witness is not None:
        out["witness"] = digraph_to_json(cert.witness)
    if cert.obstruction is not None:
        out["obstruction"] = cert.obstruction
    return out


def verdict_to_json(verdict) -> dict:
    out: dict = {"relation": verdict.relation, "rationale": verdict.rationale}
    if verdict.witness is not None:
        out["witness"] = graph_to_json(verdict.witness)
    out["claims"] = [
        {
            "family": [c.family.i, c.family.j],
            "other": [c.other.i, c.other.j],
            "contained": c.contained,
            "reason": c.reason,
            **({"witness": graph_to_json(c.witness)} if c.witness is not None else {}),
        }
        for c in verdict.claims
    ]
    return out
