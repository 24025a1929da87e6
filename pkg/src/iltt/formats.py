"""Edge-list and DOT interchange.

Edge list::

    # comment lines start with '#'
    n 3
    0 1
    1 2
    2 0

The ``n <order>`` header is optional; without it the order is one more than
the largest id.  Every unordered pair must appear exactly once.  Writers emit
the header and arcs in lexicographic order, so output is canonical.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .core import Tournament, make_directed_3_cycle, make_linear_order, make_random
from .errors import ParseError


def to_edgelist(g: Tournament) -> str:
    lines = [f"n {g.order}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs()))
    return "\n".join(lines) + "\n"


def _build(order: int, arcs: list[tuple[int, int, int]]) -> Tournament:
    a = np.zeros((order, order), dtype=bool)
    seen: dict[tuple[int, int], int] = {}
    for u, v, lineno in arcs:
        if not (0 <= u < order and 0 <= v < order):
            raise ParseError(f"arc {u} -> {v} out of range for order {order}", lineno)
        if u == v:
            raise ParseError(f"loop at node {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"pair {{{key[0]}, {key[1]}}} already given on line {seen[key]}", lineno)
        seen[key] = lineno
        a[u, v] = True
    expected = order * (order - 1) // 2
    if len(seen) != expected:
        iu, ju = np.triu_indices(order, k=1)
        for i, j in zip(iu.tolist(), ju.tolist()):
            if (i, j) not in seen:
                raise ParseError(f"pair {{{i}, {j}}} has no arc ({len(seen)} of {expected} pairs given)")
    return Tournament.from_adjacency(a)


def parse_edgelist(text: str) -> Tournament:
    order = None
    arcs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if order is not None or arcs:
                raise ParseError("'n' header must come before any arc and appear once", lineno)
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError(f"bad header {line!r}", lineno)
            order = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer node id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative node id in {line!r}", lineno)
        arcs.append((u, v, lineno))
    if order is None:
        if not arcs:
            raise ParseError("empty edge list without an 'n' header")
        order = 1 + max(max(u, v) for u, v, _ in arcs)
    return _build(order, arcs)


def to_dot(g: Tournament, name: str = "tournament") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.order))
    lines.extend(f"  {u} -> {v};" for u, v in sorted(g.arcs()))
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_HEAD = re.compile(r"^\s*(strict\s+)?digraph\b[^{]*\{\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*;?\s*$")


def parse_dot(text: str) -> Tournament:
    """Parse the DOT subset written by :func:`to_dot` (one statement per line)."""
    nodes: set[int] = set()
    arcs: list[tuple[int, int, int]] = []
    opened = closed = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if not line or line.startswith("#"):
            continue
        if not opened:
            if not _DOT_HEAD.match(line):
                raise ParseError(f"expected 'digraph ... {{', got {line!r}", lineno)
            opened = True
            continue
        if line == "}":
            closed = True
            continue
        if closed:
            raise ParseError("content after closing brace", lineno)
        m = _DOT_EDGE.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            arcs.append((u, v, lineno))
            nodes.update((u, v))
            continue
        m = _DOT_NODE.match(line)
        if m:
            nodes.add(int(m.group(1)))
            continue
        raise ParseError(f"unsupported DOT statement {line!r}", lineno)
    if not (opened and closed):
        raise ParseError("unterminated digraph")
    if not nodes:
        raise ParseError("digraph has no nodes")
    order = max(nodes) + 1
    if nodes != set(range(order)):
        raise ParseError(f"node ids are not contiguous 0..{order - 1}")
    return _build(order, arcs)


def parse_text(text: str) -> Tournament:
    stripped = text.lstrip()
    if stripped.startswith("digraph") or stripped.startswith("strict"):
        return parse_dot(text)
    return parse_edgelist(text)


def read_tournament(path: str | Path) -> Tournament:
    return parse_text(Path(path).read_text())


def resolve_base(spec: str) -> Tournament:
    """``c3``, ``linear:N``, ``random:N:SEED``, or a path to an edge-list / DOT file."""
    parts = spec.split(":")
    try:
        if spec == "c3":
            return make_directed_3_cycle()
        if parts[0] == "linear" and len(parts) == 2:
            return make_linear_order(int(parts[1]))
        if parts[0] == "random" and len(parts) == 3:
            return make_random(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ParseError(f"bad base spec {spec!r}: {exc}") from None
    p = Path(spec)
    if not p.exists():
        raise ParseError(f"base {spec!r} is neither a builtin (c3, linear:N, random:N:SEED) nor a file")
    return read_tournament(p)
