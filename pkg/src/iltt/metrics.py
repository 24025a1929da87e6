"""Strong connectivity, exact directed distances, Wiener index and closed forms."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .core import Tournament, row_bytes, unpack_rows
from .errors import OutOfDomainError

INFINITE = -1
"""Sentinel distance for unreachable ordered pairs; never summed into W."""


def strong_components(g: Tournament) -> list[list[int]]:
    """Strongly connected components, iterative Tarjan.

    Components are returned source-first: every arc between two components
    points from the earlier one to the later one.
    """
    n = g.order
    a = g.adjacency()
    succ = [np.flatnonzero(a[v]).tolist() for v in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.reverse()
    return comps


def _reach_all(rows: np.ndarray, n: int, start: int) -> bool:
    seen = np.zeros(rows.shape[1], dtype=np.uint8)
    seen[start >> 3] |= 1 << (start & 7)
    frontier = [start]
    while frontier:
        nxt = np.bitwise_or.reduce(rows[frontier], axis=0) & ~seen
        if not nxt.any():
            break
        seen |= nxt
        frontier = np.flatnonzero(unpack_rows(nxt, n)).tolist()
    return int(np.unpackbits(seen).sum()) == n


def is_strong(g: Tournament) -> bool:
    """True iff every node reaches every other node."""
    if g.order == 1:
        return True
    a = g.adjacency()
    return _reach_all(g.packed, g.order, 0) and _reach_all(
        np.packbits(a.T, axis=1, bitorder="little"), g.order, 0
    )


def has_sink(g: Tournament) -> bool:
    return bool(np.any(g.out_degrees() == 0))


def _bfs_row(rows: np.ndarray, n: int, source: int) -> np.ndarray:
    dist = np.full(n, INFINITE, dtype=np.int32)
    dist[source] = 0
    seen = np.zeros(row_bytes(n), dtype=np.uint8)
    seen[source >> 3] |= 1 << (source & 7)
    frontier = [source]
    level = 0
    while frontier:
        level += 1
        nxt = np.bitwise_or.reduce(rows[frontier], axis=0) & ~seen
        if not nxt.any():
            break
        seen |= nxt
        frontier = np.flatnonzero(unpack_rows(nxt, n))
        dist[frontier] = level
        frontier = frontier.tolist()
    return dist


def all_pairs_distances(g: Tournament, workers: int = 1) -> np.ndarray:
    """Matrix of directed shortest-path lengths, ``INFINITE`` where unreachable.

    One BFS per source; each level ORs the packed out-rows of the frontier.
    """
    n = g.order
    rows = g.packed
    if workers > 1 and n > 64:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            out = list(pool.map(lambda s: _bfs_row(rows, n, s), range(n)))
    else:
        out = [_bfs_row(rows, n, s) for s in range(n)]
    return np.vstack(out)


def count_alpha(g: Tournament) -> int:
    """Number of arcs ``(u, v)`` with no ``w`` closing the cycle ``u -> v -> w -> u``."""
    a = g.adjacency()
    rows = g.packed
    cols = np.packbits(a.T, axis=1, bitorder="little")
    total = 0
    for u in range(g.order):
        outs = np.flatnonzero(a[u])
        if outs.size == 0:
            continue
        closes = np.any(rows[outs] & cols[u], axis=1)
        total += int(outs.size - np.count_nonzero(closes))
    return total


@dataclass(frozen=True)
class DistanceSummary:
    order: int
    strong: bool
    alpha: int
    diameter: int
    wiener: int | None = None
    avg_distance: Fraction | None = None

    @property
    def avg_distance_float(self) -> float | None:
        return None if self.avg_distance is None else float(self.avg_distance)

    def to_dict(self) -> dict:
        avg = self.avg_distance
        return {
            "order": self.order,
            "strong": self.strong,
            "alpha": self.alpha,
            "diameter": self.diameter,
            "wiener": self.wiener,
            "avg_distance": None
            if avg is None
            else {"numerator": avg.numerator, "denominator": avg.denominator, "float": float(avg)},
        }


def summarize(g: Tournament, distances: np.ndarray | None = None, workers: int = 1) -> DistanceSummary:
    """Aggregate distance statistics; W and L are present only for strong tournaments.

    ``diameter`` is the largest finite distance.
    """
    d = all_pairs_distances(g, workers) if distances is None else distances
    finite = d != INFINITE
    strong = bool(finite.all())
    diameter = int(d[finite].max()) if finite.any() else 0
    alpha = count_alpha(g)
    if not strong:
        return DistanceSummary(g.order, False, alpha, diameter)
    n = g.order
    w = int(d.sum(dtype=np.int64))
    avg = Fraction(w, n * (n - 1)) if n > 1 else None
    return DistanceSummary(n, True, alpha, diameter, w, avg)


def predict_wiener_iltt(n: int, w0: int, t: int) -> int:
    """Closed-form Wiener index of the ILTT iterate at step ``t`` (strong base, n >= 3)."""
    if t < 0:
        raise OutOfDomainError(f"t must be >= 0, got {t}")
    return (1 << (t + 1)) * ((1 << t) - 1) * n + (4**t) * w0


def predict_wiener_ilttd(n: int, alpha: int, t: int) -> int:
    """Closed-form Wiener index of the ILTT_d iterate; defined for ``t >= 1`` only."""
    if t < 1:
        raise OutOfDomainError(f"ILTT_d Wiener closed form needs t >= 1, got {t}")
    half = (1 << (t - 1)) * n
    return 12 * comb(half, 2) + alpha + 3 * half


def avg_distance_from_wiener(w: int, order: int) -> Fraction:
    return Fraction(w, order * (order - 1))
