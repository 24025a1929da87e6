"""Hamilton cycles in tournaments: Camion's criterion, construction, lifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Tournament
from .errors import InvalidCycleError, NoCycleError
from .generate import ModelKind
from .metrics import is_strong


def _normalized(nodes: Sequence[int]) -> tuple[int, ...]:
    nodes = [int(v) for v in nodes]
    k = nodes.index(min(nodes))
    return tuple(nodes[k:] + nodes[:k])


@dataclass(frozen=True)
class HamiltonCycle:
    """Cyclic node sequence, stored rotated to start at its smallest id."""

    nodes: tuple[int, ...]

    @classmethod
    def of(cls, nodes: Sequence[int]) -> "HamiltonCycle":
        if len(nodes) == 0:
            raise InvalidCycleError("empty cycle")
        return cls(_normalized(nodes))

    def __len__(self) -> int:
        return len(self.nodes)

    def problems(self, g: Tournament | None = None, order: int | None = None) -> list[str]:
        order = g.order if g is not None else order if order is not None else len(self.nodes)
        issues = []
        if len(self.nodes) != order:
            issues.append(f"length {len(self.nodes)} != order {order}")
        if sorted(self.nodes) != list(range(order)):
            issues.append("nodes are not a permutation of the node set")
        if g is not None and not issues:
            k = len(self.nodes)
            for i in range(k):
                u, v = self.nodes[i], self.nodes[(i + 1) % k]
                if not g.has_arc(u, v):
                    issues.append(f"missing arc ({u}, {v})")
                    break
        return issues

    def is_valid(self, g: Tournament) -> bool:
        return len(self.nodes) >= 3 and not self.problems(g)


def is_hamiltonian(g: Tournament) -> bool:
    """Camion: a tournament of order >= 3 is Hamiltonian iff it is strong."""
    return g.order >= 3 and is_strong(g)


def find_hamilton_cycle(g: Tournament) -> HamiltonCycle:
    """Construct a Hamilton cycle of a strong tournament of order >= 3.

    Grows a directed cycle one node at a time.  An outside node with both an
    in- and an out-neighbour on the cycle slots in between two consecutive
    cycle nodes.  If none exists, every outside node either beats the whole
    cycle or loses to all of it, and strongness gives an arc ``b -> x`` from a
    loser ``b`` to a winner ``x``; then ``c0 b x c2 ... c_{k-1}`` is one longer.
    Arc counts to and from the cycle are maintained incrementally.
    """
    n = g.order
    if n < 3 or not is_strong(g):
        raise NoCycleError(f"tournament of order {n} is not strong with order >= 3; no Hamilton cycle")
    a = g.adjacency()
    ai = a.astype(np.int32)

    outs, ins = np.flatnonzero(a[0]), np.flatnonzero(a[:, 0])
    u_i, w_i = np.argwhere(a[np.ix_(outs, ins)])[0]
    cycle = [0, int(outs[u_i]), int(ins[w_i])]

    in_cycle = np.zeros(n, dtype=bool)
    to_cycle = np.zeros(n, dtype=np.int32)  # arcs x -> C
    from_cycle = np.zeros(n, dtype=np.int32)  # arcs C -> x

    def add(v: int) -> None:
        in_cycle[v] = True
        to_cycle[:] += ai[:, v]
        from_cycle[:] += ai[v, :]

    def remove(v: int) -> None:
        in_cycle[v] = False
        to_cycle[:] -= ai[:, v]
        from_cycle[:] -= ai[v, :]

    for v in cycle:
        add(v)

    while len(cycle) < n:
        k = len(cycle)
        outside = ~in_cycle
        mixed = np.flatnonzero(outside & (to_cycle > 0) & (from_cycle > 0))
        if mixed.size:
            v = int(mixed[0])
            carr = np.asarray(cycle)
            slot = a[carr, v] & a[v, np.roll(carr, -1)]
            i = int(np.argmax(slot))
            cycle.insert(i + 1, v)
            add(v)
            continue
        winners = np.flatnonzero(outside & (to_cycle == k))
        losers = np.flatnonzero(outside & (from_cycle == k))
        hits = np.argwhere(a[np.ix_(losers, winners)])
        if hits.size == 0:  # unreachable for strong input
            raise NoCycleError("cycle extension stalled; tournament is not strong")
        b, x = int(losers[hits[0][0]]), int(winners[hits[0][1]])
        dropped = cycle[1]
        cycle = [cycle[0], b, x] + cycle[2:]
        remove(dropped)
        add(b)
        add(x)
    return HamiltonCycle.of(cycle)


def has_hamilton_cycle_exhaustive(g: Tournament) -> bool:
    """Backtracking search from node 0; exponential, meant for small orders."""
    n = g.order
    if n < 3:
        return False
    a = g.adjacency()
    used = [False] * n
    used[0] = True

    def extend(v: int, depth: int) -> bool:
        if depth == n:
            return bool(a[v, 0])
        for w in np.flatnonzero(a[v]).tolist():
            if not used[w]:
                used[w] = True
                if extend(w, depth + 1):
                    return True
                used[w] = False
        return False

    return extend(0, 1)


def lift_hamilton_cycle(
    cycle: HamiltonCycle | Sequence[int],
    model: ModelKind | str,
    order: int,
    g: Tournament | None = None,
) -> HamiltonCycle:
    """Lift a Hamilton cycle of a step-t tournament of order ``order`` to step t+1.

    For ``a_1 .. a_r`` the lifted cycle is ``a_1, a_2', a_2, a_3', ..., a_r, a_1'``
    with clone ``x' = order + x``.  It uses only original/clone cross arcs and
    clone-to-parent arcs, so ``model`` does not change the result.  When ``g``
    (the step-t tournament) is given, the input cycle is checked arc by arc.
    """
    ModelKind.parse(model)
    nodes = cycle.nodes if isinstance(cycle, HamiltonCycle) else tuple(int(v) for v in cycle)
    issues = HamiltonCycle(tuple(nodes)).problems(g, order)
    if len(nodes) < 3:
        issues.append("a Hamilton cycle needs at least 3 nodes")
    if issues:
        raise InvalidCycleError("; ".join(issues))
    r = len(nodes)
    lifted = []
    for k in range(r):
        lifted.append(nodes[k])
        lifted.append(order + nodes[(k + 1) % r])
    return HamiltonCycle.of(lifted)
