"""ILTT and ILTT_d cloning steps.

Index convention: for a step from order ``N`` to ``2N``, node ``i < N`` keeps
its identity and node ``N + i`` is the clone of ``i``.  The clone block is
therefore contiguous and the new adjacency in block form is::

    [[A,     A          ],
     [A + I, A  or  A^T ]]

with ``A`` for ILTT and ``A^T`` (the dual) for ILTT_d.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import Tournament, pack_rows, row_bytes, unpack_rows
from .errors import CapacityError, InvalidOrderError

DEFAULT_NODE_CAP = 32768

# Rows built per chunk; bounds the transient dense buffer to ~16 MB.
_CHUNK_CELLS = 1 << 24


class ModelKind(enum.Enum):
    ILTT = "iltt"
    ILTT_D = "ilttd"

    @classmethod
    def parse(cls, text: "str | ModelKind") -> "ModelKind":
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower().replace("_", "")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown model {text!r}; expected 'iltt' or 'ilttd'")


@dataclass(frozen=True)
class StepLineage:
    """Parent/clone maps for one step from order ``parent_order`` to twice that."""

    parent_order: int

    def clone(self, node: int) -> int:
        if not 0 <= node < self.parent_order:
            raise ValueError(f"node {node} is not an original of this step")
        return self.parent_order + node

    def parent(self, node: int) -> int:
        if not self.parent_order <= node < 2 * self.parent_order:
            raise ValueError(f"node {node} is not a clone of this step")
        return node - self.parent_order

    def is_clone(self, node: int) -> bool:
        return node >= self.parent_order

    def project(self, node: int) -> int:
        """Map a node to itself if original, else to its parent."""
        return node - self.parent_order if node >= self.parent_order else node


@dataclass(frozen=True)
class GenerationTrace:
    base: Tournament
    model: ModelKind
    steps: int
    final: Tournament
    lineage: tuple[StepLineage, ...]
    snapshots: tuple[Tournament, ...] | None = field(default=None, repr=False)

    def order_at(self, step: int) -> int:
        return self.base.order << step

    def snapshot(self, step: int) -> Tournament:
        if step == self.steps:
            return self.final
        if self.snapshots is None:
            raise ValueError("trace was built without snapshots")
        return self.snapshots[step]

    def ancestor(self, node: int, step: int | None = None) -> int:
        """Base node that ``node`` (a node of step ``step``) descends from."""
        step = self.steps if step is None else step
        for lin in reversed(self.lineage[:step]):
            node = lin.project(node)
        return node

    def clone_of(self, node: int, step: int) -> int:
        """Clone created at ``step`` (1-based) of a node of step ``step - 1``."""
        return self.lineage[step - 1].clone(node)


def required_order(base_order: int, steps: int) -> int:
    return base_order << steps


def check_capacity(base_order: int, steps: int, node_cap: int = DEFAULT_NODE_CAP) -> None:
    need = required_order(base_order, steps)
    if need > node_cap:
        raise CapacityError(need, node_cap)


def step(g: Tournament, model: ModelKind | str, node_cap: int = DEFAULT_NODE_CAP) -> Tournament:
    """One cloning step; output order is ``2 * g.order``."""
    model = ModelKind.parse(model)
    n = g.order
    check_capacity(n, 1, node_cap)
    m = 2 * n
    out = np.zeros((m, row_bytes(m)), dtype=np.uint8)
    src = g.packed
    chunk = max(1, _CHUNK_CELLS // m)
    for r0 in range(0, n, chunk):
        r1 = min(n, r0 + chunk)
        a = unpack_rows(src[r0:r1], n)
        out[r0:r1] = pack_rows(np.concatenate([a, a], axis=1))
        ai = a.copy()
        ai[np.arange(r1 - r0), np.arange(r0, r1)] = True
        if model is ModelKind.ILTT:
            clone_block = a
        else:
            # columns r0..r1 of A are rows r0..r1 of the dual
            b0 = r0 >> 3
            cols = np.unpackbits(src[:, b0 : ((r1 - 1) >> 3) + 1], axis=1, bitorder="little")
            off = r0 - (b0 << 3)
            clone_block = cols[:, off : off + (r1 - r0)].astype(bool).T
        out[n + r0 : n + r1] = pack_rows(np.concatenate([ai, clone_block], axis=1))
    return Tournament(m, out, validate=False)


Stepper = Callable[[Tournament, ModelKind], Tournament]


def iterate(
    base: Tournament,
    model: ModelKind | str,
    t: int,
    *,
    keep_snapshots: bool = False,
    node_cap: int = DEFAULT_NODE_CAP,
    stepper: Stepper | None = None,
) -> GenerationTrace:
    """Apply ``t`` steps.  ``stepper`` replaces :func:`step` (fault-injection hook)."""
    model = ModelKind.parse(model)
    if t < 0:
        raise InvalidOrderError(f"step count must be >= 0, got {t}")
    check_capacity(base.order, t, node_cap)
    do_step = stepper or (lambda g, kind: step(g, kind, node_cap))
    current = base
    snaps = [base] if keep_snapshots else None
    lineage = []
    for _ in range(t):
        lineage.append(StepLineage(current.order))
        current = do_step(current, model)
        if snaps is not None:
            snaps.append(current)
    return GenerationTrace(
        base=base,
        model=model,
        steps=t,
        final=current,
        lineage=tuple(lineage),
        snapshots=tuple(snaps) if snaps is not None else None,
    )


def iterate_final(base: Tournament, model: ModelKind | str, t: int, **kw) -> Tournament:
    return iterate(base, model, t, **kw).final
