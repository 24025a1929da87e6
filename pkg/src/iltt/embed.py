"""Constructive embedding of any tournament into an ILTT_d iterate.

A linear order on ``k`` nodes is found at step ``k`` by repeatedly putting
the clone of the current top node in front (a clone beats its parent and
copies the parent's arcs to everyone else).  Under ILTT_d, replacing two
witness nodes by their clones reverses exactly the arc between them, so one
step per differing pair turns the linear order into any target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .core import ISOMORPHISM_CAP, Tournament, differ_by, induced, make_linear_order
from .errors import CapacityError, InvalidFlipError, InvalidOrderError, SizeCapError
from .generate import DEFAULT_NODE_CAP, GenerationTrace, ModelKind, step


def kappa(n: int) -> int:
    return n + math.comb(n, 2)


def find_linear_order(trace: GenerationTrace, k: int) -> list[int]:
    """Node ids at step ``k`` of ``trace`` inducing ``x_0 -> x_1 -> ...`` transitively.

    Works for either model: only clone-to-parent and cross arcs are used.
    """
    if k < 1:
        raise InvalidOrderError("linear order witness needs k >= 1")
    if k > trace.steps:
        raise ValueError(f"trace has {trace.steps} steps, need {k}")
    witness = [0]
    for s in range(2, k + 1):
        witness = [trace.clone_of(witness[0], s)] + witness
    return witness


def linear_order_witness(base_order: int, k: int) -> list[int]:
    """Same witness computed from the index convention alone (no trace needed)."""
    witness = [0]
    for s in range(2, k + 1):
        witness = [(base_order << (s - 1)) + witness[0]] + witness
    return witness


def flip_one_arc(witness: Sequence[int], u: int, v: int, order: int) -> list[int]:
    """Substitute clones at witness positions ``u`` and ``v`` for the next ILTT_d step.

    ``order`` is the order of the step the witness currently lives in.
    """
    if u == v:
        raise InvalidFlipError("flip needs two distinct positions")
    if not (0 <= u < len(witness) and 0 <= v < len(witness)):
        raise InvalidFlipError(f"positions {u}, {v} outside witness of length {len(witness)}")
    out = list(witness)
    out[u] += order
    out[v] += order
    return out


@dataclass
class EmbeddingCertificate:
    target: Tournament
    base: Tournament
    reached_step: int
    node_map: tuple[int, ...]
    kappa: int
    flips: tuple[tuple[int, int], ...] = ()
    model: ModelKind = ModelKind.ILTT_D
    final: Tournament | None = field(default=None, repr=False)

    def problems(self) -> list[str]:
        issues = []
        if self.model is not ModelKind.ILTT_D:
            issues.append("certificate must come from ILTT_d")
        if self.reached_step > self.kappa:
            issues.append(f"reached step {self.reached_step} exceeds bound {self.kappa}")
        if len(set(self.node_map)) != len(self.node_map):
            issues.append("node map is not injective")
        if self.final is not None:
            if self.final.order != self.base.order << self.reached_step:
                issues.append("final tournament has the wrong order")
            elif induced(self.final, self.node_map) != self.target:
                issues.append("node map does not induce the target arc for arc")
        return issues

    def is_valid(self) -> bool:
        return self.final is not None and not self.problems()

    def to_dict(self) -> dict:
        return {
            "target_order": self.target.order,
            "target_arcs": [list(a) for a in sorted(self.target.arcs())],
            "base_order": self.base.order,
            "model": self.model.value,
            "reached_step": self.reached_step,
            "kappa": self.kappa,
            "flips": [list(f) for f in self.flips],
            "node_map": list(self.node_map),
            "valid": self.is_valid(),
        }


def embed_target(
    target: Tournament,
    base: Tournament,
    model: ModelKind | str = ModelKind.ILTT_D,
    node_cap: int = DEFAULT_NODE_CAP,
) -> EmbeddingCertificate:
    """Embed ``target`` into an ILTT_d iterate of ``base`` within ``kappa(n)`` steps.

    Target node ``i`` is matched with position ``i`` of the linear-order
    witness; every pair ``i < j`` with ``j -> i`` in the target is flipped,
    one per step, in lexicographic order.  Only the current step is kept.
    """
    model = ModelKind.parse(model)
    if model is ModelKind.ILTT:
        raise ValueError(
            "ILTT is not universal: a transitive base never acquires a directed 3-cycle; use ILTT_d"
        )
    n = target.order
    if n < 2:
        raise InvalidOrderError("embedding target needs order >= 2")
    if n > ISOMORPHISM_CAP:
        raise SizeCapError("embedding target", n, ISOMORPHISM_CAP)
    flips = [(i, j) for i in range(n) for j in range(i + 1, n) if target.has_arc(j, i)]
    assert len(flips) == differ_by(target, make_linear_order(n))
    r = n + len(flips)
    need = base.order << r
    if need > node_cap:
        raise CapacityError(need, node_cap)

    g = base
    witness: list[int] = []
    for s in range(1, n + 1):
        prev_order = g.order
        g = step(g, model, node_cap)
        witness = [0] if s == 1 else [prev_order + witness[0]] + witness
    for u, v in flips:
        witness = flip_one_arc(witness, u, v, g.order)
        g = step(g, model, node_cap)
    cert = EmbeddingCertificate(
        target=target,
        base=base,
        reached_step=r,
        node_map=tuple(witness),
        kappa=kappa(n),
        flips=tuple(flips),
        model=model,
        final=g,
    )
    return cert
