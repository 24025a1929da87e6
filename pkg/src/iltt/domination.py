"""In- and out-domination: exact numbers, and lifting/projecting sets across steps.

Sets of nodes are handled internally as Python int bitmasks.  A node ``u``
is *in-dominated* by ``S`` when ``u in S`` or ``u -> v`` for some ``v in S``;
*out-dominated* when ``u in S`` or ``v -> u`` for some ``v in S``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .core import Tournament
from .errors import DominationDiscrepancy, InvalidSelectionError, SizeCapError
from .generate import GenerationTrace, ModelKind

EXACT_CAP = 24
ENUMERATION_CAP = 12

Kind = Literal["in", "out"]


def _check_set(g: Tournament, s: Iterable[int]) -> list[int]:
    nodes = sorted({int(v) for v in s})
    if not nodes:
        raise InvalidSelectionError("dominating set must be nonempty")
    bad = [v for v in nodes if not 0 <= v < g.order]
    if bad:
        raise InvalidSelectionError(f"node ids {bad} out of range for order {g.order}")
    return nodes


def coverage_masks(g: Tournament, kind: Kind) -> list[int]:
    """``masks[v]`` = nodes dominated by choosing ``v`` (including ``v`` itself)."""
    a = g.adjacency()
    rel = a.T if kind == "in" else a  # in: u -> v puts u in v's mask
    masks = []
    for v in range(g.order):
        bits = rel[v].copy()
        bits[v] = True
        masks.append(int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little"))
    return masks


def _covers(masks: list[int], nodes: Iterable[int], full: int) -> bool:
    acc = 0
    for v in nodes:
        acc |= masks[v]
    return acc == full


def is_in_dominating(g: Tournament, s: Iterable[int]) -> bool:
    """Every node outside ``s`` has an arc into ``s``."""
    nodes = _check_set(g, s)
    return _covers(coverage_masks(g, "in"), nodes, (1 << g.order) - 1)


def is_out_dominating(g: Tournament, s: Iterable[int]) -> bool:
    """Every node outside ``s`` receives an arc from ``s``."""
    nodes = _check_set(g, s)
    return _covers(coverage_masks(g, "out"), nodes, (1 << g.order) - 1)


def is_dominating(g: Tournament, s: Iterable[int], kind: Kind) -> bool:
    return is_in_dominating(g, s) if kind == "in" else is_out_dominating(g, s)


def _greedy(masks: list[int], full: int) -> list[int]:
    chosen, acc = [], 0
    while acc != full:
        v = max(range(len(masks)), key=lambda x: (bin(masks[x] & ~acc).count("1"), -x))
        chosen.append(v)
        acc |= masks[v]
    return chosen


def minimum_dominating_set(g: Tournament, kind: Kind, cap: int = EXACT_CAP) -> list[int]:
    """Exact minimum by branch and bound.

    Branches on which chosen node covers the lowest uncovered node; the
    incumbent starts from a greedy cover and a branch is cut when even the
    largest remaining mask cannot finish within the incumbent size.
    """
    n = g.order
    if n > cap:
        raise SizeCapError("exact domination search", n, cap)
    masks = coverage_masks(g, kind)
    full = (1 << n) - 1
    best = _greedy(masks, full)
    sizes = [bin(m).count("1") for m in masks]
    biggest = max(sizes)
    # candidates covering node u, largest coverage first
    coverers = []
    for u in range(n):
        cands = [v for v in range(n) if masks[v] >> u & 1]
        cands.sort(key=lambda v: (-sizes[v], v))
        coverers.append(cands)

    chosen: list[int] = []

    def search(acc: int) -> None:
        nonlocal best
        if acc == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        missing = bin(full & ~acc).count("1")
        if len(chosen) + -(-missing // biggest) >= len(best):
            return
        u = ((full & ~acc) & -(full & ~acc)).bit_length() - 1
        for v in coverers[u]:
            chosen.append(v)
            search(acc | masks[v])
            chosen.pop()

    search(0)
    return sorted(best)


def all_minimal_dominating_sets(g: Tournament, kind: Kind, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """Every inclusion-minimal dominating set, by subset enumeration."""
    n = g.order
    if n > cap:
        raise SizeCapError("minimal dominating set enumeration", n, cap)
    masks = coverage_masks(g, kind)
    full = (1 << n) - 1
    out = []
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            if not _covers(masks, combo, full):
                continue
            if all(not _covers(masks, combo[:i] + combo[i + 1 :], full) for i in range(k)):
                out.append(combo)
    return out


def domination_number_exhaustive(g: Tournament, kind: Kind) -> int:
    masks = coverage_masks(g, kind)
    full = (1 << g.order) - 1
    for k in range(1, g.order + 1):
        if any(_covers(masks, c, full) for c in itertools.combinations(range(g.order), k)):
            return k
    raise AssertionError("the full node set always dominates")


@dataclass(frozen=True)
class DominationResult:
    gamma_in: int
    gamma_out: int
    witness_in: tuple[int, ...]
    witness_out: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "gamma_in": self.gamma_in,
            "gamma_out": self.gamma_out,
            "witness_in": list(self.witness_in),
            "witness_out": list(self.witness_out),
        }


def domination_numbers(g: Tournament, cap: int = EXACT_CAP) -> DominationResult:
    win = minimum_dominating_set(g, "in", cap)
    wout = minimum_dominating_set(g, "out", cap)
    assert is_in_dominating(g, win) and is_out_dominating(g, wout)
    return DominationResult(len(win), len(wout), tuple(win), tuple(wout))


def project_dominating_set(s: Iterable[int], trace: GenerationTrace, kind: Kind) -> list[int]:
    """Map a dominating set of the final step onto the base.

    Every node is replaced by its base ancestor (clones by the parent,
    iterated), giving ``(S & V(G0)) | {v in V(G0) : some descendant of v in S}``.
    The result is checked to dominate the base in the same sense.
    """
    g = trace.final
    nodes = _check_set(g, s)
    if not is_dominating(g, nodes, kind):
        raise InvalidSelectionError(f"input set is not {kind}-dominating at step {trace.steps}")
    projected = sorted({trace.ancestor(v) for v in nodes})
    if not is_dominating(trace.base, projected, kind):
        raise DominationDiscrepancy(
            f"projection {projected} is not {kind}-dominating in the base",
            projected,
            kind,
            0,
        )
    return projected


def _descend_clones(nodes: list[int], trace: GenerationTrace, steps: int) -> list[int]:
    for k in range(1, steps + 1):
        nodes = [trace.clone_of(v, k) for v in nodes]
    return nodes


def lift_in_dominating(s: Iterable[int], trace: GenerationTrace, t: int | None = None) -> list[int]:
    """Clone copies of an in-dominating base set, carried to step ``t``.

    For ``t > 1`` the step-k clone of each step-(k-1) copy is taken.  The
    result is validated; ``DominationDiscrepancy`` is raised (with the set)
    when it does not in-dominate.
    """
    return _lift(s, trace, t, "in", clones=True)


def lift_out_dominating(s: Iterable[int], trace: GenerationTrace, t: int | None = None) -> list[int]:
    """The base set itself, read as nodes of step ``t``; validated like the in-version."""
    return _lift(s, trace, t, "out", clones=False)


def _lift(s, trace: GenerationTrace, t: int | None, kind: Kind, clones: bool) -> list[int]:
    if trace.model is not ModelKind.ILTT:
        raise ValueError("dominating-set lifting is defined for ILTT traces")
    t = trace.steps if t is None else t
    if not 0 <= t <= trace.steps:
        raise ValueError(f"step {t} outside trace of {trace.steps} steps")
    nodes = _check_set(trace.base, s)
    if not is_dominating(trace.base, nodes, kind):
        raise InvalidSelectionError(f"input set is not {kind}-dominating in the base")
    lifted = sorted(_descend_clones(nodes, trace, t)) if clones else nodes
    target = trace.snapshot(t)
    if not is_dominating(target, lifted, kind):
        raise DominationDiscrepancy(
            f"lifted set {lifted} is not {kind}-dominating at step {t}", lifted, kind, t
        )
    return lifted


def clone_pairs(trace: GenerationTrace) -> list[tuple[int, int]]:
    """Every (node, direct clone) pair present in the final tournament."""
    pairs = []
    for lin in trace.lineage:
        for v in range(lin.parent_order):
            pairs.append((v, lin.clone(v)))
    return pairs


def contains_node_and_clone(s: Iterable[int], trace: GenerationTrace) -> tuple[int, int] | None:
    members = set(int(v) for v in s)
    for v, c in clone_pairs(trace):
        if v in members and c in members:
            return v, c
    return None
