"""Theorem-suite registry behind ``iltt verify``.

Every suite takes a :class:`Corpus` and returns a :class:`VerdictEntry`.
Suites catch their own domain errors and record them as failures, so one
broken suite never stops the run.  Output contains no timings or other
run-dependent data: a fixed corpus gives a byte-identical report.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import domination as dom
from .core import Tournament, differ_by, dual, induced, make_directed_3_cycle, make_linear_order, make_random
from .embed import embed_target, find_linear_order, flip_one_arc, kappa
from .errors import IlttError
from .generate import ModelKind, Stepper, iterate
from .hamilton import (
    find_hamilton_cycle,
    has_hamilton_cycle_exhaustive,
    is_hamiltonian,
    lift_hamilton_cycle,
)
from .metrics import (
    all_pairs_distances,
    count_alpha,
    has_sink,
    is_strong,
    predict_wiener_iltt,
    predict_wiener_ilttd,
    summarize,
)
from .motifs import four_node_representatives
from .spectral import TAU_EIG, TAU_MATCH, validate_recurrence

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Corpus:
    """Sizes, seeds and step ranges for a verification run."""

    seed: int = 0
    strong_orders: tuple[int, ...] = (3, 4, 5, 6, 7, 8)
    strong_per_order: int = 5
    any_orders: tuple[int, ...] = (3, 4, 5, 6, 7, 8)
    any_per_order: int = 20
    wiener_steps: int = 4
    strong_steps: int = 3
    distance_orders: tuple[int, ...] = (3, 4, 5, 6)
    distance_steps: int = 3
    hamilton_steps: int = 3
    camion_orders: tuple[int, ...] = (4, 5, 6)
    camion_per_order: int = 170
    spectral_orders: tuple[int, ...] = (3, 4, 5, 6)
    spectral_per_order: int = 5
    spectral_steps: int = 3
    domination_orders: tuple[int, ...] = (3, 4, 5)
    domination_per_order: int = 5
    domination_steps: int = 2
    minimal_set_cap: int = 12
    limit_step: int = 6
    limit_tolerance: float = 0.02
    linear_order_depth: int = 5

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in self.__dict__.items()}


@dataclass
class VerdictEntry:
    theorem: str
    statement: str
    inputs_tested: int = 0
    passed: bool = True
    counterexample: dict | None = None
    items: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def fail(self, item: str | None, **details) -> None:
        self.passed = False
        if item is not None:
            self.items[item] = False
        if self.counterexample is None:
            self.counterexample = {"item": item, **details} if item else details

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "inputs_tested": self.inputs_tested,
            "passed": self.passed,
            "items": dict(sorted(self.items.items())),
            "counterexample": self.counterexample,
            "notes": list(self.notes),
        }


def describe(g: Tournament) -> dict:
    return {"order": g.order, "arcs": [list(a) for a in sorted(g.arcs())]}


def strong_bases(orders, per_order: int, seed: int) -> list[Tournament]:
    """C3 plus, for each order, the first ``per_order`` strong random tournaments."""
    out = [make_directed_3_cycle()]
    for n in orders:
        found, s = 0, seed
        while found < per_order:
            g = make_random(n, s)
            s += 1
            if is_strong(g):
                out.append(g)
                found += 1
    return out


def random_bases(orders, per_order: int, seed: int) -> list[Tournament]:
    return [make_random(n, seed + s) for n in orders for s in range(per_order)]


class _Run:
    def __init__(self, corpus: Corpus, stepper: Stepper | None):
        self.corpus = corpus
        self.stepper = stepper
        self._traces: dict = {}

    def trace(self, base: Tournament, model: ModelKind, t: int):
        key = (base, model, t)
        if key not in self._traces:
            self._traces[key] = iterate(base, model, t, keep_snapshots=True, stepper=self.stepper)
        return self._traces[key]


# -- distances ---------------------------------------------------------------


def suite_thm1(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Theorem 1", "for order >= 3 and t >= 1, the ILTT iterate is strong iff the base is")
    strong_seen = weak_seen = 0
    for b in random_bases(c.any_orders, c.any_per_order, c.seed) + [make_linear_order(n) for n in c.any_orders]:
        s0 = is_strong(b)
        strong_seen += s0
        weak_seen += not s0
        tr = run.trace(b, ModelKind.ILTT, c.strong_steps)
        for t in range(1, c.strong_steps + 1):
            e.inputs_tested += 1
            if is_strong(tr.snapshot(t)) != s0:
                e.fail("forward" if s0 else "backward", base=describe(b), t=t, base_strong=s0)
    e.items.setdefault("forward", True)
    e.items.setdefault("backward", True)
    e.notes.append(f"bases: {strong_seen} strong, {weak_seen} not strong")
    return e


def suite_thm2(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Theorem 2", "a base without a sink makes every ILTT_d iterate strong")
    sinkless = with_sink = sink_strong = 0
    for b in random_bases(c.any_orders, c.any_per_order, c.seed):
        tr = run.trace(b, ModelKind.ILTT_D, c.strong_steps)
        if has_sink(b):
            with_sink += 1
            sink_strong += is_strong(tr.snapshot(1))
            continue
        sinkless += 1
        for t in range(1, c.strong_steps + 1):
            e.inputs_tested += 1
            if not is_strong(tr.snapshot(t)):
                e.fail(None, base=describe(b), t=t)
    e.notes.append(f"sinkless bases: {sinkless}; bases with a sink: {with_sink} ({sink_strong} strong at t=1)")
    return e


def _four_way(d0: np.ndarray, d1: np.ndarray):
    """First (x, y, block) where step t+1 disagrees with step t, or None."""
    n = d0.shape[0]
    off = ~np.eye(n, dtype=bool)
    for bx, by in itertools.product((0, 1), repeat=2):
        blk = d1[bx * n : (bx + 1) * n, by * n : (by + 1) * n]
        bad = np.argwhere(off & (blk != d0))
        if bad.size:
            x, y = (int(v) for v in bad[0])
            return x, y, (bx, by), int(blk[x, y]), int(d0[x, y])
    return None


def suite_lemma3(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry(
        "Lemma 3",
        "ILTT, strong base of order >= 3: d_t(x,y) = d_{t+1}(x,y) = d_{t+1}(x,y') = d_{t+1}(x',y) = d_{t+1}(x',y')",
    )
    t0_anomalies = 0
    d_eq = d_total = d_upper = 0
    for b in strong_bases(c.distance_orders, c.strong_per_order, c.seed):
        tr = run.trace(b, ModelKind.ILTT, c.distance_steps)
        trd = run.trace(b, ModelKind.ILTT_D, c.distance_steps)
        for t in range(0, c.distance_steps):
            hit = _four_way(all_pairs_distances(tr.snapshot(t)), all_pairs_distances(tr.snapshot(t + 1)))
            if t == 0:
                t0_anomalies += hit is not None
                continue
            e.inputs_tested += 1
            if hit is not None:
                x, y, blk, got, want = hit
                e.fail(None, base=describe(b), t=t, x=x, y=y, block=list(blk), got=got, expected=want)
            d0 = all_pairs_distances(trd.snapshot(t))
            d1 = all_pairs_distances(trd.snapshot(t + 1))
            n = d0.shape[0]
            off = ~np.eye(n, dtype=bool)
            d_total += 1
            d_eq += _four_way(d0, d1) is None
            mixed = [d1[:n, :n], d1[:n, n:], d1[n:, :n]]
            d_upper += all(bool(np.all(m[off] <= d0[off])) for m in mixed)
    e.notes.append(f"t=0 (outside the stated range): {t0_anomalies} anomalies")
    e.notes.append(
        f"ILTT_d analogue: four-way equality held in {d_eq}/{d_total} steps; "
        f"d_(t+1) <= d_t on original/original, original/clone, clone/original pairs in {d_upper}/{d_total}"
    )
    return e


def suite_cor4(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry(
        "Corollary 4",
        "diam(ILTT_t) <= max(diam(G0), 3) with d(x,x') = 3; ILTT_d: diam <= diam(G0) with d(x,x') = 2",
    )
    for b in strong_bases(c.distance_orders, c.strong_per_order, c.seed):
        diam0 = summarize(b).diameter
        for model, bound, clone_d in ((ModelKind.ILTT, max(diam0, 3), 3), (ModelKind.ILTT_D, diam0, 2)):
            tr = run.trace(b, model, c.distance_steps)
            for t in range(1, c.distance_steps + 1):
                e.inputs_tested += 1
                d = all_pairs_distances(tr.snapshot(t))
                n = d.shape[0] // 2
                diam = int(d.max())
                if diam > bound:
                    e.fail(f"{model.value}_diameter", base=describe(b), t=t, diameter=diam, bound=bound)
                idx = np.arange(n)
                got = d[idx, idx + n]
                if np.any(got != clone_d):
                    x = int(np.flatnonzero(got != clone_d)[0])
                    e.fail(f"{model.value}_clone_distance", base=describe(b), t=t, x=x, got=int(got[x]), expected=clone_d)
    for k in ("iltt_diameter", "iltt_clone_distance", "ilttd_diameter", "ilttd_clone_distance"):
        e.items.setdefault(k, True)
    return e


def _wiener(g: Tournament) -> int | None:
    return summarize(g).wiener


def suite_thm5(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Theorem 5", "W(G_{t+1}) = 4 (2^t n + W(G_t)) for ILTT with a strong base, n >= 3")
    for b in strong_bases(c.strong_orders, c.strong_per_order, c.seed):
        tr = run.trace(b, ModelKind.ILTT, c.wiener_steps)
        w = [_wiener(tr.snapshot(t)) for t in range(c.wiener_steps + 1)]
        for t in range(0, c.wiener_steps):
            e.inputs_tested += 1
            want = None if w[t] is None else 4 * ((1 << t) * b.order + w[t])
            if w[t + 1] is None or w[t + 1] != want:
                e.fail(None, base=describe(b), t=t, measured=w[t + 1], predicted=want)
    return e


def suite_cor5(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Corollary 5", "W(ILTT_t) = 2^(t+1) (2^t - 1) n + 4^t W(G0)")
    for b in strong_bases(c.strong_orders, c.strong_per_order, c.seed):
        w0 = _wiener(b)
        tr = run.trace(b, ModelKind.ILTT, c.wiener_steps)
        for t in range(1, c.wiener_steps + 1):
            e.inputs_tested += 1
            got, want = _wiener(tr.snapshot(t)), predict_wiener_iltt(b.order, w0, t)
            if got != want:
                e.fail(None, base=describe(b), t=t, measured=got, predicted=want)
    return e


def suite_lemma6(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Lemma 6", "W(ILTT_d_t) = 12 C(2^(t-1) n, 2) + alpha + 3 * 2^(t-1) n for t >= 1")
    for b in strong_bases(c.strong_orders, c.strong_per_order, c.seed):
        alpha = count_alpha(b)
        tr = run.trace(b, ModelKind.ILTT_D, c.wiener_steps)
        for t in range(1, c.wiener_steps + 1):
            e.inputs_tested += 1
            got, want = _wiener(tr.snapshot(t)), predict_wiener_ilttd(b.order, alpha, t)
            if got != want:
                e.fail(None, base=describe(b), t=t, alpha=alpha, measured=got, predicted=want)
    return e


def suite_cor7(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Corollary 7", "L(ILTT_d_t) -> 3/2 for strong bases of order >= 3")
    b = make_directed_3_cycle()
    g = run.trace(b, ModelKind.ILTT_D, c.limit_step).final
    s = summarize(g)
    e.inputs_tested += 1
    if s.avg_distance is None or abs(float(s.avg_distance) - 1.5) > c.limit_tolerance:
        e.fail("measured", base=describe(b), t=c.limit_step, avg_distance=s.avg_distance_float)
    e.items.setdefault("measured", True)
    e.notes.append(f"L at t={c.limit_step} from C3: {s.avg_distance} = {float(s.avg_distance or 0):.6f}")
    # closed-form gap shrinks monotonically for every corpus base
    for base in strong_bases(c.strong_orders, c.strong_per_order, c.seed):
        alpha, n = count_alpha(base), base.order
        gaps = []
        for t in range(1, 40, 4):
            order = n << t
            gaps.append(abs(Fraction(predict_wiener_ilttd(n, alpha, t), order * (order - 1)) - Fraction(3, 2)))
        e.inputs_tested += 1
        if any(b2 > b1 for b1, b2 in zip(gaps, gaps[1:])) or gaps[-1] > Fraction(1, 10**9):
            e.fail("closed_form_limit", base=describe(base), gaps=[float(x) for x in gaps])
    e.items.setdefault("closed_form_limit", True)
    return e


# -- motifs and universality ---------------------------------------------------


def suite_thm6(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Theorem 6", "the linear order of order t is a subtournament of both iterates at step t")
    for b in [make_directed_3_cycle(), make_linear_order(3)] + random_bases((4,), 2, c.seed):
        for model in ModelKind:
            tr = run.trace(b, model, c.linear_order_depth)
            for k in range(1, c.linear_order_depth + 1):
                e.inputs_tested += 1
                w = find_linear_order(tr, k)
                if induced(tr.snapshot(k), w) != make_linear_order(k):
                    e.fail(None, base=describe(b), model=model.value, k=k, witness=w)
    return e


def suite_lemma7(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Lemma 7", "swapping u, v for their clones in ILTT_d reverses exactly the arc uv")
    rng = np.random.Generator(np.random.PCG64(c.seed))
    for b in random_bases((3, 4, 5), 3, c.seed):
        tr = run.trace(b, ModelKind.ILTT_D, 3)
        for t in range(0, 3):
            g, h = tr.snapshot(t), tr.snapshot(t + 1)
            size = min(g.order, 5)
            for _ in range(4):
                w = rng.choice(g.order, size=size, replace=False).tolist()
                i, j = sorted(rng.choice(size, size=2, replace=False).tolist())
                e.inputs_tested += 1
                before, after = induced(g, w), induced(h, flip_one_arc(w, i, j, g.order))
                if differ_by(before, after) != 1 or after.has_arc(i, j) == before.has_arc(i, j):
                    e.fail(None, base=describe(b), t=t, witness=w, positions=[i, j])
    return e


def _three_node_tournaments() -> list[Tournament]:
    pairs = [(0, 1), (0, 2), (1, 2)]
    out = []
    for bits in range(8):
        out.append(Tournament.from_arcs(3, [(i, j) if bits >> k & 1 else (j, i) for k, (i, j) in enumerate(pairs)]))
    return out


def suite_thm7(run: _Run) -> VerdictEntry:
    e = VerdictEntry("Theorem 7", "every order-n tournament embeds in some ILTT_d iterate at step r <= n + C(n,2)")
    targets = [(t, "3-node labeled") for t in _three_node_tournaments()]
    targets += [(t, f"4-node {name}") for name, t in four_node_representatives().items()]
    targets += [(dual(make_linear_order(4)), "dual L4")]
    for base in (make_linear_order(3), make_directed_3_cycle()):
        for target, label in targets:
            e.inputs_tested += 1
            try:
                cert = embed_target(target, base)
            except IlttError as exc:
                e.fail("certificates", target=describe(target), base=describe(base), error=str(exc))
                continue
            if not cert.is_valid():
                e.fail("certificates", target=describe(target), base=describe(base), problems=cert.problems())
            linear = target == make_linear_order(target.order)
            if linear and cert.reached_step != target.order:
                e.fail("linear_exact", target=describe(target), reached=cert.reached_step)
            if cert.reached_step > kappa(target.order):
                e.fail("bound", target=label, reached=cert.reached_step)
    for k in ("certificates", "linear_exact", "bound"):
        e.items.setdefault(k, True)
    return e


# -- Hamiltonicity and spectra ---------------------------------------------------


def suite_thm8(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry("Theorem 8", "a Hamilton cycle of step t lifts to one of step t+1 in both models")
    for b in strong_bases((3, 4, 5, 6), c.strong_per_order, c.seed):
        for model in ModelKind:
            tr = run.trace(b, model, c.hamilton_steps + 1)
            cyc = find_hamilton_cycle(b)
            for t in range(0, c.hamilton_steps + 1):
                e.inputs_tested += 1
                g = tr.snapshot(t)
                try:
                    lifted = lift_hamilton_cycle(cyc, model, g.order, g)
                except IlttError as exc:
                    e.fail("lifting", base=describe(b), model=model.value, t=t, error=str(exc))
                    break
                nxt = tr.snapshot(t + 1)
                if not lifted.is_valid(nxt):
                    e.fail("lifting", base=describe(b), model=model.value, t=t, problems=lifted.problems(nxt))
                    break
                if b.order == 3 and t == 0:
                    e.notes.append(f"order-3 lifting ({model.value}) valid: {lifted.is_valid(nxt)}")
                cyc = lifted
    e.items.setdefault("lifting", True)
    rng_seeds = itertools.count(c.seed)
    for n in c.camion_orders:
        for _ in range(c.camion_per_order):
            g = make_random(n, next(rng_seeds))
            e.inputs_tested += 1
            if is_hamiltonian(g) != has_hamilton_cycle_exhaustive(g):
                e.fail("camion", tournament=describe(g))
            if is_hamiltonian(g) and not find_hamilton_cycle(g).is_valid(g):
                e.fail("construction", tournament=describe(g))
    e.items.setdefault("camion", True)
    e.items.setdefault("construction", True)
    e.notes = sorted(set(e.notes))
    return e


def suite_thm9(run: _Run) -> VerdictEntry:
    c = run.corpus
    e = VerdictEntry(
        "Theorem 9",
        "-1/2 is never an ILTT eigenvalue; non-zero eigenvalues of step t+1 are lam +/- sqrt(lam^2 + lam)",
    )
    worst_match = 0.0
    closest_half = math.inf
    for b in random_bases(c.spectral_orders, c.spectral_per_order, c.seed):
        for t in range(0, c.spectral_steps + 1):
            e.inputs_tested += 1
            try:
                rep = validate_recurrence(b, t)
            except IlttError as exc:
                e.fail("solver", base=describe(b), t=t, error=str(exc))
                continue
            worst_match = max(worst_match, rep.match_distance)
            closest_half = min(closest_half, rep.min_distance_to_minus_half)
            if not rep.matched:
                e.fail("recurrence", base=describe(b), t=t, match_distance=rep.match_distance)
            if rep.min_distance_to_minus_half <= 10 * TAU_EIG:
                e.fail("no_minus_half", base=describe(b), t=t, distance=rep.min_distance_to_minus_half)
            tol = b.order * TAU_EIG * (1 << t)
            if abs(rep.trace_sum) > tol or abs(rep.trace_square_sum) > tol:
                e.fail("trace_identities", base=describe(b), t=t)
    for k in ("recurrence", "no_minus_half", "trace_identities", "solver"):
        e.items.setdefault(k, True)
    e.notes.append(f"worst set distance {worst_match:.3e} (tolerance {TAU_MATCH:g})")
    e.notes.append(f"closest direct eigenvalue to -1/2: {closest_half:.6f}")
    return e


# -- domination ------------------------------------------------------------------


def _dom_bases(c: Corpus) -> list[Tournament]:
    return random_bases(c.domination_orders, c.domination_per_order, c.seed)


def suite_lemma10(run: _Run) -> VerdictEntry:
    c = run.corpus
    return check_lemma10(run, _dom_bases(c), c.domination_steps, c.minimal_set_cap)


def check_lemma10(run: _Run, bases: list[Tournament], steps: int, minimal_set_cap: int = 12) -> VerdictEntry:
    e = VerdictEntry("Lemma 10", "lifting and projection of in-/out-dominating sets between G0 and its iterates")
    swapped = {"2": True, "3": True}
    for b in bases:
        base_sets = {kind: dom.all_minimal_dominating_sets(b, kind) for kind in ("in", "out")}
        for t in range(1, steps + 1):
            for model in ModelKind:
                tt = run.trace(b, model, t)
                g = tt.final
                item = "1" if model is ModelKind.ILTT else "5"
                for kind in ("in", "out"):
                    w = dom.minimum_dominating_set(g, kind)
                    e.inputs_tested += 1
                    try:
                        dom.project_dominating_set(w, tt, kind)
                    except IlttError as exc:
                        e.fail(item, base=describe(b), model=model.value, t=t, kind=kind, error=str(exc))
                if model is ModelKind.ILTT_D:
                    continue
                for s in base_sets["in"]:
                    e.inputs_tested += 1
                    try:
                        dom.lift_in_dominating(s, tt)
                    except dom.DominationDiscrepancy as exc:
                        e.fail("2", base=describe(b), t=t, set=list(s), lifted=list(exc.nodes), kind="in")
                    swapped["3"] &= dom.is_dominating(g, s, "in")
                for s in base_sets["out"]:
                    e.inputs_tested += 1
                    try:
                        dom.lift_out_dominating(s, tt)
                    except dom.DominationDiscrepancy as exc:
                        e.fail("3", base=describe(b), t=t, set=list(s), lifted=list(exc.nodes), kind="out")
                    clones = dom._descend_clones(list(s), tt, t)
                    swapped["2"] &= dom.is_dominating(g, clones, "out")
                if g.order <= minimal_set_cap:
                    for kind in ("in", "out"):
                        for s in dom.all_minimal_dominating_sets(g, kind):
                            e.inputs_tested += 1
                            pair = dom.contains_node_and_clone(s, tt)
                            if pair is not None:
                                e.fail("4", base=describe(b), t=t, kind=kind, set=list(s), pair=list(pair))
    for k in ("1", "2", "3", "4", "5"):
        e.items.setdefault(k, True)
    e.notes.append(
        "with 'in' and 'out' exchanged, item 2 (clones out-dominate) held: "
        f"{swapped['2']}; item 3 (S in-dominates) held: {swapped['3']}"
    )
    return e


def suite_thm11(run: _Run) -> VerdictEntry:
    c = run.corpus
    return check_thm11(run, _dom_bases(c), c.domination_steps)


def check_thm11(run: _Run, bases: list[Tournament], steps: int) -> VerdictEntry:
    e = VerdictEntry(
        "Theorem 11",
        "gamma+-(G0) = gamma+-(ILTT_t); gamma+(G0) = gamma+(ILTT_d_t); gamma-(G0) <= gamma-(ILTT_d_t)",
    )
    swapped = {"2": True, "3": True}
    for b in bases:
        r0 = dom.domination_numbers(b)
        for t in range(1, steps + 1):
            ri = dom.domination_numbers(run.trace(b, ModelKind.ILTT, steps).snapshot(t))
            rd = dom.domination_numbers(run.trace(b, ModelKind.ILTT_D, steps).snapshot(t))
            e.inputs_tested += 1
            if (ri.gamma_in, ri.gamma_out) != (r0.gamma_in, r0.gamma_out):
                e.fail("1", base=describe(b), t=t, base_gammas=[r0.gamma_in, r0.gamma_out], iterate=[ri.gamma_in, ri.gamma_out])
            if rd.gamma_out != r0.gamma_out:
                e.fail("2", base=describe(b), t=t, base_gamma_out=r0.gamma_out, ilttd_gamma_out=rd.gamma_out)
            if not r0.gamma_in <= rd.gamma_in:
                e.fail("3", base=describe(b), t=t, base_gamma_in=r0.gamma_in, ilttd_gamma_in=rd.gamma_in)
            swapped["2"] &= rd.gamma_in == r0.gamma_in
            swapped["3"] &= r0.gamma_out <= rd.gamma_out
    for k in ("1", "2", "3"):
        e.items.setdefault(k, True)
    e.notes.append(
        "with gamma- and gamma+ exchanged in items 2 and 3: "
        f"item 2 held: {swapped['2']}; item 3 held: {swapped['3']}"
    )
    return e


REGISTRY: dict[str, Callable[[_Run], VerdictEntry]] = {
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "lemma3": suite_lemma3,
    "cor4": suite_cor4,
    "thm5": suite_thm5,
    "cor5": suite_cor5,
    "lemma6": suite_lemma6,
    "cor7": suite_cor7,
    "thm6": suite_thm6,
    "lemma7": suite_lemma7,
    "thm7": suite_thm7,
    "thm8": suite_thm8,
    "thm9": suite_thm9,
    "lemma10": suite_lemma10,
    "thm11": suite_thm11,
}


def run_suite(name: str, corpus: Corpus | None = None, stepper: Stepper | None = None) -> VerdictEntry:
    run = _Run(corpus or Corpus(), stepper)
    return _guarded(name, REGISTRY[name], run)


def _guarded(name, fn, run) -> VerdictEntry:
    try:
        return fn(run)
    except Exception as exc:  # recorded, not raised: the run continues
        e = VerdictEntry(name, "suite raised")
        e.fail(None, error=f"{type(exc).__name__}: {exc}")
        return e


def domination_checks(base: Tournament, steps: int, stepper: Stepper | None = None) -> dict:
    """Lemma 10 and Theorem 11 entries for a single base (``dominate --check-lifts``)."""
    run = _Run(Corpus(), stepper)
    entries = {
        "lemma10": check_lemma10(run, [base], steps).to_dict(),
        "thm11": check_thm11(run, [base], steps).to_dict(),
    }
    return {"schema_version": SCHEMA_VERSION, "base": describe(base), "steps": steps, "entries": entries}


def run_verify(
    corpus: Corpus | None = None,
    stepper: Stepper | None = None,
    only: list[str] | None = None,
) -> dict:
    """Run every registered suite (or ``only`` those) and return the report dict."""
    corpus = corpus or Corpus()
    run = _Run(corpus, stepper)
    names = only or list(REGISTRY)
    entries = {name: _guarded(name, REGISTRY[name], run).to_dict() for name in names}
    return {
        "schema_version": SCHEMA_VERSION,
        "corpus": corpus.to_dict(),
        "passed": all(v["passed"] for v in entries.values()),
        "entries": entries,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
