import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import tournaments
from iltt.core import Tournament, dual, induced, make_directed_3_cycle, make_linear_order, make_random
from iltt.errors import CapacityError
from iltt.generate import DEFAULT_NODE_CAP, ModelKind, check_capacity, iterate, iterate_final, required_order, step
from iltt.motifs import triad_census_enumerate

ILTT_C3_ARCS = {
    (0, 1), (1, 2), (2, 0),
    (3, 0), (4, 1), (5, 2),
    (3, 1), (4, 2), (5, 0),
    (0, 4), (1, 5), (2, 3),
    (3, 4), (4, 5), (5, 3),
}


def block_oracle(g: Tournament, model: ModelKind) -> np.ndarray:
    """Step built straight from the clone rules, one pair at a time."""
    n = g.order
    a = g.adjacency()
    out = np.zeros((2 * n, 2 * n), dtype=bool)
    for x, y in itertools.permutations(range(n), 2):
        out[x, y] = a[x, y]
        out[n + x, y] = a[x, y]
        out[x, n + y] = a[x, y]
        out[n + x, n + y] = a[x, y] if model is ModelKind.ILTT else a[y, x]
    for x in range(n):
        out[n + x, x] = True
    return out


def test_step_c3_iltt():
    g = step(make_directed_3_cycle(), ModelKind.ILTT)
    assert g.order == 6 and set(g.arcs()) == ILTT_C3_ARCS


def test_step_c3_ilttd():
    g = step(make_directed_3_cycle(), "ilttd")
    expected = (ILTT_C3_ARCS - {(3, 4), (4, 5), (5, 3)}) | {(4, 3), (5, 4), (3, 5)}
    assert set(g.arcs()) == expected


def test_step_single_node():
    g = step(make_linear_order(1), ModelKind.ILTT)
    assert list(g.arcs()) == [(1, 0)]


def test_iterate_examples():
    c3 = make_directed_3_cycle()
    assert iterate(c3, ModelKind.ILTT, 0).final == c3
    assert iterate(c3, ModelKind.ILTT, 2).final.order == 12
    l3 = iterate_final(make_linear_order(3), ModelKind.ILTT, 3)
    assert triad_census_enumerate(l3)[1] == 0


def test_capacity_error_names_required_cap():
    with pytest.raises(CapacityError) as info:
        iterate(make_directed_3_cycle(), ModelKind.ILTT, 20)
    assert info.value.required_cap == 3 << 20
    assert str(3 << 20) in str(info.value)
    assert required_order(3, 20) == 3 << 20
    check_capacity(3, 13, DEFAULT_NODE_CAP)
    with pytest.raises(CapacityError):
        step(make_random(5, 0), ModelKind.ILTT, node_cap=9)


def test_trace_lineage_and_snapshots():
    tr = iterate(make_random(4, 2), ModelKind.ILTT_D, 3, keep_snapshots=True)
    assert [tr.snapshot(k).order for k in range(4)] == [4, 8, 16, 32]
    assert tr.clone_of(1, 1) == 5 and tr.clone_of(5, 3) == 21
    assert tr.ancestor(21) == 1 and tr.ancestor(5, 1) == 1
    no_snap = iterate(make_random(4, 2), ModelKind.ILTT_D, 3)
    with pytest.raises(ValueError):
        no_snap.snapshot(1)
    assert no_snap.final == tr.final


def test_model_parse():
    assert ModelKind.parse("ILTT") is ModelKind.ILTT
    assert ModelKind.parse("iltt_d") is ModelKind.ILTT_D
    with pytest.raises(ValueError):
        ModelKind.parse("bogus")


@given(tournaments(max_order=9), st.sampled_from(list(ModelKind)))
def test_step_matches_clone_rules(g, model):
    h = step(g, model)
    h.validate()
    assert np.array_equal(h.adjacency(), block_oracle(g, model))


@given(tournaments(max_order=9), st.sampled_from(list(ModelKind)))
def test_clone_half_is_copy_or_dual(g, model):
    n = g.order
    h = step(g, model)
    clones = induced(h, list(range(n, 2 * n)))
    assert clones == (g if model is ModelKind.ILTT else dual(g))
    a = h.adjacency()
    for x in range(n):
        assert a[n + x, x] and not a[x, n + x]
        for y in range(n):
            if y != x:
                assert a[n + x, y] == a[x, y] and a[y, n + x] == a[y, x]


@given(st.integers(1, 6), st.integers(0, 10_000), st.sampled_from(list(ModelKind)), st.integers(0, 4))
def test_iterate_valid_and_deterministic(n, seed, model, t):
    base = make_random(n, seed)
    a = iterate_final(base, model, t)
    b = iterate_final(base, model, t)
    a.validate()
    assert a.order == n << t and a.packed.tobytes() == b.packed.tobytes()


def test_large_step_chunked_matches_oracle():
    g = make_random(300, 4)
    for model in ModelKind:
        assert np.array_equal(step(g, model).adjacency(), block_oracle(g, model))
