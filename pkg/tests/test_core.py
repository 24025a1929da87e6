import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import all_tournaments, tournaments
from iltt.core import (
    RANDOM_SCHEME,
    Tournament,
    canonical_form,
    differ_by,
    dual,
    find_isomorphism,
    induced,
    is_isomorphic,
    make_directed_3_cycle,
    make_linear_order,
    make_random,
    relabel,
)
from iltt.errors import (
    InvalidComparisonError,
    InvalidOrderError,
    InvalidSelectionError,
    InvalidTournamentError,
    SizeCapError,
)


def test_linear_order_three():
    assert sorted(make_linear_order(3).arcs()) == [(0, 1), (0, 2), (1, 2)]


def test_linear_order_single_node():
    g = make_linear_order(1)
    assert g.order == 1 and g.arc_count() == 0


def test_linear_order_four_is_acyclic():
    g = make_linear_order(4)
    arcs = list(g.arcs())
    assert len(arcs) == 6 and all(u < v for u, v in arcs)
    assert nx.is_directed_acyclic_graph(nx.DiGraph(arcs))


@pytest.mark.parametrize("make", [make_linear_order, lambda n: make_random(n, 1)])
def test_order_zero_rejected(make):
    with pytest.raises(InvalidOrderError):
        make(0)


def test_directed_3_cycle():
    g = make_directed_3_cycle()
    assert list(g.in_degrees()) == [1, 1, 1] and list(g.out_degrees()) == [1, 1, 1]
    assert sorted(g.arcs()) == [(0, 1), (1, 2), (2, 0)]


def test_random_deterministic():
    a, b = make_random(5, 42), make_random(5, 42)
    assert a == b and a.packed.tobytes() == b.packed.tobytes()
    assert make_random(1, 7).order == 1
    assert RANDOM_SCHEME == "pcg64-raw-v1"


def _scheme_oracle(n, seed):
    # the documented scheme, re-derived with plain integer bit twiddling
    pairs = list(itertools.combinations(range(n), 2))
    words = np.random.PCG64(seed).random_raw(max(1, (len(pairs) + 63) // 64))
    arcs = []
    for k, (i, j) in enumerate(pairs):
        bit = (int(words[k // 64]) >> (k % 64)) & 1
        arcs.append((i, j) if bit else (j, i))
    return sorted(arcs)


def test_random_golden():
    assert sorted(make_random(4, 0).arcs()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 2)]
    for n, seed in [(6, 123), (12, 5), (20, 99)]:
        assert sorted(make_random(n, seed).arcs()) == _scheme_oracle(n, seed)


def test_random_orientation_balance():
    n, seeds = 8, 1000
    counts = np.zeros((n, n), dtype=int)
    for s in range(seeds):
        g = make_random(n, s)
        assert g.arc_count() == 28
        counts += g.adjacency()
    iu = np.triu_indices(n, 1)
    sigma = np.sqrt(seeds * 0.25)
    assert np.all(np.abs(counts[iu] - seeds / 2) <= 3 * sigma + 1)


def test_dual_of_cycle():
    assert sorted(dual(make_directed_3_cycle()).arcs()) == [(0, 2), (1, 0), (2, 1)]
    assert is_isomorphic(make_directed_3_cycle(), dual(make_directed_3_cycle()))


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_dual_linear_is_reversed_linear(n):
    rev = list(range(n - 1, -1, -1))
    assert relabel(dual(make_linear_order(n)), rev) == make_linear_order(n)


def test_induced_and_errors():
    g = make_random(6, 3)
    sub = induced(g, [4, 1, 2])
    for a, b in itertools.permutations(range(3), 2):
        assert sub.has_arc(a, b) == g.has_arc([4, 1, 2][a], [4, 1, 2][b])
    with pytest.raises(InvalidSelectionError):
        induced(g, [1, 1])
    with pytest.raises(InvalidSelectionError):
        induced(g, [0, 6])


def test_isomorphism_examples():
    c3, l3 = make_directed_3_cycle(), make_linear_order(3)
    assert find_isomorphism(c3, dual(c3)) is not None
    assert not is_isomorphic(c3, l3)
    assert not is_isomorphic(c3, make_linear_order(4))
    big = make_random(11, 0)
    with pytest.raises(SizeCapError):
        is_isomorphic(big, big)


def test_isomorphism_counts_classes():
    # known numbers of non-isomorphic tournaments: 1, 1, 2, 4, 12
    for n, expected in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 12)]:
        forms = {canonical_form(g) for g in all_tournaments(n)}
        assert len(forms) == expected


def test_differ_by_examples():
    g = make_random(6, 9)
    assert differ_by(g, g) == 0
    assert differ_by(make_linear_order(3), make_directed_3_cycle()) == 1
    assert differ_by(g, dual(g)) == 15
    with pytest.raises(InvalidComparisonError):
        differ_by(g, make_linear_order(3))


def test_validation_rejects_bad_relations():
    a = np.zeros((3, 3), dtype=bool)
    a[0, 1] = a[1, 2] = True
    with pytest.raises(InvalidTournamentError):
        Tournament.from_adjacency(a)  # pair {0,2} missing
    a[0, 2] = a[2, 0] = True
    with pytest.raises(InvalidTournamentError):
        Tournament.from_adjacency(a)
    b = np.zeros((2, 2), dtype=bool)
    b[0, 0] = b[0, 1] = True
    with pytest.raises(InvalidTournamentError):
        Tournament.from_adjacency(b)


@given(tournaments())
def test_tournament_axioms(g):
    a = g.adjacency()
    assert not a.diagonal().any()
    off = ~np.eye(g.order, dtype=bool)
    assert np.all((a ^ a.T)[off])
    g.validate()


@given(tournaments())
def test_dual_involution(g):
    assert dual(dual(g)).packed.tobytes() == g.packed.tobytes()


@given(tournaments(), tournaments())
def test_differ_by_zero_iff_equal(g, h):
    if g.order == h.order:
        assert (differ_by(g, h) == 0) == (g == h)


@given(tournaments(max_order=7), st.randoms(use_true_random=False))
def test_isomorphism_relabel_invariant(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert is_isomorphic(g, g)
    w = find_isomorphism(g, h)
    assert w is not None and relabel(g, w) == h
    assert is_isomorphic(h, g)
    assert canonical_form(g) == canonical_form(h)


@given(tournaments(min_order=3, max_order=6), tournaments(min_order=3, max_order=6))
def test_isomorphism_matches_networkx(g, h):
    if g.order != h.order:
        return
    ours = is_isomorphic(g, h)
    theirs = nx.is_isomorphic(nx.DiGraph(list(g.arcs())), nx.DiGraph(list(h.arcs())))
    assert ours == theirs
