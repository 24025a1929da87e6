from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import all_tournaments, tournaments
from iltt.core import canonical_form, make_directed_3_cycle, make_linear_order, make_random
from iltt.errors import OutOfDomainError
from iltt.generate import ModelKind, iterate_final
from iltt.motifs import (
    FOUR_NODE_CLASSES,
    classify_four,
    cyclic_triple_count_formula,
    four_node_representatives,
    motif_census,
    tetrad_census,
    tetrad_census_by_isomorphism,
    tetrad_census_sampled,
    triad_census,
    triad_census_enumerate,
)


def test_triad_examples():
    assert triad_census(make_directed_3_cycle()) == (0, 1)
    for n in (3, 5, 8):
        assert triad_census(make_linear_order(n)) == (comb(n, 3), 0)
    for t in (1, 2, 3):
        g = iterate_final(make_linear_order(3), ModelKind.ILTT, t)
        assert triad_census(g) == (comb(3 << t, 3), 0)
    with pytest.raises(OutOfDomainError):
        triad_census(make_linear_order(2))


def test_formula_examples():
    assert cyclic_triple_count_formula(make_directed_3_cycle()) == 1
    assert cyclic_triple_count_formula(make_linear_order(6)) == 0
    g = make_random(10, 0)
    assert cyclic_triple_count_formula(g) == triad_census_enumerate(g)[1]


def test_four_node_catalog_is_complete():
    reps = four_node_representatives()
    assert set(reps) == set(FOUR_NODE_CLASSES)
    assert len({canonical_form(r) for r in reps.values()}) == 4
    seen = {canonical_form(g) for g in all_tournaments(4)}
    assert seen == {canonical_form(r) for r in reps.values()}
    for name, r in reps.items():
        assert classify_four(tuple(int(x) for x in r.out_degrees())) == name


def test_tetrad_examples():
    assert tetrad_census(make_linear_order(4)) == {"transitive": 1, "source_c3": 0, "c3_sink": 0, "strong": 0}
    with pytest.raises(OutOfDomainError):
        tetrad_census(make_directed_3_cycle())


def test_tetrad_matches_isomorphism_oracle():
    for seed in range(3):
        g = make_random(10, seed)
        assert tetrad_census(g) == tetrad_census_by_isomorphism(g)


def test_sampled_estimate_is_close():
    g = make_random(30, 4)
    exact = tetrad_census(g)
    est, se = tetrad_census_sampled(g, 20_000, seed=1)
    for k in FOUR_NODE_CLASSES:
        assert abs(est[k] - exact[k]) <= 5 * se[k] + 1e-9
    assert tetrad_census_sampled(g, 500, seed=3) == tetrad_census_sampled(g, 500, seed=3)


def test_census_switches_to_sampling():
    g = make_random(12, 0)
    m = motif_census(g)
    assert m.exact and sum(m.four_node_classes.values()) == comb(12, 4)
    s = motif_census(g, sample=200, seed=2)
    assert not s.exact and s.to_dict()["samples"] == 200


@given(tournaments(min_order=3, max_order=9))
def test_triad_counts_agree(g):
    trans, cyc = triad_census(g)
    assert (trans, cyc) == triad_census_enumerate(g)
    assert trans + cyc == comb(g.order, 3)


@given(tournaments(min_order=4, max_order=9))
def test_tetrad_partition(g):
    assert sum(tetrad_census(g).values()) == comb(g.order, 4)


@given(st.integers(2, 5), st.integers(1, 3))
def test_transitive_closed_under_iltt(n, t):
    g = iterate_final(make_linear_order(n), ModelKind.ILTT, t)
    assert triad_census(g)[1] == 0 if g.order >= 3 else True
