"""Census of 3- and 4-node subtournaments.

Four-node tournaments fall into exactly four isomorphism classes, each with a
distinct sorted score sequence:

==============  ==============  ==========================================
class           scores          description
==============  ==============  ==========================================
``transitive``  (0, 1, 2, 3)    linear order
``source_c3``   (1, 1, 1, 3)    one node beats a directed 3-cycle
``c3_sink``     (0, 2, 2, 2)    a directed 3-cycle beats one node
``strong``      (1, 1, 2, 2)    the unique strong 4-node tournament
==============  ==============  ==========================================
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .core import Tournament, induced, make_linear_order
from .errors import OutOfDomainError

FOUR_NODE_CLASSES = ("transitive", "source_c3", "c3_sink", "strong")
_SCORE_CLASS = {
    (0, 1, 2, 3): "transitive",
    (1, 1, 1, 3): "source_c3",
    (0, 2, 2, 2): "c3_sink",
    (1, 1, 2, 2): "strong",
}

EXACT_TETRAD_CAP = 512


def four_node_representatives() -> dict[str, Tournament]:
    """One labeled tournament per four-node class."""
    c3 = [(1, 2), (2, 3), (3, 1)]
    return {
        "transitive": make_linear_order(4),
        "source_c3": Tournament.from_arcs(4, c3 + [(0, 1), (0, 2), (0, 3)]),
        "c3_sink": Tournament.from_arcs(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]),
        "strong": Tournament.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 1)]),
    }


def cyclic_triple_count_formula(g: Tournament) -> int:
    """Directed 3-cycles via the score identity ``C(n,3) - sum_v C(s_v, 2)``."""
    if g.order < 3:
        raise OutOfDomainError("triad counts need order >= 3")
    s = g.out_degrees()
    return math.comb(g.order, 3) - int(sum(math.comb(int(d), 2) for d in s))


def triad_census(g: Tournament) -> tuple[int, int]:
    """(transitive, cyclic) triple counts."""
    cyclic = cyclic_triple_count_formula(g)
    return math.comb(g.order, 3) - cyclic, cyclic


def triad_census_enumerate(g: Tournament) -> tuple[int, int]:
    """Same counts by visiting every triple; cubic, kept as a cross-check."""
    if g.order < 3:
        raise OutOfDomainError("triad counts need order >= 3")
    a = g.adjacency()
    cyclic = 0
    total = 0
    for i, j, k in itertools.combinations(range(g.order), 3):
        total += 1
        if (a[i, j] and a[j, k] and a[k, i]) or (a[j, i] and a[k, j] and a[i, k]):
            cyclic += 1
    return total - cyclic, cyclic


def classify_four(sub_scores: tuple[int, ...]) -> str:
    return _SCORE_CLASS[tuple(sorted(sub_scores))]


@dataclass(frozen=True)
class MotifCensus:
    transitive_triples: int
    cyclic_triples: int
    four_node_classes: dict[str, float]
    exact: bool = True
    samples: int | None = None
    standard_errors: dict[str, float] | None = field(default=None)

    def to_dict(self) -> dict:
        out = {
            "transitive_triples": self.transitive_triples,
            "cyclic_triples": self.cyclic_triples,
            "four_node_classes": dict(self.four_node_classes),
            "exact": self.exact,
        }
        if not self.exact:
            out["samples"] = self.samples
            out["standard_errors"] = dict(self.standard_errors or {})
        return out


def _quad_scores(a: np.ndarray, quads: np.ndarray) -> np.ndarray:
    """Sorted within-quadruple out-degrees, one row per quadruple."""
    scores = np.zeros(quads.shape, dtype=np.int64)
    for x in range(4):
        for y in range(4):
            if x != y:
                scores[:, x] += a[quads[:, x], quads[:, y]]
    scores.sort(axis=1)
    return scores


def _tally(scores: np.ndarray) -> dict[str, int]:
    counts = dict.fromkeys(FOUR_NODE_CLASSES, 0)
    # (0,1,2,3) -> transitive has sorted first score 0 and last 3, etc.
    keys = scores[:, 0] * 1000 + scores[:, 1] * 100 + scores[:, 2] * 10 + scores[:, 3]
    for key, name in ((123, "transitive"), (1113, "source_c3"), (222, "c3_sink"), (1122, "strong")):
        counts[name] = int(np.count_nonzero(keys == key))
    if sum(counts.values()) != scores.shape[0]:
        raise AssertionError("unclassified four-node subtournament")
    return counts


def tetrad_census(g: Tournament) -> dict[str, int]:
    """Exact counts of the four classes over all C(n, 4) quadruples."""
    if g.order < 4:
        raise OutOfDomainError("four-node census needs order >= 4")
    a = g.adjacency().astype(np.int64)
    counts = dict.fromkeys(FOUR_NODE_CLASSES, 0)
    batch = []
    for quad in itertools.combinations(range(g.order), 4):
        batch.append(quad)
        if len(batch) == 65536:
            for k, v in _tally(_quad_scores(a, np.asarray(batch))).items():
                counts[k] += v
            batch.clear()
    if batch:
        for k, v in _tally(_quad_scores(a, np.asarray(batch))).items():
            counts[k] += v
    return counts


def tetrad_census_sampled(g: Tournament, samples: int, seed: int = 0) -> tuple[dict[str, float], dict[str, float]]:
    """Estimated class counts and standard errors from uniform random quadruples."""
    if g.order < 4:
        raise OutOfDomainError("four-node census needs order >= 4")
    rng = np.random.Generator(np.random.PCG64(seed))
    n = g.order
    quads = np.array([rng.choice(n, size=4, replace=False) for _ in range(samples)])
    counts = _tally(_quad_scores(g.adjacency().astype(np.int64), quads))
    total = math.comb(n, 4)
    est, se = {}, {}
    for k in FOUR_NODE_CLASSES:
        p = counts[k] / samples
        est[k] = p * total
        se[k] = total * math.sqrt(p * (1 - p) / samples)
    return est, se


def tetrad_census_by_isomorphism(g: Tournament) -> dict[str, int]:
    """Classify every quadruple with the generic isomorphism search; slow oracle."""
    from .core import is_isomorphic

    reps = four_node_representatives()
    counts = dict.fromkeys(FOUR_NODE_CLASSES, 0)
    for quad in itertools.combinations(range(g.order), 4):
        sub = induced(g, quad)
        name = next(k for k, r in reps.items() if is_isomorphic(sub, r))
        counts[name] += 1
    return counts


def motif_census(g: Tournament, sample: int | None = None, seed: int = 0) -> MotifCensus:
    """Triad counts plus four-node classes (exact up to ``EXACT_TETRAD_CAP`` unless sampling is asked for)."""
    trans, cyc = triad_census(g)
    if g.order < 4:
        return MotifCensus(trans, cyc, dict.fromkeys(FOUR_NODE_CLASSES, 0))
    if sample is None and g.order <= EXACT_TETRAD_CAP:
        return MotifCensus(trans, cyc, tetrad_census(g))
    k = sample if sample is not None else 100_000
    est, se = tetrad_census_sampled(g, k, seed)
    return MotifCensus(trans, cyc, est, exact=False, samples=k, standard_errors=se)
