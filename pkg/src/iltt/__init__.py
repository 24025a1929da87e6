"""Iterated local transitivity (ILTT) tournaments and their dual variant."""

from .core import (
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
from .domination import domination_numbers, is_in_dominating, is_out_dominating, minimum_dominating_set
from .embed import EmbeddingCertificate, embed_target, find_linear_order, kappa
from .errors import *  # noqa: F401,F403
from .generate import GenerationTrace, ModelKind, iterate, iterate_final, step
from .hamilton import HamiltonCycle, find_hamilton_cycle, is_hamiltonian, lift_hamilton_cycle
from .metrics import (
    DistanceSummary,
    all_pairs_distances,
    count_alpha,
    has_sink,
    is_strong,
    predict_wiener_iltt,
    predict_wiener_ilttd,
    strong_components,
    summarize,
)
from .motifs import MotifCensus, motif_census, triad_census
from .spectral import Spectrum, direct_spectrum, recurrence_spectrum, validate_recurrence

__version__ = "0.1.0"
