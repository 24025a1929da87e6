"""Adjacency spectra of ILTT iterates: direct solve versus the cloning recurrence.

A non-zero eigenvalue ``lam`` of step t produces the two non-zero eigenvalues
``lam +/- sqrt(lam^2 + lam)`` of step t+1 (principal square root), and these
are all of them.  ``-1/2`` never occurs.

Zero eigenvalues need care: the kernel of the step-t+1 matrix has the same
dimension as that of step t while the algebraic multiplicity doubles, so
zero sits in ever larger Jordan blocks and floating-point solvers scatter it
into a ring of radius ~ eps^(1/size).  The direct route therefore counts
zeros exactly (rank of a matrix power over two prime fields) and labels that
many smallest-modulus computed values as zero.
"""

from __future__ import annotations

import cmath
import enum
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import Tournament
from .eigen import eigvals
from .errors import SizeCapError
from .generate import ModelKind, iterate_final
from .metrics import strong_components

DIRECT_CAP = 1024
TAU_EIG = 1e-9
TAU_ZERO = 1e-7
TAU_MATCH = 1e-6

# Products of two residues summed over <= DIRECT_CAP terms stay below 2^63.
_PRIMES = (33554393, 67108859)


class Provenance(enum.Enum):
    DIRECT = "direct"
    RECURRENCE = "recurrence"


def _sort_key(z: complex) -> tuple[float, float]:
    return (z.real, z.imag)


@dataclass(frozen=True)
class Spectrum:
    """Non-zero eigenvalues (sorted by real, then imaginary part) plus a zero count."""

    values: tuple[complex, ...]
    provenance: Provenance
    zero_count: int = 0

    @property
    def dimension(self) -> int:
        return len(self.values) + self.zero_count

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    m = m % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(m[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        f = m[:, c].copy()
        f[rank] = 0
        m = (m - np.outer(f, m[rank]) % p) % p
        rank += 1
    return rank


def _matpow_mod_p(m: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(m.shape[0], dtype=np.int64)
    base = m % p
    while e:
        if e & 1:
            result = (result @ base) % p
        e >>= 1
        if e:
            base = (base @ base) % p
    return result


def zero_multiplicity(matrix: np.ndarray) -> int:
    """Algebraic multiplicity of eigenvalue 0 of an integer matrix.

    Equals ``n - rank(A^k)`` for any ``k >= n``.  Ranks are taken over two
    prime fields; a field rank never exceeds the rational rank, so the larger
    of the two is used.
    """
    a = np.asarray(matrix, dtype=np.int64)
    n = a.shape[0]
    e = 1 << max(0, (n - 1).bit_length())
    rank = max(_rank_mod_p(_matpow_mod_p(a, e, p), p) for p in _PRIMES)
    return n - rank


def direct_spectrum(g: Tournament, cap: int = DIRECT_CAP) -> Spectrum:
    """All eigenvalues of the 0/1 adjacency matrix via the in-repo QR solver.

    The matrix is first permuted to block triangular form along the strong
    components; singleton components contribute exact zeros.
    """
    if g.order > cap:
        raise SizeCapError("direct eigensolve", g.order, cap)
    a = g.adjacency()
    zeros = 0
    nonzero: list[complex] = []
    for comp in strong_components(g):
        if len(comp) == 1:
            zeros += 1
            continue
        block = a[np.ix_(comp, comp)]
        z = zero_multiplicity(block.astype(np.int64))
        vals = eigvals(block.astype(np.float64))
        by_size = np.argsort(np.abs(vals), kind="stable")
        zeros += z
        nonzero.extend(complex(v) for v in vals[by_size[z:]])
    nonzero.sort(key=_sort_key)
    return Spectrum(tuple(nonzero), Provenance.DIRECT, zeros)


def base_nonzero(spectrum: Spectrum, tau_zero: float = TAU_ZERO) -> list[complex]:
    return [v for v in spectrum.values if abs(v) > tau_zero]


def recurrence_step(values: Iterable[complex]) -> list[complex]:
    out = []
    for lam in values:
        root = cmath.sqrt(lam * lam + lam)
        out.append(lam + root)
        out.append(lam - root)
    return out


def recurrence_spectrum(base_values: Sequence[complex], t: int) -> Spectrum:
    """Non-zero eigenvalues after ``t`` ILTT steps, from those of the base."""
    vals = [complex(v) for v in base_values]
    for _ in range(t):
        vals = recurrence_step(vals)
    vals.sort(key=_sort_key)
    return Spectrum(tuple(vals), Provenance.RECURRENCE)


def _nearest(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    if xs.size == 0:
        return np.zeros(0)
    if ys.size == 0:
        return np.full(xs.size, np.inf)
    return np.min(np.abs(xs[:, None] - ys[None, :]), axis=1)


def set_distance(xs: Sequence[complex], ys: Sequence[complex]) -> float:
    """Symmetric Hausdorff distance between two finite sets (0 if both empty)."""
    xa, ya = np.asarray(xs, dtype=complex), np.asarray(ys, dtype=complex)
    parts = [_nearest(xa, ya), _nearest(ya, xa)]
    return float(max((p.max() for p in parts if p.size), default=0.0))


def clusters(values: Sequence[complex], tol: float) -> list[tuple[complex, int]]:
    """Group values closer than ``tol`` (single linkage); (representative, size) pairs."""
    remaining = sorted(values, key=_sort_key)
    out = []
    used = [False] * len(remaining)
    for i, v in enumerate(remaining):
        if used[i]:
            continue
        members = [i]
        used[i] = True
        j = 0
        while j < len(members):
            c = remaining[members[j]]
            for k, w in enumerate(remaining):
                if not used[k] and abs(w - c) <= tol:
                    used[k] = True
                    members.append(k)
            j += 1
        out.append((v, len(members)))
    return out


@dataclass
class RecurrenceReport:
    base_order: int
    steps: int
    direct: Spectrum
    recurrence: Spectrum
    match_distance: float
    matched: bool
    min_distance_to_minus_half: float
    trace_sum: complex
    trace_square_sum: complex
    direct_multiplicities: list[tuple[complex, int]] = field(repr=False)
    recurrence_multiplicities: list[tuple[complex, int]] = field(repr=False)
    double_root_at_minus_one: bool = False

    def to_dict(self) -> dict:
        return {
            "base_order": self.base_order,
            "steps": self.steps,
            "order": self.direct.dimension,
            "direct_nonzero": len(self.direct.values),
            "direct_zero_count": self.direct.zero_count,
            "recurrence_nonzero": len(self.recurrence.values),
            "match_distance": self.match_distance,
            "matched": self.matched,
            "min_distance_to_minus_half": self.min_distance_to_minus_half,
            "trace_sum_abs": abs(self.trace_sum),
            "trace_square_sum_abs": abs(self.trace_square_sum),
            "double_root_at_minus_one": self.double_root_at_minus_one,
            "direct_multiplicities": sorted(m for _, m in self.direct_multiplicities),
            "recurrence_multiplicities": sorted(m for _, m in self.recurrence_multiplicities),
        }


def validate_recurrence(
    base: Tournament,
    t: int,
    tau_match: float = TAU_MATCH,
    tau_zero: float = TAU_ZERO,
    cap: int = DIRECT_CAP,
) -> RecurrenceReport:
    """Solve the step-t ILTT matrix directly and compare with the recurrence."""
    order = base.order << t
    if order > cap:
        raise SizeCapError("direct eigensolve", order, cap)
    lam0 = base_nonzero(direct_spectrum(base, cap), tau_zero)
    rec = recurrence_spectrum(lam0, t)
    direct = direct_spectrum(iterate_final(base, ModelKind.ILTT, t), cap)
    dist = set_distance(direct.values, rec.values)
    vals = direct.as_array()
    to_half = np.abs(vals + 0.5)
    min_half = float(to_half.min()) if vals.size else float("inf")
    if direct.zero_count:
        min_half = min(min_half, 0.5)
    # zero eigenvalues contribute nothing to either power sum
    s1 = complex(vals.sum()) if vals.size else 0j
    s2 = complex((vals**2).sum()) if vals.size else 0j
    double = any(abs(v + 1) <= tau_match for v in lam0)
    return RecurrenceReport(
        base_order=base.order,
        steps=t,
        direct=direct,
        recurrence=rec,
        match_distance=dist,
        matched=dist <= tau_match,
        min_distance_to_minus_half=min_half,
        trace_sum=s1,
        trace_square_sum=s2,
        direct_multiplicities=clusters(direct.values, tau_match),
        recurrence_multiplicities=clusters(rec.values, tau_match),
        double_root_at_minus_one=double,
    )


def spectrum_csv(spectra: Iterable[Spectrum], include_zeros: bool = True) -> str:
    """CSV with header ``re,im,provenance``; floats in shortest round-trip form."""
    buf = io.StringIO()
    buf.write("re,im,provenance\n")
    for spec in spectra:
        tag = spec.provenance.value
        vals = list(spec.values)
        if include_zeros:
            vals += [0j] * spec.zero_count
            vals.sort(key=_sort_key)
        for v in vals:
            buf.write(f"{float(v.real)!r},{float(v.imag)!r},{tag}\n")
    return buf.getvalue()
