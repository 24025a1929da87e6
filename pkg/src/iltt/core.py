"""Tournament data type, constructors and small-order isomorphism.

Adjacency is held as a bit-packed boolean matrix: row ``i`` is a little-endian
bit string of length ``order`` (``numpy.packbits(..., bitorder="little")``),
so bit ``j`` of row ``i`` is set iff the arc ``i -> j`` exists.  Padding bits
past ``order`` are always zero, which makes byte equality the same as
labeled equality.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    InvalidComparisonError,
    InvalidOrderError,
    InvalidSelectionError,
    InvalidTournamentError,
    SizeCapError,
)

ISOMORPHISM_CAP = 10

# Bumped whenever the bit layout drawn from the stream changes.
RANDOM_SCHEME = "pcg64-raw-v1"


def row_bytes(order: int) -> int:
    return (order + 7) // 8


def pack_rows(dense: np.ndarray) -> np.ndarray:
    return np.packbits(np.asarray(dense, dtype=bool), axis=1, bitorder="little")


def unpack_rows(packed: np.ndarray, order: int) -> np.ndarray:
    return np.unpackbits(packed, axis=-1, count=order, bitorder="little").astype(bool)


class Tournament:
    """Immutable tournament on nodes ``0..order-1``."""

    __slots__ = ("_order", "_bits", "_hash")

    def __init__(self, order: int, bits: np.ndarray, *, validate: bool = True):
        if order < 1:
            raise InvalidOrderError(f"tournament order must be >= 1, got {order}")
        bits = np.ascontiguousarray(bits, dtype=np.uint8)
        if bits.shape != (order, row_bytes(order)):
            raise InvalidTournamentError(
                f"packed rows have shape {bits.shape}, expected {(order, row_bytes(order))}"
            )
        bits.setflags(write=False)
        self._order = order
        self._bits = bits
        self._hash = None
        if validate:
            self.validate()

    @classmethod
    def from_adjacency(cls, matrix) -> "Tournament":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidTournamentError(f"adjacency must be square, got shape {a.shape}")
        return cls(a.shape[0], pack_rows(a))

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        if order < 1:
            raise InvalidOrderError(f"tournament order must be >= 1, got {order}")
        a = np.zeros((order, order), dtype=bool)
        for u, v in arcs:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidTournamentError(f"arc ({u}, {v}) out of range for order {order}")
            if a[u, v]:
                raise InvalidTournamentError(f"arc ({u}, {v}) listed twice")
            a[u, v] = True
        return cls.from_adjacency(a)

    @property
    def order(self) -> int:
        return self._order

    @property
    def packed(self) -> np.ndarray:
        """Read-only packed rows, shape ``(order, ceil(order / 8))``."""
        return self._bits

    def adjacency(self) -> np.ndarray:
        """Dense boolean adjacency matrix (a fresh array)."""
        return unpack_rows(self._bits, self._order)

    def matrix(self, dtype=np.float64) -> np.ndarray:
        return self.adjacency().astype(dtype)

    def has_arc(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return bool((self._bits[u, v >> 3] >> (v & 7)) & 1)

    def out_neighbors(self, u: int) -> np.ndarray:
        self._check_node(u)
        return np.flatnonzero(unpack_rows(self._bits[u], self._order))

    def in_neighbors(self, u: int) -> np.ndarray:
        self._check_node(u)
        col = (self._bits[:, u >> 3] >> (u & 7)) & 1
        return np.flatnonzero(col)

    def out_degrees(self) -> np.ndarray:
        return np.unpackbits(self._bits, axis=1, bitorder="little").sum(axis=1).astype(np.int64)

    def in_degrees(self) -> np.ndarray:
        return (self._order - 1) - self.out_degrees()

    def arcs(self) -> Iterator[tuple[int, int]]:
        us, vs = np.nonzero(self.adjacency())
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v

    def arc_count(self) -> int:
        return int(np.unpackbits(self._bits).sum())

    def validate(self) -> None:
        """Raise ``InvalidTournamentError`` unless loop-free, complete and antisymmetric."""
        n = self._order
        pad = row_bytes(n) * 8 - n
        if pad and np.any(self._bits[:, -1] >> (8 - pad)):
            raise InvalidTournamentError("bits set beyond the tournament order")
        a = self.adjacency()
        if np.any(np.diagonal(a)):
            raise InvalidTournamentError(f"loop at node {int(np.flatnonzero(np.diagonal(a))[0])}")
        both = a & a.T
        if np.any(both):
            u, v = (int(x) for x in np.argwhere(both)[0])
            raise InvalidTournamentError(f"pair {{{u}, {v}}} carries arcs in both directions")
        off = ~np.eye(n, dtype=bool)
        missing = off & ~(a | a.T)
        if np.any(missing):
            u, v = (int(x) for x in np.argwhere(missing)[0])
            raise InvalidTournamentError(f"pair {{{u}, {v}}} carries no arc")

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self._order:
            raise InvalidSelectionError(f"node {u} out of range for order {self._order}")

    def __len__(self) -> int:
        return self._order

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self._order == other._order and np.array_equal(self._bits, other._bits)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, self._bits.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        if self._order <= 8:
            return f"Tournament({self._order}, arcs={sorted(self.arcs())})"
        return f"Tournament(order={self._order})"


def make_linear_order(n: int) -> Tournament:
    """Transitive tournament with ``i -> j`` iff ``i < j``."""
    if n < 1:
        raise InvalidOrderError(f"linear order needs n >= 1, got {n}")
    return Tournament.from_adjacency(np.triu(np.ones((n, n), dtype=bool), k=1))


def make_directed_3_cycle() -> Tournament:
    return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def make_random(n: int, seed: int) -> Tournament:
    """Uniform random tournament, reproducible across platforms.

    Pairs ``i < j`` are visited row-major; each consumes one bit of the raw
    little-endian 64-bit output of ``numpy.random.PCG64(seed)``.  A set bit
    orients the pair ``i -> j``.  Raw PCG64 output is stream-stable across
    numpy releases, unlike ``Generator`` convenience methods.
    """
    if n < 1:
        raise InvalidOrderError(f"random tournament needs n >= 1, got {n}")
    pairs = n * (n - 1) // 2
    words = max(1, (pairs + 63) // 64)
    raw = np.random.PCG64(seed).random_raw(words).astype("<u8")
    coins = np.unpackbits(raw.view(np.uint8), bitorder="little")[:pairs].astype(bool)
    iu, ju = np.triu_indices(n, k=1)
    a = np.zeros((n, n), dtype=bool)
    a[iu[coins], ju[coins]] = True
    a[ju[~coins], iu[~coins]] = True
    return Tournament.from_adjacency(a)


def dual(g: Tournament) -> Tournament:
    """Reverse every arc."""
    return Tournament(g.order, pack_rows(g.adjacency().T), validate=False)


def induced(g: Tournament, nodes: Sequence[int]) -> Tournament:
    """Subtournament on ``nodes``; position ``a`` in the result is ``nodes[a]``."""
    idx = [int(v) for v in nodes]
    if not idx:
        raise InvalidSelectionError("induced subtournament needs at least one node")
    if len(set(idx)) != len(idx):
        raise InvalidSelectionError(f"duplicate node ids in selection {idx}")
    bad = [v for v in idx if not 0 <= v < g.order]
    if bad:
        raise InvalidSelectionError(f"node ids {bad} out of range for order {g.order}")
    a = g.adjacency()[np.ix_(idx, idx)]
    return Tournament(len(idx), pack_rows(a), validate=False)


def relabel(g: Tournament, perm: Sequence[int]) -> Tournament:
    """Tournament whose arc ``perm[u] -> perm[v]`` mirrors each arc ``u -> v`` of ``g``."""
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(g.order)):
        raise InvalidSelectionError("relabel needs a permutation of all node ids")
    inv = np.empty_like(perm)
    inv[perm] = np.arange(g.order)
    return induced(g, inv.tolist())


def differ_by(g: Tournament, h: Tournament) -> int:
    """Number of unordered pairs oriented differently in ``g`` and ``h``."""
    if g.order != h.order:
        raise InvalidComparisonError(f"cannot compare orders {g.order} and {h.order}")
    flipped = np.unpackbits(np.bitwise_xor(g.packed, h.packed)).sum()
    return int(flipped) // 2


def _check_iso_cap(order: int) -> None:
    if order > ISOMORPHISM_CAP:
        raise SizeCapError("isomorphism test", order, ISOMORPHISM_CAP)


def find_isomorphism(g: Tournament, h: Tournament) -> list[int] | None:
    """Return ``perm`` with ``g.has_arc(u, v) == h.has_arc(perm[u], perm[v])``, or None.

    Backtracking over node images, restricted to equal out-degree and pruned
    by arc consistency with the partial map.  Orders above ``ISOMORPHISM_CAP``
    are refused.
    """
    if g.order != h.order:
        return None
    _check_iso_cap(g.order)
    n = g.order
    ga, ha = g.adjacency(), h.adjacency()
    gd, hd = ga.sum(axis=1), ha.sum(axis=1)
    if sorted(gd.tolist()) != sorted(hd.tolist()):
        return None
    order = sorted(range(n), key=lambda u: (int(np.sum(gd == gd[u])), u))
    candidates = {u: [v for v in range(n) if hd[v] == gd[u]] for u in range(n)}
    image = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        u = order[depth]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in order[:depth]:
                x = image[w]
                if ga[u, w] != ha[v, x]:
                    ok = False
                    break
            if not ok:
                continue
            image[u] = v
            used[v] = True
            if extend(depth + 1):
                return True
            used[v] = False
        image[u] = -1
        return False

    return list(image) if extend(0) else None


def is_isomorphic(g: Tournament, h: Tournament) -> bool:
    return find_isomorphism(g, h) is not None


def canonical_form(g: Tournament) -> tuple[int, bytes]:
    """Lexicographically smallest packed adjacency over score-sorted relabelings.

    Nodes are first ordered by out-degree; only permutations within equal
    out-degree classes are searched, so regular tournaments are the slow case.
    """
    _check_iso_cap(g.order)
    a = g.adjacency()
    deg = a.sum(axis=1)
    classes = [list(np.flatnonzero(deg == d)) for d in sorted(set(deg.tolist()))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        seq = [v for part in parts for v in part]
        code = pack_rows(a[np.ix_(seq, seq)]).tobytes()
        if best is None or code < best:
            best = code
    return g.order, best
