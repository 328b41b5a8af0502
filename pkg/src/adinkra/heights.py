"""Height functions on the hypercube: enumeration, moves, and equivalence.

A height function assigns an integer to every vertex so that adjacent values
differ by exactly 1; heights are normalized to have minimum value 0. Bulk
work is done on numpy arrays with one row per height (dtype int8, column v =
value at vertex bitmask v); the `Height` dataclass is the convenient scalar
view used by the CLI and service layers.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .hypercube import (
    SignedPermutation,
    automorphisms,
    flip,
    hamming,
    is_bipartition_white,
    popcount,
    vertices,
)

# Number of height functions on H^6; recorded for reference, far too many to
# enumerate in memory with this module.
N6_HEIGHT_COUNT = 33_433_683_534


@dataclass(frozen=True)
class Height:
    """A normalized height function on H^n."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 1 << self.n:
            raise ValueError("values must have one entry per vertex")
        if min(self.values) != 0:
            raise ValueError("height must be normalized to min 0")
        for v in vertices(self.n):
            for j in range(1, self.n + 1):
                if abs(self.values[flip(v, j)] - self.values[v]) != 1:
                    raise ValueError(
                        f"values at vertices {v} and {flip(v, j)} must differ by 1"
                    )

    @classmethod
    def normalized(cls, n: int, values) -> Height:
        values = tuple(values)
        m = min(values)
        return cls(n, tuple(int(v) - m for v in values))

    @classmethod
    def from_row(cls, row: np.ndarray) -> Height:
        n = int(len(row)).bit_length() - 1
        return cls(n, tuple(int(x) for x in row))

    def row(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int8)

    def diffs(self, v: int) -> tuple[int, ...]:
        """Neighbor value deltas (d_1, ..., d_n) at vertex v, each +-1."""
        return tuple(
            self.values[flip(v, j)] - self.values[v] for j in range(1, self.n + 1)
        )

    def is_strict_local_max(self, v: int) -> bool:
        return all(d == -1 for d in self.diffs(v))

    def is_strict_local_min(self, v: int) -> bool:
        return all(d == 1 for d in self.diffs(v))

    def legal_lowerings(self) -> list[int]:
        return [v for v in vertices(self.n) if self.is_strict_local_max(v)]

    def legal_raisings(self) -> list[int]:
        return [v for v in vertices(self.n) if self.is_strict_local_min(v)]

    def lower(self, v: int) -> Height:
        """Drop a strict local maximum by 2 and renormalize."""
        if not self.is_strict_local_max(v):
            raise ValueError(f"vertex {v} is not a strict local maximum")
        values = list(self.values)
        values[v] -= 2
        return Height.normalized(self.n, values)

    def raise_(self, v: int) -> Height:
        """Lift a strict local minimum by 2 and renormalize."""
        if not self.is_strict_local_min(v):
            raise ValueError(f"vertex {v} is not a strict local minimum")
        values = list(self.values)
        values[v] += 2
        return Height.normalized(self.n, values)

    def invert(self) -> Height:
        m = max(self.values)
        return Height(self.n, tuple(m - x for x in self.values))

    def shift(self, u: int) -> Height:
        """Pull back along the XOR-translation v -> u ^ v."""
        return Height(self.n, tuple(self.values[u ^ v] for v in vertices(self.n)))

    def rotate(self, u: int) -> Height:
        """Pull back along the color-rotating automorphism based at u."""
        return Height(
            self.n, tuple(self.values[rot_vertex(u, v, self.n)] for v in vertices(self.n))
        )

    def apply(self, g: SignedPermutation) -> Height:
        return Height(self.n, tuple(self.values[g.apply(v)] for v in vertices(self.n)))


def rot_vertex(u: int, v: int, n: int) -> int:
    """Rotate v about basepoint u: cyclically retard the displacement bits.

    Each displacement coordinate x_j moves to x_{j-1} (cyclically), so the
    edge colors along any path from u drop by one.
    """
    d = u ^ v
    mask = (1 << n) - 1
    rotated = ((d >> 1) | (d << (n - 1))) & mask
    return u ^ rotated


@functools.lru_cache(maxsize=None)
def enumerate_heights(n: int) -> np.ndarray:
    """All normalized height functions on H^n, one per row, lexicographically
    sorted. Built by gluing two copies of H^(n-1): a pair (bottom, top) with a
    vertical shift s is a height of H^n iff the shifted copies differ by
    exactly 1 everywhere, and only the two shifts straddling the difference at
    vertex 0 can work.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return np.array([[0, 1], [1, 0]], dtype=np.int8)
    prev = enumerate_heights(n - 1).astype(np.int16)
    bot = prev[:, None, :]
    top = prev[None, :, :]
    d0 = bot[:, :, 0] - top[:, :, 0]
    glued = []
    for delta in (-1, 1):
        s = d0 + delta
        ok = np.all(np.abs(bot - top - s[:, :, None]) == 1, axis=2)
        i, j = np.nonzero(ok)
        rows = np.concatenate([prev[i], prev[j] + s[i, j][:, None]], axis=1)
        glued.append(rows)
    rows = np.concatenate(glued)
    rows -= rows.min(axis=1, keepdims=True)
    return np.unique(rows, axis=0).astype(np.int8)


def count_heights(n: int) -> int:
    if n == 6:
        return N6_HEIGHT_COUNT
    return len(enumerate_heights(n))


def height_index(n: int) -> dict[bytes, int]:
    """Row-bytes -> row-index lookup for enumerate_heights(n)."""
    return {row.tobytes(): i for i, row in enumerate(enumerate_heights(n))}


# ---------------------------------------------------------------------------
# Proper 3-colorings, counted independently of heights for cross-checks.


@functools.lru_cache(maxsize=None)
def three_colorings(n: int) -> np.ndarray:
    """All proper 3-colorings of H^n (colors 0, 1, 2), one per row.

    H^n is the prism over H^(n-1), so its proper colorings are exactly the
    pairs of proper colorings of H^(n-1) that disagree at every vertex.
    Explicit enumeration is only feasible through n = 4.
    """
    if n == 1:
        return np.array(
            [(a, b) for a in range(3) for b in range(3) if a != b], dtype=np.uint8
        )
    prev = three_colorings(n - 1)
    ok = np.all(prev[:, None, :] != prev[None, :, :], axis=2)
    i, j = np.nonzero(ok)
    return np.concatenate([prev[i], prev[j]], axis=1)


def count_three_colorings(n: int) -> int:
    """Number of proper 3-colorings of H^n.

    Through n = 4 this enumerates them outright. For n = 5 it uses the fact
    that every 3-coloring arises from a unique height function together with a
    starting color (values mod 3 after an offset), giving 3x the height count.
    """
    if n <= 4:
        return len(three_colorings(n))
    return 3 * count_heights(n)


# ---------------------------------------------------------------------------
# Pin constructions: a height determined as the minimal-slope drape over a
# set of pinned-down vertices, h(v) = min over pins (value + hamming distance).


def from_pins(n: int, pins: dict[int, int]) -> Height:
    if not pins:
        raise ValueError("need at least one pin")
    values = [
        min(val + hamming(v, p) for p, val in pins.items()) for v in vertices(n)
    ]
    offset = min(values)
    for p, val in pins.items():
        if values[p] != val:
            raise ValueError(f"pins are inconsistent at vertex {p}")
    return Height(n, tuple(v - offset for v in values))


def from_pegs(n: int, pegs: dict[int, int]) -> Height:
    """The minimal normalized height hanging from pegged vertices: the max of
    the downward cones (value - hamming distance), clipped below at the parity
    floor 0/1 forced by the peg values."""
    if not pegs:
        raise ValueError("need at least one peg")
    p0, v0 = next(iter(pegs.items()))
    floor = [(v0 + hamming(v, p0)) % 2 for v in vertices(n)]
    for p, val in pegs.items():
        if (val - floor[p]) % 2:
            raise ValueError(f"peg at vertex {p} breaks the parity grid")
    values = [
        max(floor[v], max(val - hamming(v, p) for p, val in pegs.items()))
        for v in vertices(n)
    ]
    for p, val in pegs.items():
        if values[p] != val:
            raise ValueError(f"pegs are inconsistent at vertex {p}")
    return Height.normalized(n, values)


def valise(n: int, whites_down: bool = True) -> Height:
    """The two-valued height: one bipartition class at 0, the other at 1."""
    down = [v for v in vertices(n) if is_bipartition_white(v) == whites_down]
    return from_pins(n, {v: 0 for v in down})


def valise_without(n: int, removed) -> Height:
    """Drape over the white vertices minus `removed`: each removed vertex
    rises to twice its distance from the nearest remaining pin."""
    removed = set(removed)
    pins = {
        v: 0
        for v in vertices(n)
        if is_bipartition_white(v) and v not in removed
    }
    return from_pins(n, pins)


# ---------------------------------------------------------------------------
# Lowering moves in bulk: the directed graph on all heights of H^n.


def lowering_edges(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All lowering moves among heights of H^n.

    Returns (src, vertex, dst): row indices into enumerate_heights(n) of the
    source height, the strict local maximum lowered, and the resulting height.
    Every legal move is recorded, including those whose renormalized result
    coincides with another named height.
    """
    H = enumerate_heights(n).astype(np.int16)
    size = 1 << n
    idx = np.arange(size)
    maxmask = np.ones((len(H), size), dtype=bool)
    for j in range(n):
        maxmask &= H[:, idx ^ (1 << j)] - H == -1
    src, vert = np.nonzero(maxmask)
    rows = H[src].copy()
    rows[np.arange(len(src)), vert] -= 2
    rows -= rows.min(axis=1, keepdims=True)
    lookup = height_index(n)
    dst = np.fromiter(
        (lookup[row.astype(np.int8).tobytes()] for row in rows),
        dtype=np.int64,
        count=len(rows),
    )
    return src, vert, dst


# ---------------------------------------------------------------------------
# Combinatorial equivalence: orbits under the signed-permutation group.


@functools.lru_cache(maxsize=None)
def automorphism_tables(n: int) -> np.ndarray:
    """Vertex image tables of all 2^n n! hypercube automorphisms, (G, 2^n)."""
    return np.array([g.table() for g in automorphisms(n)], dtype=np.int64)


def orbit_rows(row: np.ndarray, n: int) -> np.ndarray:
    """Distinct images of one height row under all automorphisms."""
    tables = automorphism_tables(n)
    return np.unique(np.asarray(row)[tables], axis=0)


def orbit_size(row: np.ndarray, n: int) -> int:
    return len(orbit_rows(row, n))


def equivalent(a: Height, b: Height) -> bool:
    if a.n != b.n:
        return False
    target = b.row()
    return any(np.array_equal(r, target) for r in orbit_rows(a.row(), a.n))


def comb_classes(n: int) -> np.ndarray:
    """Class label for every height of H^n (row-aligned with
    enumerate_heights); labels are assigned in first-seen row order."""
    H = enumerate_heights(n)
    lookup = height_index(n)
    labels = np.full(len(H), -1, dtype=np.int64)
    next_label = 0
    for i in range(len(H)):
        if labels[i] != -1:
            continue
        for img in orbit_rows(H[i], n):
            labels[lookup[img.tobytes()]] = next_label
        next_label += 1
    return labels


def class_sizes(labels: np.ndarray) -> list[int]:
    return np.bincount(labels).tolist()


def fully_extended(n: int) -> Height:
    """The height h(v) = number of 1-coordinates of v."""
    return Height(n, tuple(popcount(v) for v in vertices(n)))


def lowering_schedule(n: int) -> list[tuple[int, Height]]:
    """Deterministic lowering run from the fully extended height down to the
    valise: while any vertex sits at value 2 or more, lower the highest such
    vertex (smallest bitmask on ties). Each vertex v is lowered exactly
    floor(h_fe(v) / 2) times, for (n-1) * 2^(n-2) moves in total.

    Returns the list of (vertex lowered, resulting height) in order.
    """
    h = fully_extended(n)
    moves: list[tuple[int, Height]] = []
    while max(h.values) > 1:
        top = max(h.values)
        v = min(u for u in vertices(n) if h.values[u] == top)
        h = h.lower(v)
        moves.append((v, h))
    return moves


def reduced_lowering_edges(n: int) -> tuple[np.ndarray, set[tuple[int, int]]]:
    """Class labels plus the induced edge set between classes."""
    labels = comb_classes(n)
    src, _, dst = lowering_edges(n)
    return labels, set(zip(labels[src].tolist(), labels[dst].tolist()))
