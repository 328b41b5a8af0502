"""Divisors attached to a height function.

Each vertex contributes a multiple of itself determined by how many times the
neighbor deltas change sign as the colors are read cyclically; each flat
"bow-tie" face (a rainbow 4-cycle carrying only two height values) contributes
its center with multiplicity 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypercube import Face, faces, vertices
from .heights import Height


def sign_changes(diffs: tuple[int, ...]) -> int:
    """Cyclic sign changes in the neighbor-delta sequence (each entry +-1)."""
    n = len(diffs)
    return sum(diffs[j] != diffs[(j + 1) % n] for j in range(n))


def kappa(diffs: tuple[int, ...]) -> int:
    """Vertex multiplicity from the cyclic sign-change count: 0 changes give
    -1 (a local extremum), 2 give 0, and each extra pair adds 1."""
    lam = sign_changes(diffs)
    return -1 if lam == 0 else (lam - 2) // 2


def is_bowtie(h: Height, face: Face) -> bool:
    """True when the face carries exactly two height values, i.e. both
    diagonals of the 4-cycle are level."""
    a, b, c, d = (h.values[v] for v in face.members)
    return a == c and b == d


@dataclass(frozen=True)
class Divisor:
    """Formal sum of vertices and face centers: kappa per vertex (zeros kept
    for positional access) plus the bow-tie faces, each with weight 1."""

    n: int
    vertex_kappa: tuple[int, ...]
    bowties: tuple[Face, ...]

    @property
    def degree(self) -> int:
        return sum(self.vertex_kappa) + len(self.bowties)

    def points(self) -> list[tuple[str, object, int]]:
        """Nonzero support as (kind, id, multiplicity) triples."""
        out: list[tuple[str, object, int]] = [
            ("vertex", v, k) for v, k in enumerate(self.vertex_kappa) if k != 0
        ]
        out.extend(("face", (f.colors, f.basepoint), 1) for f in self.bowties)
        return out


def divisor(h: Height) -> Divisor:
    ks = tuple(kappa(h.diffs(v)) for v in vertices(h.n))
    bows = tuple(f for f in faces(h.n) if is_bowtie(h, f))
    return Divisor(h.n, ks, bows)


# ---------------------------------------------------------------------------
# Bulk versions operating on a (M, 2^n) array of height rows.


def delta_arrays(H: np.ndarray, n: int) -> np.ndarray:
    """Neighbor deltas for every row: shape (n, M, 2^n), entry [j-1, i, v]
    is row i's value at v with bit j flipped, minus its value at v."""
    idx = np.arange(1 << n)
    return np.stack([H[:, idx ^ (1 << j)] - H for j in range(n)]).astype(np.int8)


def kappa_arrays(H: np.ndarray, n: int) -> np.ndarray:
    """Vertex multiplicities for every row, shape (M, 2^n), dtype int8."""
    D = delta_arrays(H, n)
    lam = np.zeros(H.shape, dtype=np.int8)
    for j in range(n):
        lam += D[j] != D[(j + 1) % n]
    return np.where(lam == 0, -1, (lam - 2) // 2).astype(np.int8)


def bowtie_arrays(H: np.ndarray, n: int, face_list: list[Face]) -> np.ndarray:
    """Bow-tie indicators for every row, shape (M, len(face_list)), bool."""
    cols = []
    for f in face_list:
        a, b, c, d = f.members
        cols.append((H[:, a] == H[:, c]) & (H[:, b] == H[:, d]))
    return np.stack(cols, axis=1)


def degree_array(H: np.ndarray, n: int) -> np.ndarray:
    """Divisor degree of every row."""
    ks = kappa_arrays(H, n).astype(np.int64).sum(axis=1)
    bows = bowtie_arrays(H, n, faces(n)).sum(axis=1)
    return ks + bows
