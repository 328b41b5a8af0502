"""Combinatorial images of divisors on H^5.

Every divisor point (vertex or bow-tie face center) maps, for each of the
five curve indices k, into the group Z x Z/4 x Z/2; the image of a height's
divisor is the weighted sum. All index arithmetic on colors is cyclic mod 5.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .hypercube import Face, bit, cyc, faces, is_bipartition_white, popcount
from .heights import Height, enumerate_heights, lowering_edges
from .morse import bowtie_arrays, kappa_arrays, divisor

N = 5
WHITE_BASE = 31  # (1,1,1,1,1)
BLACK_BASE = 0  # (0,0,0,0,0)


@dataclass(frozen=True)
class GroupElt:
    """Element (a, b, c) of Z x Z/4 x Z/2."""

    a: int
    b4: int
    c2: int

    def __post_init__(self):
        object.__setattr__(self, "b4", self.b4 % 4)
        object.__setattr__(self, "c2", self.c2 % 2)

    def __add__(self, other: GroupElt) -> GroupElt:
        return GroupElt(self.a + other.a, self.b4 + other.b4, self.c2 + other.c2)

    def __neg__(self) -> GroupElt:
        return GroupElt(-self.a, -self.b4, self.c2)

    def __sub__(self, other: GroupElt) -> GroupElt:
        return self + (-other)

    def __mul__(self, m: int) -> GroupElt:
        return GroupElt(m * self.a, m * self.b4, m * self.c2)

    __rmul__ = __mul__

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b4 == 0 and self.c2 == 0


IDENTITY = GroupElt(0, 0, 0)


def sign(k: int, base: int, u: int) -> int:
    """(-1) to the power of the mismatch of coordinates k and k+2 between u
    and the base vertex."""
    e = (
        bit(u, k)
        + bit(u, cyc(k, 2, N))
        + bit(base, k)
        + bit(base, cyc(k, 2, N))
    )
    return -1 if e % 2 else 1


def vertex_image(k: int, v: int) -> GroupElt:
    """Image of a single vertex on curve k: whites land at (s, 0, 0) with the
    sign taken against the all-ones base, blacks at (-s, 2, 0) against the
    all-zeros base."""
    if is_bipartition_white(v):
        return GroupElt(sign(k, WHITE_BASE, v), 0, 0)
    s = sign(k, BLACK_BASE, v)
    return GroupElt(-s, 2, 0)


def face_image(k: int, face: Face) -> GroupElt:
    """Image of a face center on curve k, determined by the offset of the
    face's leading color from k. Coordinates k and k+2 never lie in the face
    when the offset is 3, so the sign is constant over the face."""
    j = face.colors[0]
    delta = (j - k) % N
    if delta == 0:
        return GroupElt(0, 0, 1)
    if delta == 1:
        return GroupElt(0, 2, 1)
    if delta == 2:
        return IDENTITY
    if delta == 3:
        return GroupElt(0, sign(k, WHITE_BASE, face.basepoint), 0)
    return GroupElt(0, 2, 0)  # delta == 4


def divisor_image(h: Height, k: int) -> GroupElt:
    """Image of a height's divisor on curve k."""
    if h.n != N:
        raise ValueError("divisor images are defined on H^5")
    d = divisor(h)
    total = IDENTITY
    for v, kap in enumerate(d.vertex_kappa):
        if kap:
            total = total + kap * vertex_image(k, v)
    for f in d.bowties:
        total = total + face_image(k, f)
    return total


def height_image(h: Height) -> tuple[GroupElt, ...]:
    """Images on all five curves."""
    return tuple(divisor_image(h, k) for k in range(1, N + 1))


# ---------------------------------------------------------------------------
# Bulk image pipeline over a (M, 32) array of height rows.


@functools.lru_cache(maxsize=None)
def _vertex_weight_matrix() -> np.ndarray:
    """W[k-1, v]: the Z-coordinate contribution of one unit of multiplicity
    at vertex v, on curve k."""
    W = np.zeros((N, 1 << N), dtype=np.int64)
    for k in range(1, N + 1):
        for v in range(1 << N):
            W[k - 1, v] = vertex_image(k, v).a
    return W


@functools.lru_cache(maxsize=None)
def _face_tables() -> tuple[list[Face], np.ndarray, np.ndarray]:
    """(face list, FB4, FC2): per-face Z/4 and Z/2 contributions per curve."""
    fl = faces(N)
    fb4 = np.zeros((len(fl), N), dtype=np.int64)
    fc2 = np.zeros((len(fl), N), dtype=np.int64)
    for fi, f in enumerate(fl):
        for k in range(1, N + 1):
            img = face_image(k, f)
            fb4[fi, k - 1] = img.b4
            fc2[fi, k - 1] = img.c2
    return fl, fb4, fc2


def images(H: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Divisor images of every row of H, vectorized.

    Returns (A, B4, C2), each of shape (M, 5); column k-1 is the image on
    curve k, with B4 reduced mod 4 and C2 mod 2.
    """
    H = np.asarray(H)
    kap = kappa_arrays(H, N).astype(np.int64)
    A = kap @ _vertex_weight_matrix().T
    fl, fb4, fc2 = _face_tables()
    bows = bowtie_arrays(H, N, fl).astype(np.int64)
    black = np.array(
        [0 if is_bipartition_white(v) else 1 for v in range(1 << N)], dtype=np.int64
    )
    black_kappa = kap @ black
    B4 = (bows @ fb4 + 2 * black_kappa[:, None]) % 4
    C2 = (bows @ fc2) % 2
    return A, B4, C2


def all_images() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return images(enumerate_heights(N))


def census(k: int) -> dict[int, int]:
    """Histogram of the Z-coordinate of the curve-k image over all heights."""
    A, _, _ = all_images()
    col = A[:, k - 1]
    values, counts = np.unique(col, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def check_main_theorem(
    H: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Verify the structural constraints on every image: the Z/2 part
    vanishes, the Z/4 part is minus the Z part mod 4, and the Z part stays
    within [-8, 8]. Returns the image arrays for further use."""
    A, B4, C2 = images(enumerate_heights(N) if H is None else H)
    if C2.any():
        raise AssertionError("nonzero Z/2 component")
    if ((B4 + A) % 4).any():
        raise AssertionError("Z/4 component is not minus the Z component")
    if np.abs(A).max() > 8:
        raise AssertionError("Z component out of range")
    return A, B4, C2


def check_step_law() -> int:
    """Check every lowering move between heights of H^5: on each curve the Z
    part moves by exactly +-1, the Z/4 part by minus that, and the Z/2 part
    not at all. Returns the number of moves checked."""
    A, B4, C2 = all_images()
    src, _, dst = lowering_edges(N)
    da = A[dst] - A[src]
    if not np.all(np.abs(da) == 1):
        raise AssertionError("a Z component moved by something other than +-1")
    if ((B4[dst] - B4[src] + da) % 4).any():
        raise AssertionError("a Z/4 component did not move by minus the Z step")
    if (C2[dst] != C2[src]).any():
        raise AssertionError("a Z/2 component moved")
    return len(src)


def check_rotation_equivariance() -> int:
    """Verify over every height of H^5 that rotating about the all-ones
    vertex cyclically shifts the five curve images (curve k takes the old
    curve k-1 value). Returns the number of heights checked."""
    from .heights import rot_vertex

    H = enumerate_heights(N)
    perm = np.array([rot_vertex(31, v, N) for v in range(1 << N)])
    A, B4, C2 = images(H)
    Ar, B4r, C2r = images(H[:, perm])
    for arr, rot in ((A, Ar), (B4, B4r), (C2, C2r)):
        if not np.array_equal(rot, np.roll(arr, 1, axis=1)):
            raise AssertionError("rotation did not cyclically shift the images")
    return len(H)


def check_shift_equivariance(samples: int = 1000, seed: int = 0) -> int:
    """Verify on a random sample of heights, against all 32 XOR-shifts, that
    shifting scales each curve image by the vertex sign at the shift (negated
    for parity-changing shifts). Returns the number of (height, shift) pairs
    checked."""
    H = enumerate_heights(N)
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(H), size=samples, replace=False)
    idx = np.arange(1 << N)
    sample = H[picks]
    shifted = np.concatenate([sample[:, u ^ idx] for u in range(1 << N)])
    A, B4, C2 = images(sample)
    As, B4s, C2s = images(shifted)
    s = np.array(
        [
            [
                sign(k, BLACK_BASE, u) * (-1 if popcount(u) % 2 else 1)
                for k in range(1, N + 1)
            ]
            for u in range(1 << N)
        ]
    )
    for u in range(1 << N):
        block = slice(u * samples, (u + 1) * samples)
        if not np.array_equal(As[block], A * s[u]):
            raise AssertionError(f"Z part wrong under shift by {u}")
        if (np.mod(B4s[block] - B4 * s[u], 4)).any():
            raise AssertionError(f"Z/4 part wrong under shift by {u}")
        if not np.array_equal(C2s[block], C2):
            raise AssertionError(f"Z/2 part wrong under shift by {u}")
    return samples * (1 << N)


def splitting(k: int) -> list[int]:
    """The k-th color splitting of the vertices: the sign (-1)^(x_k + x_{k+2})
    attached to each vertex, 16 of each value."""
    return [sign(k, BLACK_BASE, v) for v in range(1 << N)]


# ---------------------------------------------------------------------------
# Equivariance predictions for the height operations.


def predicted_rotation_image(
    elts: tuple[GroupElt, ...]
) -> tuple[GroupElt, ...]:
    """Image of the rotation (about the all-ones vertex) of a height whose
    image is `elts`: curve k picks up the original curve k-1 value."""
    return tuple(elts[(k - 2) % N] for k in range(1, N + 1))


def predicted_shift_image(
    elts: tuple[GroupElt, ...], u: int
) -> tuple[GroupElt, ...]:
    """Image of the XOR-shift by u of a height whose image is `elts`: each
    curve's value is scaled by the vertex sign at u, negated when u changes
    bipartition class."""
    out = []
    for k in range(1, N + 1):
        s = sign(k, BLACK_BASE, u)
        if popcount(u) % 2:
            s = -s
        out.append(elts[k - 1] if s == 1 else -elts[k - 1])
    return tuple(out)
