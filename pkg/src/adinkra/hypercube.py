"""The hypercube graph H^N with rainbow edge coloring, faces, and automorphisms.

Vertices are integer bitmasks 0 .. 2^n - 1; bit j-1 holds the coordinate x_j
for color j (colors are 1-indexed, matching the usual cyclic rainbow
1, 2, ..., N). Two vertices are adjacent iff they differ in exactly one bit,
and the color of the edge is the index of the flipped bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


def popcount(v: int) -> int:
    return v.bit_count()


def bit(v: int, color: int) -> int:
    """Coordinate x_color of vertex v (colors 1-indexed)."""
    return (v >> (color - 1)) & 1


def flip(v: int, color: int) -> int:
    """Vertex with coordinate x_color toggled."""
    return v ^ (1 << (color - 1))


def cyc(color: int, shift: int, n: int) -> int:
    """Cyclic color arithmetic: color + shift in {1..n}."""
    return (color - 1 + shift) % n + 1


def vertices(n: int):
    return range(1 << n)


def neighbors(v: int, n: int) -> list[tuple[int, int]]:
    """All (color, neighbor) pairs of v in H^n, in color order."""
    return [(j, flip(v, j)) for j in range(1, n + 1)]


def hamming(u: int, v: int) -> int:
    return popcount(u ^ v)


def is_bipartition_white(v: int) -> bool:
    """Color-class convention: (1,1,...,1) is white, so whites have odd
    popcount when n is odd (the n=5 case of interest) and the all-ones
    parity in general."""
    return popcount(v) % 2 == 1


@dataclass(frozen=True)
class Face:
    """A rainbow face: the 4-cycle spanned by two consecutive colors.

    The basepoint is the unique face vertex with both face coordinates 0,
    which makes (colors, basepoint) a canonical key for the face.
    """

    n: int
    colors: tuple[int, int]  # (j, j+1 mod n)
    basepoint: int

    def __post_init__(self):
        j, jp = self.colors
        if bit(self.basepoint, j) or bit(self.basepoint, jp):
            raise ValueError("face basepoint must have both face coordinates 0")

    @property
    def members(self) -> tuple[int, int, int, int]:
        """The 4-cycle in traversal order b, b+e_j, b+e_j+e_j', b+e_j'."""
        j, jp = self.colors
        b = self.basepoint
        return (b, flip(b, j), flip(flip(b, j), jp), flip(b, jp))

    def __contains__(self, v: int) -> bool:
        return v in self.members


def faces(n: int) -> list[Face]:
    """All rainbow faces of H^n: n * 2^(n-2) of them for n >= 3.

    For n = 2 the cyclic pairs (1,2) and (2,1) coincide; the single face is
    emitted once under the pair (1,2).
    """
    if n < 2:
        raise ValueError("faces need n >= 2")
    pairs = [(1, 2)] if n == 2 else [(j, cyc(j, 1, n)) for j in range(1, n + 1)]
    out = []
    for j, jp in pairs:
        mask = (1 << (j - 1)) | (1 << (jp - 1))
        for b in vertices(n):
            if b & mask == 0:
                out.append(Face(n, (j, jp), b))
    return out


@dataclass(frozen=True)
class SignedPermutation:
    """Hypercube automorphism: permute coordinates, then XOR-translate.

    perm[i] is the source bit feeding result bit i, i.e.
    apply(v) bit i = v bit perm[i], XORed with flips.
    """

    perm: tuple[int, ...]
    flips: int

    def apply(self, v: int) -> int:
        w = 0
        for i, src in enumerate(self.perm):
            w |= ((v >> src) & 1) << i
        return w ^ self.flips

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """self after other: (self * other)(v) = self(other(v))."""
        n = len(self.perm)
        # result bit i = other(v) bit perm[i] = v bit other.perm[perm[i]],
        # xored with other.flips bit perm[i], then with self.flips bit i.
        perm = tuple(other.perm[p] for p in self.perm)
        carried = 0
        for i, p in enumerate(self.perm):
            carried |= ((other.flips >> p) & 1) << i
        return SignedPermutation(perm, carried ^ self.flips)

    def table(self) -> list[int]:
        """apply() evaluated on every vertex, as an index table."""
        return [self.apply(v) for v in range(1 << len(self.perm))]

    @staticmethod
    def identity(n: int) -> SignedPermutation:
        return SignedPermutation(tuple(range(n)), 0)


def automorphisms(n: int):
    """All 2^n * n! signed permutations of H^n, each exactly once."""
    for perm in itertools.permutations(range(n)):
        for flips in range(1 << n):
            yield SignedPermutation(perm, flips)


def is_edge(u: int, v: int) -> bool:
    return popcount(u ^ v) == 1
