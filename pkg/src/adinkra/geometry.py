"""Numeric realization: embedding the graph in C^5 and mapping to curves.

Vertices embed as unit-modulus-flavored 5-vectors built from a golden-ratio
base point; crossing an edge of color j conjugates every coordinate and
applies a fixed sign pattern. Face centers fill in fixed templates whose free
signs are matched against an adjacent vertex. Five quotient maps nu_1..nu_5
send these points onto elliptic curves where the combinatorial group elements
can be checked against the honest chord-tangent group law.
"""

from __future__ import annotations

import cmath
import functools
import math

from .hypercube import Face, bit, cyc, faces
from .jacobian import N, GroupElt, face_image, vertex_image

PHI = (1 + math.sqrt(5)) / 2
PHI3 = 2 * PHI + 1  # equals phi cubed
ZETA = cmath.exp(2j * math.pi / 10)

TOL = 1e-9

# Point at infinity on every curve.
INF = None

BASE_VERTEX = 31
BASE_EMBEDDING = (
    1 + 0j,
    ZETA ** 2 * math.sqrt(PHI),
    ZETA ** 9,
    1j * ZETA ** 6,
    ZETA ** 8 * math.sqrt(PHI),
)

# SIGNS[k-1][j-1]: sign applied to coordinate x_k when crossing an edge of
# color j (every coordinate is also conjugated).
SIGNS = (
    (+1, +1, +1, +1, +1),
    (-1, -1, -1, -1, +1),
    (-1, +1, +1, +1, -1),
    (-1, -1, +1, +1, -1),
    (-1, -1, -1, +1, -1),
)


def cross_edge(x: tuple[complex, ...], j: int) -> tuple[complex, ...]:
    """Carry an embedded point across an edge of color j."""
    return tuple(SIGNS[k][j - 1] * x[k].conjugate() for k in range(N))


@functools.lru_cache(maxsize=None)
def embedding(v: int) -> tuple[complex, ...]:
    """Embedded position of vertex v, reached from the base vertex by
    crossing one edge per differing coordinate (the crossings commute)."""
    x = BASE_EMBEDDING
    for j in range(1, N + 1):
        if not bit(v, j):
            x = cross_edge(x, j)
    return x


# ---------------------------------------------------------------------------
# Face centers. For the face with colors (j, j+1) the coordinate x_{j+2}
# vanishes; the remaining coordinates follow a fixed template whose free
# signs are matched against an adjacent embedded vertex. Templates are
# normalized so x_1 = 1, except faces (4,5) where x_1 = 0 and x_2 = 1 instead.

_SQ = math.sqrt
# Template entries: ("fixed", value) | ("imag", magnitude) | ("real", magnitude)
_FACE_TEMPLATES: dict[int, tuple] = {
    5: (("fixed", 1), ("fixed", 0), ("imag", 1.0), ("imag", _SQ(PHI)), ("imag", _SQ(PHI + 1))),
    1: (("fixed", 1), ("imag", 1.0), ("fixed", 0), ("imag", _SQ(PHI - 1)), ("imag", _SQ(PHI))),
    2: (("fixed", 1), ("imag", _SQ(PHI)), ("real", _SQ(PHI - 1)), ("fixed", 0), ("imag", 1.0)),
    3: (("fixed", 1), ("imag", _SQ(PHI + 1)), ("real", _SQ(PHI)), ("real", 1.0), ("fixed", 0)),
    4: (("fixed", 0), ("fixed", 1), ("imag", 1.0), ("imag", 1.0), ("imag", 1.0)),
}


def face_center(face: Face, reference: int | None = None) -> tuple[complex, ...]:
    """Embedded center of a face, with template signs matched against the
    embedding of an adjacent vertex (the face basepoint unless given)."""
    j = face.colors[0]
    u = face.basepoint if reference is None else reference
    if reference is not None and reference not in face.members:
        raise ValueError("reference vertex must lie on the face")
    w = embedding(u)
    if j == 4:
        w = tuple(c / w[1] for c in w)
    out = []
    for slot, (kind, mag) in enumerate(_FACE_TEMPLATES[j]):
        if kind == "fixed":
            out.append(complex(mag))
            continue
        ref = w[slot].imag if kind == "imag" else w[slot].real
        if abs(ref) < TOL:
            raise ValueError(f"cannot match sign of coordinate {slot + 1}")
        s = 1.0 if ref > 0 else -1.0
        out.append(s * mag * (1j if kind == "imag" else 1))
    return tuple(out)


def face_through(v: int, j: int) -> Face:
    """The face with colors (j, j+1) whose 4-cycle contains vertex v."""
    jp = cyc(j, 1, N)
    mask = (1 << (j - 1)) | (1 << (jp - 1))
    return Face(N, (j, jp), v & ~mask)


# ---------------------------------------------------------------------------
# The five quotient maps onto elliptic curves y^2 = x(x-1)(x-r).

CURVE_R = {1: PHI + 1, 2: PHI, 3: -PHI, 4: PHI + 1, 5: PHI}


def nu(k: int, x: tuple[complex, ...]) -> tuple[complex, complex] | None:
    """Map an embedded point onto curve k; returns None for the point at
    infinity (reached when the denominator coordinate vanishes)."""
    x1, x2, x3, x4, x5 = x
    den = {1: x5, 2: x1, 3: x2, 4: x3, 5: x4}[k]
    if abs(den * den) < 1e-12:
        return INF
    if k == 1:
        return (-PHI3 * x1 ** 2 / x5 ** 2 - PHI, PHI3 * x2 * x3 * x4 / x5 ** 3)
    if k == 2:
        return (x2 ** 2 / x1 ** 2 + PHI + 1, 1j * x3 * x4 * x5 / x1 ** 3)
    if k == 3:
        return (PHI3 * x3 ** 2 / x2 ** 2 + PHI + 1, 1j * PHI3 * x1 * x4 * x5 / x2 ** 3)
    if k == 4:
        return ((PHI + 1) * x4 ** 2 / x3 ** 2 - PHI, 1j * PHI * x1 * x2 * x5 / x3 ** 3)
    if k == 5:
        return (-(x5 ** 2) / x4 ** 2 + PHI + 1, 1j * x1 * x2 * x3 / x4 ** 3)
    raise ValueError("k must be 1..5")


def curve_coeffs(k: int) -> tuple[float, float]:
    """(a, b) with the curve in the form y^2 = x^3 + a x^2 + b x."""
    r = CURVE_R[k]
    return (-(1 + r), r)


def curve_residual(k: int, P) -> float:
    """|y^2 - x(x-1)(x-r)| for a finite point; 0 for infinity."""
    if P is INF:
        return 0.0
    x, y = P
    r = CURVE_R[k]
    return abs(y * y - x * (x - 1) * (x - r))


def j_invariant(r: complex) -> complex:
    """j-invariant of y^2 = x(x-1)(x-r)."""
    return 256 * (r * r - r + 1) ** 3 / (r * r * (r - 1) ** 2)


# ---------------------------------------------------------------------------
# Chord-tangent group law.


def points_close(P, Q, tol: float = TOL) -> bool:
    if P is INF or Q is INF:
        return P is INF and Q is INF
    return abs(P[0] - Q[0]) <= tol and abs(P[1] - Q[1]) <= tol


def neg_point(P):
    if P is INF:
        return INF
    return (P[0], -P[1])


def add(k: int, P, Q):
    """Group-law sum of two curve points (None is the identity)."""
    if P is INF:
        return Q
    if Q is INF:
        return P
    a, b = curve_coeffs(k)
    x1, y1 = P
    x2, y2 = Q
    if abs(x1 - x2) <= TOL:
        if abs(y1 + y2) <= TOL:
            return INF
        lam = (3 * x1 * x1 + 2 * a * x1 + b) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - a - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def mul(k: int, m: int, P):
    """m-fold sum of P (negative m allowed)."""
    if m < 0:
        return mul(k, -m, neg_point(P))
    R = INF
    for _ in range(m):
        R = add(k, R, P)
    return R


def point_order(k: int, P, limit: int = 8) -> int:
    """Order of a torsion point, up to `limit`."""
    R = P
    for m in range(1, limit + 1):
        if R is INF:
            return m
        R = add(k, R, P)
    raise ValueError(f"order exceeds {limit}")


# ---------------------------------------------------------------------------
# Cross-validation of the combinatorial images against the group law.


@functools.lru_cache(maxsize=None)
def generators(k: int):
    """(e_inf, e4, e2) on curve k: the images of the base vertex, of the
    center of the face with colors (k-2, k-1) through the base vertex, and of
    the center of the face with colors (k, k+1) through it."""
    e_inf = nu(k, embedding(BASE_VERTEX))
    e4 = nu(k, face_center(face_through(BASE_VERTEX, cyc(k, -2, N))))
    e2 = nu(k, face_center(face_through(BASE_VERTEX, k)))
    return e_inf, e4, e2


def expand(k: int, g: GroupElt):
    """Evaluate a combinatorial group element on curve k via the group law."""
    e_inf, e4, e2 = generators(k)
    P = mul(k, g.a, e_inf)
    P = add(k, P, mul(k, g.b4, e4))
    return add(k, P, mul(k, g.c2, e2))


def cross_validate(tol: float = TOL):
    """Compare the numeric curve image of every embedded point (32 vertices
    and 40 face centers, on all 5 curves) with the group-law expansion of its
    combinatorial image. Returns (passed, total, failures)."""
    face_list = faces(N)
    passed, total = 0, 0
    failures = []
    for k in range(1, N + 1):
        for v in range(1 << N):
            total += 1
            numeric = nu(k, embedding(v))
            expected = expand(k, vertex_image(k, v))
            if points_close(numeric, expected, tol):
                passed += 1
            else:
                failures.append(("vertex", k, v, numeric, expected))
        for f in face_list:
            total += 1
            numeric = nu(k, face_center(f))
            expected = expand(k, face_image(k, f))
            if points_close(numeric, expected, tol):
                passed += 1
            else:
                failures.append(("face", k, (f.colors, f.basepoint), numeric, expected))
    return passed, total, failures
