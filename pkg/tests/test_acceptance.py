"""End-to-end acceptance checks, one test per release criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with
``pytest -s`` or on failure) so a run doubles as a checklist.
"""

import time

import numpy as np

from adinkra import geometry, heights, jacobian, morse
from adinkra.hypercube import cyc
from adinkra.heights import fully_extended, valise


def checklist(name: str, ok: bool):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    assert ok, name


EXPECTED_COUNTS = {1: 2, 2: 6, 3: 38, 4: 990, 5: 395094}


def test_height_counts():
    t0 = time.monotonic()
    ok = all(heights.count_heights(n) == c for n, c in EXPECTED_COUNTS.items())
    elapsed = time.monotonic() - t0
    checklist(f"height counts 2/6/38/990/395094 ({elapsed:.1f}s)", ok and elapsed < 300)


def test_three_coloring_identity():
    direct = [heights.count_three_colorings(n) for n in range(1, 5)]
    ok = direct == [6, 18, 114, 2970] and all(
        direct[n - 1] == 3 * heights.count_heights(n) for n in range(1, 5)
    )
    checklist("3-coloring counts = 3 x height counts", ok)


def test_equivalence_classes():
    labels3 = heights.comb_classes(3)
    labels4 = heights.comb_classes(4)
    sizes4 = sorted(heights.class_sizes(labels4))
    expected4 = sorted(
        [2, 8, 8, 12] + [16] * 7 + [48] * 5 + [64] * 5 + [96] * 3
    )
    spot5 = [
        valise(5),
        heights.valise_without(5, [31]),
        heights.valise_without(5, [31, 28]),
        heights.valise_without(5, [31, 16]),
        heights.valise_without(5, [31, 28, 26]),
        heights.valise_without(5, [31, 28, 7]),
        heights.valise_without(5, [31, 28, 1]),
    ]
    spot_sizes = [heights.orbit_size(h.row(), 5) for h in spot5]
    ok = (
        labels3.max() + 1 == 5
        and labels4.max() + 1 == 24
        and sizes4 == expected4
        and sum(sizes4) == 990
        and spot_sizes == [2, 32, 160, 80, 320, 480, 320]
    )
    checklist("equivalence classes: 5 (n=3), 24 (n=4) + sizes, 7 spot sizes (n=5)", ok)


def test_morse_degree_is_eight_everywhere():
    H = heights.enumerate_heights(5)
    degs = morse.degree_array(H, 5)
    ok = bool(np.all(degs == 8))
    checklist("all 395094 Morse divisors on the genus-5 surface have degree 8", ok)


def test_worked_divisor_images():
    fe = fully_extended(5)
    v = valise(5)
    h1 = fe.lower(31)
    h2 = h1.lower(30)
    idq = jacobian.IDENTITY
    ok = (
        all(g == idq for g in jacobian.height_image(v))
        and all(g == idq for g in jacobian.height_image(fe))
        and all(g == jacobian.GroupElt(1, 3, 0) for g in jacobian.height_image(h1))
        and jacobian.height_image(h2)
        == tuple([jacobian.GroupElt(2, 2, 0)] * 4 + [idq])
    )
    checklist("worked images: valise/extended -> id, then (1,3,0)^5, then (2,2,0)^4 + id", ok)


def test_step_law_exhaustive():
    checked = jacobian.check_step_law()  # raises on any violation
    checklist(
        f"step law a -> a±1, b -> b∓1 (mod 4) over all {checked} lowering moves",
        checked == 2723904,
    )


CENSUS = {
    0: 83830, 1: 72384, 2: 47200, 3: 23392, 4: 9048,
    5: 2752, 6: 704, 7: 128, 8: 24,
}


def test_census_histogram():
    expected = {a: c for a, c in CENSUS.items()}
    expected.update({-a: c for a, c in CENSUS.items() if a})
    ok = all(jacobian.census(k) == expected for k in range(1, 6))
    checklist("winding-number census matches the reference histogram on all 5 curves", ok)


def test_main_theorem():
    ok = jacobian.check_main_theorem()
    A, B4, C2 = jacobian.all_images()
    extremes = (
        int(np.count_nonzero(A[:, 0] == 8)) == 24
        and int(np.count_nonzero(A[:, 0] == -8)) == 24
    )
    checklist("image constraints c=0, b=-a mod 4, |a|<=8; ±8 hit 24 times each", ok and extremes)


def test_equivariance():
    rot = jacobian.check_rotation_equivariance()  # raises on any violation
    shift = jacobian.check_shift_equivariance(samples=1000, seed=0)
    checklist(
        "rotation equivariance (exhaustive) and shift law (1000 x 32)",
        rot == 395094 and shift == 32000,
    )


def test_geometry_suite():
    t0 = time.monotonic()
    residual_ok = True
    for v in range(32):
        x = geometry.embedding(v)
        for k in range(1, 6):
            P = geometry.nu(k, x)
            if P is not geometry.INF and geometry.curve_residual(k, P) >= 1e-9:
                residual_ok = False
    for face in [geometry.face_through(31, j) for j in range(1, 6)]:
        x = geometry.face_center(face)
        for k in range(1, 6):
            P = geometry.nu(k, x)
            if P is not geometry.INF and geometry.curve_residual(k, P) >= 1e-9:
                residual_ok = False

    # face center on colors (j, j+1): torsion order depends only on (j - k) mod 5
    torsion_ok = True
    for k in range(1, 6):
        for j in range(1, 6):
            P = geometry.nu(k, geometry.face_center(geometry.face_through(31, j)))
            delta = (j - k) % 5
            if delta == 2:
                torsion_ok &= P is geometry.INF
            elif delta == 3:
                torsion_ok &= P is not geometry.INF and geometry.point_order(k, P) == 4
            else:
                torsion_ok &= P is not geometry.INF and geometry.point_order(k, P) == 2

    sum_ok = True
    for k in range(1, 6):
        b = geometry.nu(k, geometry.embedding(0))
        w = geometry.nu(k, geometry.embedding(31))
        f = geometry.nu(
            k, geometry.face_center(geometry.face_through(31, cyc(k, -1, 5)))
        )
        sum_ok &= geometry.points_close(geometry.add(k, b, w), f, 1e-9)

    j_ok = all(
        abs(geometry.j_invariant(geometry.CURVE_R[k]) - 2048) < 1e-6
        for k in range(1, 6)
    )
    passed, total, failures = geometry.cross_validate(1e-9)
    elapsed = time.monotonic() - t0
    ok = (
        residual_ok
        and torsion_ok
        and sum_ok
        and j_ok
        and (passed, total) == (360, 360)
        and elapsed < 10
    )
    checklist(f"geometry: residuals, torsion pattern, point sums, j=2048, 360/360 ({elapsed:.2f}s)", ok)


def test_path_bound():
    steps = {n: len(heights.lowering_schedule(n)) for n in (3, 4, 5)}
    ok = all(steps[n] == (n - 1) * 2 ** (n - 2) for n in (3, 4, 5)) and all(
        heights.lowering_schedule(n)[-1][1] == valise(n, whites_down=False)
        for n in (3, 4, 5)
    )
    checklist("greedy lowering schedule reaches the valise in (n-1)*2^(n-2) steps", ok)
