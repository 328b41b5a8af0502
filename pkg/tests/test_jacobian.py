import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from adinkra.heights import Height, enumerate_heights, fully_extended, valise
from adinkra.hypercube import Face, faces, is_bipartition_white
from adinkra.jacobian import (
    GroupElt,
    IDENTITY,
    census,
    divisor_image,
    face_image,
    height_image,
    images,
    predicted_rotation_image,
    predicted_shift_image,
    sign,
    splitting,
    vertex_image,
)

E_INF = GroupElt(1, 0, 0)
E4 = GroupElt(0, 1, 0)
E2 = GroupElt(0, 0, 1)


def test_group_elt_arithmetic():
    assert E4 + E4 + E4 + E4 == IDENTITY
    assert E2 + E2 == IDENTITY
    assert -GroupElt(3, 1, 1) == GroupElt(-3, 3, 1)
    assert 2 * GroupElt(1, 3, 1) == GroupElt(2, 2, 0)
    assert GroupElt(1, 3, 0) - GroupElt(1, 3, 0) == IDENTITY


def test_base_vertex_images():
    for k in range(1, 6):
        assert vertex_image(k, 31) == E_INF
        assert vertex_image(k, 0) == -E_INF + 2 * E4


def test_white_vertex_sign_pattern():
    # x1, x3, x5 set: plus on curves 1..3, minus on 4 and 5
    w = 0b10101
    assert [vertex_image(k, w).a for k in range(1, 6)] == [1, 1, 1, -1, -1]
    # x1, x2, x4 set
    w = 0b01011
    assert [vertex_image(k, w).a for k in range(1, 6)] == [-1, 1, 1, 1, -1]


def test_black_vertex_sign_pattern():
    # x1, x2, x3, x5 set: B+ on curves 1, 3, 5 and B- on 2, 4
    b = 0b10111
    expect = {1: -1, 3: -1, 5: -1, 2: 1, 4: 1}
    for k in range(1, 6):
        img = vertex_image(k, b)
        assert img == GroupElt(expect[k], 2, 0)


def test_face_images_for_colors_1_2_through_base():
    f = Face(5, (1, 2), 31 & ~0b11)
    expect = {1: E2, 2: 2 * E4, 3: E4, 4: IDENTITY, 5: 2 * E4 + E2}
    for k in range(1, 6):
        assert face_image(k, f) == expect[k]


def test_sign_is_constant_on_faces_with_offset_3():
    for k in range(1, 6):
        for f in faces(5):
            if (f.colors[0] - k) % 5 == 3:
                vals = {sign(k, 31, v) for v in f.members}
                assert len(vals) == 1


def test_worked_height_images():
    fe = fully_extended(5)
    h1 = fe.lower(31)
    h2 = h1.lower(0b11110)
    assert height_image(valise(5)) == (IDENTITY,) * 5
    assert height_image(fe) == (IDENTITY,) * 5
    assert height_image(h1) == (GroupElt(1, 3, 0),) * 5
    assert height_image(h2) == (GroupElt(2, 2, 0),) * 4 + (IDENTITY,)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 395093))
def test_bulk_images_match_scalar(i):
    H = enumerate_heights(5)
    A, B4, C2 = images(H[i : i + 1])
    h = Height.from_row(H[i])
    for k in range(1, 6):
        g = divisor_image(h, k)
        assert (g.a, g.b4, g.c2) == (A[0, k - 1], B4[0, k - 1], C2[0, k - 1])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 395093), st.integers(0, 31))
def test_shift_equivariance_samples(i, u):
    h = Height.from_row(enumerate_heights(5)[i])
    assert height_image(h.shift(u)) == predicted_shift_image(height_image(h), u)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 395093))
def test_rotation_equivariance_samples(i):
    h = Height.from_row(enumerate_heights(5)[i])
    assert height_image(h.rotate(31)) == predicted_rotation_image(height_image(h))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 395093))
def test_inversion_preserves_images(i):
    h = Height.from_row(enumerate_heights(5)[i])
    assert height_image(h.invert()) == height_image(h)


def test_splitting_is_balanced():
    for k in range(1, 6):
        signs = splitting(k)
        assert signs.count(1) == 16 and signs.count(-1) == 16
    # all five splittings of the base vertices are positive
    assert all(splitting(k)[0] == 1 for k in range(1, 6))


def test_census_is_symmetric_and_complete():
    hist = census(1)
    assert sum(hist.values()) == 395094
    assert all(hist[a] == hist[-a] for a in range(1, 9))


def test_images_of_whites_vs_blacks():
    for v in range(32):
        img = vertex_image(1, v)
        if is_bipartition_white(v):
            assert (img.b4, img.c2) == (0, 0)
        else:
            assert (img.b4, img.c2) == (2, 0)
