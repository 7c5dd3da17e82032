import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import h_from_f, random_polygon
from inertia import InputError, enumerate_faces, face_from_facets, h_vector, make_polytope
from inertia.polytope import f_vector, format_polytope, parse_polytope

SQUARE = ([(1, 0), (0, 1), (-1, 0), (0, -1)], [0, 0, -1, -1])


def test_square_faces():
    P = make_polytope(*SQUARE)
    assert P.N == 4 and len(P.vertices) == 4
    assert f_vector(P) == [4, 4, 1]
    whole = face_from_facets(P, [])
    assert whole.dim == 2
    assert h_vector(whole) == [1, 2, 1]
    assert face_from_facets(P, [0, 2]) is None
    edge = face_from_facets(P, [0])
    assert edge.dim == 1 and h_vector(edge) == [1, 1]
    assert h_vector(face_from_facets(P, [0, 1])) == [1]


def test_cube_h_vector():
    normals = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    P = make_polytope(normals, [0, 0, 0, -1, -1, -1])
    assert h_vector(face_from_facets(P, [])) == [1, 3, 3, 1]
    assert f_vector(P) == [8, 12, 6, 1]


def test_rational_offsets_and_labels_roundtrip():
    P = make_polytope([(1, 0), (0, 1), (-1, -1)], [0, 0, Fraction(-5, 2)], [1, 2, 3])
    Q = parse_polytope(format_polytope(P))
    assert Q == P
    assert P.labels == [1, 2, 3]


@pytest.mark.parametrize(
    "normals, offsets, labels, message",
    [
        ([(1, 0), (0, 1)], [0, 0], None, "unbounded"),
        ([(2, 0), (0, 1), (-1, -1)], [0, 0, -1], None, "not primitive"),
        ([(1, 0), (0, 1), (-1, -1)], [0, 0, -1], [1, 0, 1], "label"),
        ([(1, 0), (-1, 0), (0, 1), (0, -1)], [0, 1, 0, -1], None, "empty"),
        ([(1, 0), (0, 1), (-1, 0), (0, -1), (-1, -1)], [0, 0, -1, -1, -2], None, "not simple"),
        ([(1, 0), (0, 1), (-1, -1), (-1, 0)], [0, 0, -1, -5], None, "redundant"),
    ],
)
def test_invalid_polytopes(normals, offsets, labels, message):
    with pytest.raises(InputError, match=message):
        make_polytope(normals, offsets, labels)


def test_octahedron_is_not_simple():
    normals = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    with pytest.raises(InputError, match="not simple"):
        make_polytope(normals, [-1] * 8)


@pytest.mark.parametrize("text", ["mode polytope\nfacet 1 ; 0\n", "mode polytope\ndim 1\n", "mode polytope\ndim 1\nfacet 1\n", "mode polytope\ndim 1\nvertex 0\n"])
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_polytope(text)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_h_vector_agrees_with_f_vector(seed):
    normals, offsets, labels = random_polygon(random.Random(seed))
    P = make_polytope(normals, offsets, labels)
    f = f_vector(P)
    for face in enumerate_faces(P):
        h = h_vector(face)
        assert sum(h) == len(face.vertex_set)
        assert h == h[::-1]
    assert h_vector(face_from_facets(P, [])) == h_from_f(f[:-1])
