"""
Sperner colourings and the oriented triangulation digraph.

Core claims:
    - generated colourings are Sperner and contain a three-colour triangle
    - after moving side vertices inside, colour map and corner map compose to the identity of S_3
    - faces with fewer than three colours have contractible boundary loops, three-colour faces do not
    - violations are reported per condition
"""

import dataclasses
import random

import pytest

from pathhom_tools import errors
from pathhom_tools.digraph import Digraph
from pathhom_tools.sperner import (Triangulation, cyclic_triangle, face_loops, find_tricolor_triangle,
                                   generate_subdivision, generate_two_color, orient, perturb_sides, side_vertices,
                                   triangulation_from_json, validate, verify_sperner_maps, violations)


# -- Helpers -----------------------------------------------------------------

def _recolor(tri, name, color):
    colors = list(tri.colors)
    colors[tri.vertices.index(name)] = color
    return dataclasses.replace(tri, colors=tuple(colors))


def _make_single_triangle(colors=(1, 2, 3)):
    return Triangulation.from_names('ABC', ['ABC'], dict(zip('ABC', colors)), 'ABC')


# -- Construction ------------------------------------------------------------

def test_from_names():
    tri = _make_single_triangle()

    assert tri.triangles == ((0, 1, 2),)
    assert tri.corners == (0, 1, 2)
    assert tri.boundary_edges() == [(0, 1), (0, 2), (1, 2)]


def test_from_names_errors():
    with pytest.raises(errors.UnknownVertex):
        Triangulation.from_names('ABC', ['ABZ'], {'A': 1, 'B': 2, 'C': 3}, 'ABC')

    with pytest.raises(errors.NotSperner):
        Triangulation.from_names('ABC', ['ABC'], {'A': 1, 'B': 2}, 'ABC')

    with pytest.raises(errors.NotSperner):
        Triangulation.from_names('ABC', ['ABC'], {'A': 1, 'B': 2, 'C': 3}, 'AB')


def test_json_round_trip():
    tri = generate_subdivision(3, 5)
    assert triangulation_from_json(tri.to_json()) == tri


def test_json_errors():
    with pytest.raises(errors.ParseError):
        triangulation_from_json([])

    with pytest.raises(errors.ParseError):
        triangulation_from_json({'vertices': ['A']})

    with pytest.raises(errors.ParseError):
        triangulation_from_json({'vertices': 'ABC', 'triangles': ['ABC'], 'colors': {'A': 'x', 'B': 2, 'C': 3},
                                 'corners': 'ABC'})


# -- Validation --------------------------------------------------------------

def test_side_vertices():
    tri = generate_subdivision(3, 0)

    assert side_vertices(tri) == {'AB': ['(1,0)', '(2,0)'], 'AC': ['(0,1)', '(0,2)'], 'BC': ['(2,1)', '(1,2)']}


@pytest.mark.parametrize('k', range(1, 7))
def test_generated_colourings_are_sperner(k):
    for seed in range(10):
        assert violations(generate_subdivision(k, seed)) == []


def test_side_colour_violation():
    tri = _recolor(generate_subdivision(3, 0), '(1,0)', 3)

    assert violations(tri) == ['Vertex (1,0) on side AB has colour 3.']

    with pytest.raises(errors.NotSperner):
        validate(tri)


def test_corner_colour_violation():
    problems = violations(_make_single_triangle((1, 3, 2)))

    assert len(problems) == 2
    assert problems[0].startswith('Corner B')


def test_two_colourings_are_not_sperner():
    for seed in range(5):
        result = find_tricolor_triangle(generate_two_color(4, seed))

        assert not result.found
        assert not result.is_sperner


def test_orient():
    graph = orient(_make_single_triangle())
    tri = Triangulation.from_names('ABCD', ['ABD', 'BCD'], {'A': 1, 'B': 2, 'C': 3, 'D': 1}, 'ABC')
    mixed = orient(tri)

    assert graph == Digraph('ABC', [('A', 'B'), ('B', 'C'), ('C', 'A')])
    assert mixed.has_edge(mixed.index('A'), mixed.index('D'))
    assert mixed.has_edge(mixed.index('D'), mixed.index('A'))
    assert mixed.has_edge(mixed.index('D'), mixed.index('B'))
    assert mixed.has_edge(mixed.index('C'), mixed.index('D'))
    assert side_vertices(tri) == {'AB': [], 'AC': ['D'], 'BC': []}
    assert cyclic_triangle() == Digraph('123', [('1', '2'), ('2', '3'), ('3', '1')])


# -- Three-colour triangles --------------------------------------------------

def test_single_triangle():
    result = find_tricolor_triangle(_make_single_triangle())

    assert result.triangle == ('A', 'B', 'C')
    assert result.is_sperner
    assert verify_sperner_maps(_make_single_triangle()).consistent


def test_side_vertices_must_be_moved_first():
    with pytest.raises(errors.SideVerticesPresent):
        verify_sperner_maps(generate_subdivision(3, 0))


def test_perturbation_clears_the_sides():
    tri = perturb_sides(generate_subdivision(4, 1))

    assert all(not names for names in side_vertices(tri).values())
    assert violations(tri) == []


@pytest.mark.parametrize('k', range(1, 7))
def test_sperner_maps(k):
    rng = random.Random(k)

    for _ in range(34):
        tri = generate_subdivision(k, rng)
        assert find_tricolor_triangle(tri).found

        report = verify_sperner_maps(perturb_sides(tri))
        assert report.consistent
        assert report.boundary_loop_nontrivial


def test_face_loops():
    tri = generate_subdivision(4, 3)

    for names, loop in face_loops(tri):
        colors = {tri.color(tri.vertices.index(name)) for name in names}
        assert loop.is_trivial == (len(colors) < 3), names


def test_two_colour_faces_are_trivial():
    tri = generate_two_color(3, 2)
    assert all(loop.is_trivial for _, loop in face_loops(tri))
