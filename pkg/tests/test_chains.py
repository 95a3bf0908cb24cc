"""
Chains, the boundary operator, induced maps and the cylinder lift.

Core claims:
    - irregular paths vanish and zero coefficients are dropped
    - ∂∂ = 0 on regular chains
    - allowed paths are enumerated per level under a budget
    - the lift satisfies ∂v̂ = −(∂v)^ + v′ − v on random allowed chains
    - lifting e_023 − e_013 on the square gives the six-term cube chain
    - iterated lifts of a point span Ω_n of the n-cube
"""

import random

import pytest
import sympy

from pathhom_tools import enums, errors
from pathhom_tools.chains import (Chain, base_copy, boundary, concat_product, enumerate_allowed, induced_map, is_allowed,
                                  lift, prime_copy)
from pathhom_tools.digraph import DigraphMap, cube_digraph, cylinder, make_digraph, simplex_digraph
from pathhom_tools.fixtures import square, triangle
from pathhom_tools.homology import build_omega


# -- Helpers -----------------------------------------------------------------

def _make_random_digraph(rng, n=5, density=0.4):
    names = [str(i) for i in range(n)]
    edges = [(a, b) for a in names for b in names if a != b and rng.random() < density]
    return make_digraph(names, edges)


def _make_random_chain(rng, graph, p):
    paths = enumerate_allowed(graph, p)
    if not paths:
        return Chain.zero(p)

    picked = rng.sample(paths, min(len(paths), 4))
    return Chain(p, [(path, rng.randint(-3, 3)) for path in picked])


def _square_index(label):
    """Square vertex with label x + 2·level as an index of cylinder(I)."""
    return 2 * (label % 2) + label // 2


def _cube_index(label):
    """Cube vertex with label s + 4·level as an index of cylinder(square)."""
    return 2 * _square_index(label % 4) + label // 4


# -- Chain arithmetic --------------------------------------------------------

def test_irregular_paths_vanish():
    chain = Chain(2, [((0, 0, 1), 5), ((0, 1, 2), 1), ((0, 1, 2), -1)])
    assert chain.is_zero()


def test_arithmetic():
    a = Chain.elementary((0, 1))
    b = Chain.elementary((1, 2), 2)

    assert (a + b)[(1, 2)] == 2
    assert (a - a).is_zero()
    assert (3 * a)[(0, 1)] == 3
    assert -a == Chain.elementary((0, 1), -1)


def test_rational_coefficients_do_not_fit_integers():
    with pytest.raises(ValueError):
        Chain.elementary((0, 1), sympy.Rational(1, 2)).to_ring(enums.Ring.Z)


def test_from_names_and_format():
    graph = triangle()
    chain = Chain.from_names(graph, {('a', 'b'): 1, ('a', 'c'): -2})

    assert chain.format(graph) == 'e[a,b] - 2*e[a,c]'
    assert Chain.zero(1).format() == '0'


def test_mixed_dimensions_rejected():
    with pytest.raises(ValueError):
        Chain.elementary((0, 1)) + Chain.elementary((0, 1, 2))


# -- Boundary ----------------------------------------------------------------

def test_boundary_of_two_path():
    expected = Chain(1, [((1, 2), 1), ((0, 2), -1), ((0, 1), 1)])
    assert boundary(Chain.elementary((0, 1, 2))) == expected


def test_boundary_drops_irregular_faces():
    assert boundary(Chain.elementary((0, 1, 0))) == Chain(1, [((1, 0), 1), ((0, 1), 1)])


def test_boundary_of_vertex_is_zero():
    assert boundary(Chain.elementary((3,))).is_zero()


@pytest.mark.parametrize('seed', range(10))
def test_boundary_squares_to_zero(seed):
    rng = random.Random(seed)
    graph = _make_random_digraph(rng)

    for p in (2, 3):
        assert boundary(boundary(_make_random_chain(rng, graph, p))).is_zero()


# -- Allowed paths -----------------------------------------------------------

def test_enumerate_allowed_levels():
    graph = simplex_digraph(2)

    assert enumerate_allowed(graph, 0) == [(0,), (1,), (2,)]
    assert enumerate_allowed(graph, 1) == [(0, 1), (0, 2), (1, 2)]
    assert enumerate_allowed(graph, 2) == [(0, 1, 2)]
    assert enumerate_allowed(graph, 3) == []


def test_enumerate_allowed_budget():
    with pytest.raises(errors.BudgetExceeded):
        enumerate_allowed(cube_digraph(3), 2, budget=5)


def test_is_allowed():
    graph = triangle()

    assert is_allowed(Chain.elementary((0, 1, 2)), graph)
    assert not is_allowed(Chain.elementary((2, 0)), graph)


def test_induced_map_kills_collapsed_paths():
    graph = triangle()
    f = DigraphMap.from_names(graph, graph, {'a': 'a', 'b': 'a', 'c': 'c'})

    assert induced_map(f, Chain.elementary((0, 1))).is_zero()
    assert induced_map(f, Chain.elementary((1, 2))) == Chain.elementary((0, 2))


def test_concat_product():
    product = concat_product(Chain.elementary((0, 1)), Chain.elementary((2,)))
    assert product == Chain.elementary((0, 1, 2))


# -- Lift --------------------------------------------------------------------

def test_lift_of_vertex_and_edge():
    assert lift(Chain.elementary((0,))) == Chain.elementary((0, 1))
    assert lift(Chain.elementary((0, 1))) == Chain(2, [((0, 1, 3), 1), ((0, 2, 3), -1)])


def test_lift_checks_vertices():
    with pytest.raises(ValueError):
        lift(Chain.elementary((0, 5)), triangle())


@pytest.mark.parametrize('seed', range(20))
def test_lift_boundary_identity(seed):
    rng = random.Random(seed)
    graph = _make_random_digraph(rng)

    for p in (0, 1, 2):
        v = _make_random_chain(rng, graph, p)
        left = boundary(lift(v))
        right = -lift(boundary(v)) + prime_copy(v) - base_copy(v)

        assert left == right
        assert is_allowed(lift(v), cylinder(graph))


def test_lift_of_square_two_path():
    graph = square()
    v = Chain(2, [((_square_index(0), _square_index(2), _square_index(3)), 1),
                  ((_square_index(0), _square_index(1), _square_index(3)), -1)])

    expected = {(0, 4, 6, 7): 1, (0, 2, 6, 7): -1, (0, 2, 3, 7): 1,
                (0, 4, 5, 7): -1, (0, 1, 5, 7): 1, (0, 1, 3, 7): -1}
    expected_chain = Chain(3, [(tuple(_cube_index(x) for x in path), c) for path, c in expected.items()])

    assert lift(v) == expected_chain
    assert is_allowed(lift(v), cylinder(graph))


def test_iterated_lift_spans_cube_omega():
    v = Chain.elementary((0,))
    for _ in range(3):
        v = lift(v)

    omega = build_omega(cube_digraph(3), 3)
    assert omega.dimensions()[3] == 1
    assert omega.coordinates(v) is not None
