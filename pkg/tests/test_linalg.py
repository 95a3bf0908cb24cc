"""
Exact linear algebra behind the coefficient rings.

Core claims:
    - the rational kernel is in canonical echelon form
    - rational_solve returns None for inconsistent systems
    - the Smith normal form satisfies left·A·right = diag and its factors divide each other
    - the integer kernel is saturated and integer_solve respects divisibility
"""

import random

import pytest
import sympy

from pathhom_tools import linalg
from pathhom_tools.rings import RING_HANDLERS, RingHandler, get_ring_handler
from pathhom_tools import enums


# -- Helpers -----------------------------------------------------------------

def _make_random_matrix(rng, rows, cols, spread=4):
    return sympy.Matrix(rows, cols, lambda i, j: rng.randint(-spread, spread))


def _diagonal_matrix(form, rows, cols):
    result = sympy.zeros(rows, cols)
    for i, d in enumerate(form.diagonal):
        result[i, i] = d
    return result


# -- Rational ----------------------------------------------------------------

def test_rational_nullspace_echelon():
    kernel = linalg.rational_nullspace(sympy.Matrix([[-1, -1]]))
    assert kernel == sympy.Matrix([[-1], [1]])


def test_rational_nullspace_of_empty_matrix():
    assert linalg.rational_nullspace(sympy.zeros(0, 3)) == sympy.eye(3)


def test_rational_solve():
    matrix = sympy.Matrix([[1, 2], [0, 1]])

    assert linalg.rational_solve(matrix, sympy.Matrix([[5], [2]])) == sympy.Matrix([[1], [2]])
    assert linalg.rational_solve(sympy.Matrix([[1], [1]]), sympy.Matrix([[1], [2]])) is None


def test_rational_solve_without_unknowns():
    assert linalg.rational_solve(sympy.zeros(2, 0), sympy.zeros(2, 1)) == sympy.zeros(0, 1)
    assert linalg.rational_solve(sympy.zeros(2, 0), sympy.Matrix([[1], [0]])) is None


def test_as_int():
    assert linalg.as_int(sympy.Rational(4, 2)) == 2

    with pytest.raises(ValueError):
        linalg.as_int(sympy.Rational(1, 2))


# -- Integer -----------------------------------------------------------------

def test_smith_form_small():
    form = linalg.smith_normal_form(sympy.Matrix([[2, 0], [0, 3]]))

    assert form.diagonal == (1, 6)
    assert form.torsion == [6]
    assert form.left * sympy.Matrix([[2, 0], [0, 3]]) * form.right == sympy.diag(1, 6)


@pytest.mark.parametrize('seed', range(15))
def test_smith_form_random(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    matrix = _make_random_matrix(rng, rows, cols)
    form = linalg.smith_normal_form(matrix)

    assert form.left * matrix * form.right == _diagonal_matrix(form, rows, cols)
    assert abs(form.left.det()) == 1 and abs(form.right.det()) == 1
    assert form.rank == matrix.rank()
    assert all(d > 0 for d in form.diagonal)
    assert all(b % a == 0 for a, b in zip(form.diagonal, form.diagonal[1:]))


def test_integer_kernel_is_saturated():
    kernel = linalg.integer_kernel(sympy.Matrix([[2, 4]]))

    assert kernel.shape == (2, 1)
    assert sympy.Matrix([[2, 4]]) * kernel == sympy.zeros(1, 1)
    assert sorted(abs(v) for v in kernel) == [1, 2]


def test_integer_solve():
    assert linalg.integer_solve(sympy.Matrix([[2]]), sympy.Matrix([[4]])) == sympy.Matrix([[2]])
    assert linalg.integer_solve(sympy.Matrix([[2]]), sympy.Matrix([[3]])) is None
    assert linalg.integer_solve(sympy.Matrix([[2], [2]]), sympy.Matrix([[2], [4]])) is None


# -- Ring handlers -----------------------------------------------------------

@pytest.mark.parametrize('ring', list(enums.Ring))
def test_ring_handlers_loaded(ring):
    handler = get_ring_handler(ring)

    assert isinstance(handler, RingHandler)
    assert handler in RING_HANDLERS.values()


def test_ring_torsion():
    matrix = sympy.Matrix([[2, 0], [0, 3]])

    assert get_ring_handler(enums.Ring.Q).rank_and_torsion(matrix) == (2, [])
    assert get_ring_handler(enums.Ring.Z).rank_and_torsion(matrix) == (2, [6])
