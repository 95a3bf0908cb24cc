import fractions
import typing as t

import sympy

from .. import linalg


RING_NAME = 'Q'

RING_DESCRIPTION = 'Rational numbers, exact fractions. Homology is described by Betti numbers.'


def coerce(value: t.Any) -> sympy.Rational:
    if isinstance(value, fractions.Fraction):
        return sympy.Rational(value.numerator, value.denominator)

    return sympy.Rational(value)


def kernel_basis(matrix: sympy.Matrix) -> sympy.Matrix:
    return linalg.rational_nullspace(matrix)


def solve(matrix: sympy.Matrix, rhs: sympy.Matrix) -> t.Optional[sympy.Matrix]:
    return linalg.rational_solve(matrix, rhs)


def rank_and_torsion(matrix: sympy.Matrix) -> tuple[int, list[int]]:
    return linalg.rank(matrix), []
