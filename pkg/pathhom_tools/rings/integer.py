import fractions
import typing as t

import sympy

from .. import linalg


RING_NAME = 'Z'

RING_DESCRIPTION = 'Integers. Homology is described by free ranks and torsion invariant factors.'


def coerce(value: t.Any) -> int:
    if isinstance(value, fractions.Fraction):
        if value.denominator != 1:
            raise ValueError(f"{value} is not an integer.")
        return value.numerator

    return linalg.as_int(value)


def kernel_basis(matrix: sympy.Matrix) -> sympy.Matrix:
    return linalg.integer_kernel(matrix)


def solve(matrix: sympy.Matrix, rhs: sympy.Matrix) -> t.Optional[sympy.Matrix]:
    return linalg.integer_solve(matrix, rhs)


def rank_and_torsion(matrix: sympy.Matrix) -> tuple[int, list[int]]:
    form = linalg.smith_normal_form(matrix)
    return form.rank, form.torsion
