"""Exact matrix kernels shared by the coefficient rings.

Rational work is done by ``sympy`` row reduction. The integral Smith normal form is computed by elementary row and
column operations with the pivot of minimal absolute value, tracking the unimodular transforms so that
``left * A * right`` is diagonal.
"""

import dataclasses
import typing as t

import sympy


def zeros(rows: int, cols: int) -> sympy.Matrix:
    return sympy.zeros(rows, cols)


def rref(matrix: sympy.Matrix) -> tuple[sympy.Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns. Empty matrices are returned unchanged.
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return matrix.copy(), ()

    reduced, pivots = matrix.rref()
    return reduced, tuple(pivots)


def rank(matrix: sympy.Matrix) -> int:
    return len(rref(matrix)[1])


def rational_nullspace(matrix: sympy.Matrix) -> sympy.Matrix:
    """Kernel basis over Q in canonical echelon form: one column per free variable, carrying 1 at its free
    position and 0 at every other free position.

    :param matrix: m×n matrix.
    :return: n×k matrix whose columns span the kernel.
    """
    n = matrix.cols
    reduced, pivots = rref(matrix)
    free = [j for j in range(n) if j not in pivots]

    basis = zeros(n, len(free))
    for col, free_var in enumerate(free):
        basis[free_var, col] = 1
        for row, pivot in enumerate(pivots):
            basis[pivot, col] = -reduced[row, free_var]

    return basis


def rational_solve(matrix: sympy.Matrix, rhs: sympy.Matrix) -> t.Optional[sympy.Matrix]:
    """Solves ``matrix * X = rhs`` over Q, one column of X per column of ``rhs``. Free variables are set to 0.

    :return: The solution, or None if some column is inconsistent.
    """
    m, n = matrix.shape

    if n == 0:
        return zeros(0, rhs.cols) if rhs.is_zero_matrix else None

    if m == 0:
        return zeros(n, rhs.cols)

    reduced, pivots = rref(matrix.row_join(rhs))
    if any(pivot >= n for pivot in pivots):
        return None

    solution = zeros(n, rhs.cols)
    for row, pivot in enumerate(pivots):
        for col in range(rhs.cols):
            solution[pivot, col] = reduced[row, n + col]

    return solution


def as_int(value: t.Any) -> int:
    """Exact conversion of an integral scalar.

    :raises ValueError: Raised when the value is not an integer.
    """
    rational = sympy.Rational(value)
    if rational.q != 1:
        raise ValueError(f"{value} is not an integer.")

    return int(rational.p)


@dataclasses.dataclass(frozen=True)
class SmithForm:
    """Smith normal form ``left * A * right = diag(diagonal)`` of an integer matrix A.
    """

    #: Nonzero invariant factors, each dividing the next.
    diagonal: tuple[int, ...]

    #: Unimodular m×m row transform.
    left: sympy.Matrix

    #: Unimodular n×n column transform.
    right: sympy.Matrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.diagonal if d > 1]


def _identity(size: int) -> list[list[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def _swap_rows(rows: list[list[int]], i: int, j: int) -> None:
    rows[i], rows[j] = rows[j], rows[i]


def _swap_cols(rows: list[list[int]], i: int, j: int) -> None:
    for row in rows:
        row[i], row[j] = row[j], row[i]


def _add_row(rows: list[list[int]], target: int, source: int, factor: int) -> None:
    """row[target] += factor * row[source]"""
    src = rows[source]
    rows[target] = [a + factor * b for a, b in zip(rows[target], src)]


def _add_col(rows: list[list[int]], target: int, source: int, factor: int) -> None:
    """col[target] += factor * col[source]"""
    for row in rows:
        row[target] += factor * row[source]


def _move_least_to_start(a: list[list[int]], left: list[list[int]], right: list[list[int]], s: int) -> bool:
    best = None
    for i in range(s, len(a)):
        for j in range(s, len(a[i])):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = i, j

    if best is None:
        return False

    if best[0] != s:
        _swap_rows(a, s, best[0])
        _swap_rows(left, s, best[0])

    if best[1] != s:
        _swap_cols(a, s, best[1])
        _swap_cols(right, s, best[1])

    return True


def _reduce_edging(a: list[list[int]], left: list[list[int]], right: list[list[int]], s: int) -> None:
    pivot = a[s][s]

    for i in range(s + 1, len(a)):
        if q := a[i][s] // pivot:
            _add_row(a, i, s, -q)
            _add_row(left, i, s, -q)

    for j in range(s + 1, len(a[s])):
        if q := a[s][j] // pivot:
            _add_col(a, j, s, -q)
            _add_col(right, j, s, -q)


def _move_least_edging_to_start(a: list[list[int]], left: list[list[int]], right: list[list[int]], s: int) -> None:
    best, best_value = None, None

    for i in range(s + 1, len(a)):
        if a[i][s] and (best_value is None or abs(a[i][s]) < best_value):
            best, best_value = ('row', i), abs(a[i][s])

    for j in range(s + 1, len(a[s])):
        if a[s][j] and (best_value is None or abs(a[s][j]) < best_value):
            best, best_value = ('col', j), abs(a[s][j])

    match best:
        case ('row', i):
            _swap_rows(a, s, i)
            _swap_rows(left, s, i)
        case ('col', j):
            _swap_cols(a, s, j)
            _swap_cols(right, s, j)


def _edging_is_zero(a: list[list[int]], s: int) -> bool:
    return (all(a[i][s] == 0 for i in range(s + 1, len(a)))
            and all(a[s][j] == 0 for j in range(s + 1, len(a[s]))))


def _non_divisible_row(a: list[list[int]], s: int) -> t.Optional[int]:
    pivot = a[s][s]
    for i in range(s + 1, len(a)):
        if any(a[i][j] % pivot for j in range(s + 1, len(a[i]))):
            return i

    return None


def smith_normal_form(matrix: sympy.Matrix) -> SmithForm:
    """Smith normal form of an integer matrix with its transforms.

    :param matrix: Integer matrix.
    :raises ValueError: Raised when an entry is not an integer.
    :return: Invariant factors and unimodular transforms.
    """
    m, n = matrix.shape
    a = [[as_int(matrix[i, j]) for j in range(n)] for i in range(m)]
    left, right = _identity(m), _identity(n)
    diagonal = []

    for s in range(min(m, n)):
        if not _move_least_to_start(a, left, right, s):
            break

        while True:
            _reduce_edging(a, left, right, s)

            if not _edging_is_zero(a, s):
                _move_least_edging_to_start(a, left, right, s)
                continue

            if (row := _non_divisible_row(a, s)) is None:
                break

            _add_row(a, s, row, 1)
            _add_row(left, s, row, 1)

        if a[s][s] < 0:
            a[s] = [-v for v in a[s]]
            left[s] = [-v for v in left[s]]

        diagonal.append(a[s][s])

    return SmithForm(tuple(diagonal), sympy.Matrix(m, m, lambda i, j: left[i][j]),
                     sympy.Matrix(n, n, lambda i, j: right[i][j]))


def integer_kernel(matrix: sympy.Matrix) -> sympy.Matrix:
    """Basis of the integer kernel lattice. The lattice is saturated: an integer vector that is a rational
    combination of the columns is an integer combination of them.

    :return: n×k matrix of basis columns.
    """
    m, n = matrix.shape

    if m == 0:
        return sympy.eye(n)

    form = smith_normal_form(matrix)
    return form.right[:, form.rank:]


def integer_solve(matrix: sympy.Matrix, rhs: sympy.Matrix) -> t.Optional[sympy.Matrix]:
    """Solves ``matrix * X = rhs`` over Z, one column of X per column of ``rhs``.

    :return: An integral solution, or None if some column has none.
    """
    m, n = matrix.shape

    if n == 0:
        return zeros(0, rhs.cols) if rhs.is_zero_matrix else None

    if m == 0:
        return zeros(n, rhs.cols)

    form = smith_normal_form(matrix)
    moved = form.left * rhs
    reduced = zeros(n, rhs.cols)

    for col in range(rhs.cols):
        for i in range(m):
            value = as_int(moved[i, col])

            if i < form.rank:
                if value % form.diagonal[i]:
                    return None
                reduced[i, col] = value // form.diagonal[i]
            elif value:
                return None

    return form.right * reduced
