"""Small exact linear algebra kit.

Generic over any exact field type supporting +, -, *, /, bool (Fraction and
FieldElem both qualify); matrices are lists of lists, never mutated in place.
Integer determinants use fraction-free Bareiss elimination.
"""

from __future__ import annotations


def int_det(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    m = [row[:] for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def echelon(mat, zero):
    """Reduced row echelon form.

    Returns (pivot_columns, rows); rows are fully reduced (pivots = 1, zeros
    above and below).  Column order is the given order, so greedy pivot
    selection is leftmost-first.
    """
    rows = [row[:] for row in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots, rows


def rank(mat, zero) -> int:
    if not mat:
        return 0
    return len(echelon(mat, zero)[0])


def kernel_basis(mat, zero, one):
    """Basis of the right kernel {x : mat . x = 0}, one vector per free column."""
    if not mat:
        return []
    ncols = len(mat[0])
    pivots, rows = echelon(mat, zero)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def invert(mat, zero, one):
    """Inverse of a square matrix; raises ArithmeticError if singular."""
    n = len(mat)
    aug = [list(mat[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    pivots, rows = echelon(aug, zero)
    if pivots[:n] != list(range(n)):
        raise ArithmeticError("singular matrix")
    return [row[n:] for row in rows]


def solve_square(mat, rhs, zero, one):
    """Solve mat . x = rhs for square invertible mat; rhs is a vector."""
    n = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(n)]
    pivots, rows = echelon(aug, zero)
    if pivots[:n] != list(range(n)):
        raise ArithmeticError("singular system")
    return [rows[i][n] for i in range(n)]


def mat_mul(a, b, zero):
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), zero)
         for j in range(len(b[0]))]
        for i in range(len(a))
    ]
