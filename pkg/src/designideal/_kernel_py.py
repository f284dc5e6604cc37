"""Pure-Python exact linear algebra kernels.

Vectors and matrices are Python lists of exact field scalars (rationals or
cyclotomic numbers). These loops dominate the runtime of the point-ideal and
representation-switching computations; a compiled twin lives in
``_speedups`` and either implementation may be selected at import time.
"""

from .errors import SingularMatrix


def first_nonzero(vec):
    """Index of the first nonzero entry, or -1."""
    for i, v in enumerate(vec):
        if v:
            return i
    return -1


def scale_inplace(vec, factor):
    for i, v in enumerate(vec):
        if v:
            vec[i] = v * factor


def reduce_against(vec, rows, pivot_cols):
    """Eliminate ``vec`` in place against normalized pivot rows.

    ``rows[k]`` must hold value 1 at column ``pivot_cols[k]`` and zeros at the
    pivot columns of all earlier rows. Returns the elimination coefficients,
    one per row.
    """
    coeffs = []
    for k, row in enumerate(rows):
        c = vec[pivot_cols[k]]
        coeffs.append(c)
        if c:
            for j, rj in enumerate(row):
                if rj:
                    vec[j] = vec[j] - c * rj
    return coeffs


def linear_combination(coeffs, rows, length, zero):
    """Sum of ``coeffs[k] * rows[k]`` as a vector of the given length.

    Rows shorter than ``length`` are padded with zeros on the right.
    """
    out = [zero] * length
    for c, row in zip(coeffs, rows):
        if c:
            for j, rj in enumerate(row):
                if rj:
                    out[j] = out[j] + c * rj
    return out


def solve_unique(matrix, rhs, one):
    """Solve a square exact linear system with a unique solution.

    Raises SingularMatrix when the matrix does not have full rank.
    """
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if aug[r][col]:
                pivot = r
                break
        if pivot < 0:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = one / aug[col][col]
        row = aug[col]
        for j in range(col, n + 1):
            if row[j]:
                row[j] = row[j] * inv
        for r in range(n):
            if r != col:
                c = aug[r][col]
                if c:
                    target = aug[r]
                    for j in range(col, n + 1):
                        if row[j]:
                            target[j] = target[j] - c * row[j]
    return [aug[i][n] for i in range(n)]


def invert(matrix, zero, one):
    """Exact inverse of a square matrix as a list of rows."""
    n = len(matrix)
    aug = [list(row) + [one if j == i else zero for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if aug[r][col]:
                pivot = r
                break
        if pivot < 0:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = one / aug[col][col]
        row = aug[col]
        for j in range(col, 2 * n):
            if row[j]:
                row[j] = row[j] * inv
        for r in range(n):
            if r != col:
                c = aug[r][col]
                if c:
                    target = aug[r]
                    for j in range(col, 2 * n):
                        if row[j]:
                            target[j] = target[j] - c * row[j]
    return [aug[i][n:] for i in range(n)]


def rank(matrix):
    """Exact rank by Gaussian elimination; the input is not modified."""
    rows = [list(r) for r in matrix]
    pivots = 0
    ncols = len(rows[0]) if rows else 0
    row_at = 0
    for col in range(ncols):
        pivot = -1
        for r in range(row_at, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[row_at], rows[pivot] = rows[pivot], rows[row_at]
        prow = rows[row_at]
        pval = prow[col]
        for r in range(row_at + 1, len(rows)):
            c = rows[r][col]
            if c:
                factor = c / pval
                target = rows[r]
                for j in range(col, ncols):
                    if prow[j]:
                        target[j] = target[j] - factor * prow[j]
        pivots += 1
        row_at += 1
        if row_at == len(rows):
            break
    return pivots
