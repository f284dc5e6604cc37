# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the exact linear algebra kernels.

Same contracts as ``designideal._kernel_py``; entries remain arbitrary
Python scalars (rationals or cyclotomic numbers), the speedup comes from
compiled loop and indexing overhead in the innermost row operations.
"""

from designideal.errors import SingularMatrix


def first_nonzero(list vec):
    cdef Py_ssize_t i, n = len(vec)
    for i in range(n):
        if vec[i]:
            return i
    return -1


def scale_inplace(list vec, factor):
    cdef Py_ssize_t i, n = len(vec)
    cdef object v
    for i in range(n):
        v = vec[i]
        if v:
            vec[i] = v * factor


def reduce_against(list vec, list rows, list pivot_cols):
    cdef Py_ssize_t k, j, n, nrows = len(rows)
    cdef list row
    cdef list coeffs = []
    cdef object c, rj
    for k in range(nrows):
        c = vec[<Py_ssize_t> pivot_cols[k]]
        coeffs.append(c)
        if c:
            row = <list> rows[k]
            n = len(row)
            for j in range(n):
                rj = row[j]
                if rj:
                    vec[j] = vec[j] - c * rj
    return coeffs


def linear_combination(list coeffs, list rows, Py_ssize_t length, zero):
    cdef list out = [zero] * length
    cdef Py_ssize_t k, j, n, nrows = len(coeffs)
    cdef list row
    cdef object c, rj
    for k in range(nrows):
        c = coeffs[k]
        if c:
            row = <list> rows[k]
            n = len(row)
            for j in range(n):
                rj = row[j]
                if rj:
                    out[j] = out[j] + c * rj
    return out


def solve_unique(matrix, rhs, one):
    cdef Py_ssize_t n = len(matrix)
    cdef Py_ssize_t col, r, j, pivot
    cdef list aug = [list(matrix[r]) + [rhs[r]] for r in range(n)]
    cdef list row, target
    cdef object inv, c, rj
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if (<list> aug[r])[col]:
                pivot = r
                break
        if pivot < 0:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        row = <list> aug[col]
        inv = one / row[col]
        for j in range(col, n + 1):
            rj = row[j]
            if rj:
                row[j] = rj * inv
        for r in range(n):
            if r != col:
                target = <list> aug[r]
                c = target[col]
                if c:
                    for j in range(col, n + 1):
                        rj = row[j]
                        if rj:
                            target[j] = target[j] - c * rj
    return [(<list> aug[r])[n] for r in range(n)]


def invert(matrix, zero, one):
    cdef Py_ssize_t n = len(matrix)
    cdef Py_ssize_t col, r, j, pivot
    cdef list aug = []
    cdef list row, target
    cdef object inv, c, rj
    for r in range(n):
        row = list(matrix[r])
        for j in range(n):
            row.append(one if j == r else zero)
        aug.append(row)
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if (<list> aug[r])[col]:
                pivot = r
                break
        if pivot < 0:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        row = <list> aug[col]
        inv = one / row[col]
        for j in range(col, 2 * n):
            rj = row[j]
            if rj:
                row[j] = rj * inv
        for r in range(n):
            if r != col:
                target = <list> aug[r]
                c = target[col]
                if c:
                    for j in range(col, 2 * n):
                        rj = row[j]
                        if rj:
                            target[j] = target[j] - c * rj
    return [(<list> aug[r])[n:] for r in range(n)]


def rank(matrix):
    cdef list rows = [list(entry) for entry in matrix]
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef Py_ssize_t pivots = 0, row_at = 0
    cdef Py_ssize_t col, r, j, pivot
    cdef list prow, target
    cdef object pval, c, factor, pj
    for col in range(ncols):
        pivot = -1
        for r in range(row_at, nrows):
            if (<list> rows[r])[col]:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[row_at], rows[pivot] = rows[pivot], rows[row_at]
        prow = <list> rows[row_at]
        pval = prow[col]
        for r in range(row_at + 1, nrows):
            target = <list> rows[r]
            c = target[col]
            if c:
                factor = c / pval
                for j in range(col, ncols):
                    pj = prow[j]
                    if pj:
                        target[j] = target[j] - factor * pj
        pivots += 1
        row_at += 1
        if row_at == nrows:
            break
    return pivots
