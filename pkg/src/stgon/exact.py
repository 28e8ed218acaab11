"""Exact rational linear algebra on small integer matrices."""

from __future__ import annotations

from fractions import Fraction


def _as_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(rows):
    """Reduced row echelon form over Q.

    Returns ``(R, pivots)`` with ``R`` a list of Fraction rows.
    """
    m = _as_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(row_echelon(rows)[1])


def solve_dependent(rows, free):
    """Express the non-free unknowns of ``rows @ x = 0`` through the free ones.

    ``free`` is a list of column indices.  Returns a dict mapping every column
    to a list of Fractions (coefficients over ``free``).  Raises ValueError
    when the free columns do not form a chart, i.e. when the remaining
    columns are not uniquely determined.
    """
    ncols = len(rows[0])
    free = list(free)
    dep = [c for c in range(ncols) if c not in free]
    # reorder columns so dependent unknowns are eliminated first
    order = dep + free
    permuted = [[row[c] for c in order] for row in rows]
    R, pivots = row_echelon(permuted)
    if pivots != list(range(len(dep))):
        raise ValueError("free coordinates do not parametrize the solution space")
    out = {}
    for k, c in enumerate(free):
        out[c] = [Fraction(int(i == k)) for i in range(len(free))]
    for r, c in enumerate(dep):
        out[c] = [-R[r][len(dep) + k] for k in range(len(free))]
    return out


def integer_inverse(mat):
    """Inverse of a unimodular integer matrix as nested int lists."""
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    R, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [[R[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]
