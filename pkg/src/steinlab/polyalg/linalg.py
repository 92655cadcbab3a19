"""Exact rank over QQ by fraction-free (Bareiss) elimination."""

from math import lcm

from .poly import as_rat


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [as_rat(v) for v in row]
        den = lcm(*(int(v.denominator) for v in row)) if row else 1
        out.append([int(v * den) for v in row])
    return out


def rank(rows):
    """Rank of a rational matrix given as a list of rows."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, nrows):
            a = m[i][col]
            m[i] = [(p * m[i][j] - a * m[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def nullspace(rows, ncols=None):
    """Basis of the right kernel of a rational matrix (reduced echelon form)."""
    m = [[as_rat(v) for v in row] for row in rows]
    ncols = len(m[0]) if m else (ncols or 0)
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                a = m[i][col]
                m[i] = [x - a * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [as_rat(0)] * ncols
        vec[free] = as_rat(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][free]
        basis.append(vec)
    return basis
