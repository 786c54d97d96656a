"""Dense exact linear algebra over a coefficient field (small matrices)."""

from __future__ import annotations


def _rref(rows, ncols, field):
    """Row-reduce in place; returns (rref rows, pivot column list)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != field.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != field.zero:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat, field):
    if not mat or not mat[0]:
        return 0
    reduced, pivots = _rref(mat, len(mat[0]), field)
    return len(pivots)


def nullspace(mat, ncols, field):
    """Basis of the right kernel of a matrix given as a list of rows."""
    if not mat:
        return [[field.one if i == j else field.zero for i in range(ncols)]
                for j in range(ncols)]
    reduced, pivots = _rref(mat, ncols, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for ri, pc in enumerate(pivots):
            v[pc] = -reduced[ri][fc]
        basis.append(v)
    return basis


def solve(mat, rhs, field):
    """One solution x of mat @ x = rhs, or None.  mat: rows; rhs: column."""
    if not mat:
        return None
    ncols = len(mat[0])
    aug = [list(r) + [b] for r, b in zip(mat, rhs)]
    reduced, pivots = _rref(aug, ncols + 1, field)
    if ncols in pivots:
        return None  # inconsistent
    x = [field.zero] * ncols
    for ri, pc in enumerate(pivots):
        x[pc] = reduced[ri][ncols]
    return x


def matmul(a, b, field):
    n = len(a)
    k = len(b)
    m = len(b[0]) if b else 0
    out = [[field.zero] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = field.zero
            for t in range(k):
                s = s + a[i][t] * b[t][j]
            out[i][j] = s
    return out
