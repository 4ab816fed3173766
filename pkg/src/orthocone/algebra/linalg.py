"""Exact linear algebra used as independent oracles: sparse rank and determinants."""

from __future__ import annotations


def rank(rows: list[dict], field) -> int:
    """Rank of a sparse matrix given as ``{column: value}`` rows.

    Incremental echelon form: each row is reduced against the pivots found so
    far, always eliminating its largest column.
    """
    norm = field.norm
    inv = field.inv
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {c: field(v) for c, v in row.items() if v != 0}
        r = {c: v for c, v in r.items() if v != 0}
        while r:
            c = max(r)
            piv = pivots.get(c)
            if piv is None:
                scale = inv(r[c])
                pivots[c] = {k: norm(v * scale) for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                s = norm(r.get(k, 0) - f * v)
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
    return len(pivots)


def determinant(matrix, field):
    """Determinant by Gaussian elimination over ``field``."""
    n = len(matrix)
    if n == 0:
        return field(1)
    a = [[field(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    norm = field.norm
    det = field(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return field(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = norm(-det)
        det = norm(det * a[k][k])
        inv = field.inv(a[k][k])
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = norm(a[i][k] * inv)
            row_k = a[k]
            row_i = a[i]
            for j in range(k, n):
                row_i[j] = norm(row_i[j] - f * row_k[j])
    return det
