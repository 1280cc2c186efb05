"""Exact rational linear algebra on small sparse matrices.

Matrices are dicts mapping (row, col) -> nonzero Fraction/int.  Sizes here
are desk scale (a few thousand at most), so plain Gaussian elimination
over Fraction is exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction


def mat_mul(a: dict, b: dict) -> dict:
    """Product of sparse matrices given as {(r, c): value}."""
    by_row = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out = {}
    for (r, c), v in a.items():
        for c2, v2 in by_row.get(c, ()):
            key = (r, c2)
            s = out.get(key, 0) + v * v2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def mat_add(a: dict, b: dict, scalar=1) -> dict:
    out = dict(a)
    for key, v in b.items():
        s = out.get(key, 0) + scalar * v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def is_zero(a: dict) -> bool:
    return not a


def rank(entries: dict) -> int:
    """Rank over Q of a sparse matrix {(r, c): value}."""
    rows = {}
    for (r, c), v in entries.items():
        rows.setdefault(r, {})[c] = Fraction(v)
    work = [row for row in rows.values() if row]
    rk = 0
    while work:
        row = work.pop()
        if not row:
            continue
        pivot_col = min(row)
        pivot = row[pivot_col]
        rk += 1
        reduced = []
        for other in work:
            if pivot_col in other:
                factor = other[pivot_col] / pivot
                for c, v in row.items():
                    s = other.get(c, 0) - factor * v
                    if s:
                        other[c] = s
                    else:
                        other.pop(c, None)
            if other:
                reduced.append(other)
        work = reduced
    return rk
