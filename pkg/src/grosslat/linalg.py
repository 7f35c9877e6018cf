"""Exact integer and rational linear algebra for small (rank <= 4) problems."""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3):
        if n % q == 0:
            return n == q
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"no prime factor of {n}")
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _echelon_hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row HNF with leading pivots: pivots positive, entries above a pivot
    reduced into [0, pivot), rows ordered by pivot column."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    pivots: list[tuple[int, int]] = []  # (col, row index in result)
    top = 0
    for col in range(ncols):
        sel = None
        for i in range(top, len(work)):
            if work[i][col]:
                sel = i
                break
        if sel is None:
            continue
        work[top], work[sel] = work[sel], work[top]
        for i in range(top + 1, len(work)):
            if work[i][col]:
                a, b = work[top][col], work[i][col]
                g, u, v = xgcd(a, b)
                aa, bb = a // g, b // g
                r0, r1 = work[top], work[i]
                work[top] = [u * x + v * y for x, y in zip(r0, r1)]
                work[i] = [-bb * x + aa * y for x, y in zip(r0, r1)]
        if work[top][col] < 0:
            work[top] = [-x for x in work[top]]
        pivots.append((col, top))
        top += 1
    result = [work[i] for i in range(top)]
    for col, ri in pivots:
        piv = result[ri][col]
        for j in range(ri):
            q = result[j][col] // piv
            if q:
                result[j] = [x - q * y for x, y in zip(result[j], result[ri])]
    return result


def hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row HNF in the trailing-pivot (lower-triangular) convention.

    Each row's pivot is its last nonzero entry; pivots are positive, sit in
    strictly increasing columns, and the entries below a pivot in its column
    are reduced into [0, pivot).  Zero rows are dropped.
    """
    if not rows:
        return []
    rev = [list(reversed(r)) for r in rows]
    ech = _echelon_hnf(rev)
    return [list(reversed(r)) for r in reversed(ech)]


def hnf_pivot_product(rows: list[list[int]]) -> int:
    """Product of the HNF pivots of an integer matrix (its lattice covolume)."""
    out = 1
    for r in hnf_rows(rows):
        piv = 0
        for x in r:
            if x:
                piv = x
        out *= piv
    return out


def det_fractions(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant of a square matrix by exact Gaussian elimination."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        sel = None
        for i in range(col, n):
            if m[i][col] != 0:
                sel = i
                break
        if sel is None:
            return Fraction(0)
        if sel != col:
            m[col], m[sel] = m[sel], m[col]
            det = -det
        piv = m[col][col]
        det *= piv
        inv = 1 / piv
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det


def rational_rank(rows: list[list[Fraction]]) -> int:
    work = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        piv = work[rank][col]
        for i in range(rank + 1, len(work)):
            if work[i][col] != 0:
                f = work[i][col] / piv
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank


def solve_left(rows: list[list[Fraction]], target: list[Fraction]) -> tuple[Fraction, ...] | None:
    """Solve sum_i c_i * rows[i] = target exactly.

    Returns the coefficient tuple, or None when the system is inconsistent.
    Free coefficients (dependent rows) are set to zero; callers relying on
    uniqueness should pass independent rows.
    """
    m = len(rows)
    if m == 0:
        return () if not any(target) else None
    n = len(target)
    aug = [[Fraction(rows[i][j]) for i in range(m)] + [Fraction(target[j])] for j in range(n)]
    piv_cols: list[int] = []
    top = 0
    for col in range(m):
        sel = None
        for i in range(top, n):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        aug[top], aug[sel] = aug[sel], aug[top]
        piv = aug[top][col]
        aug[top] = [v / piv for v in aug[top]]
        for i in range(n):
            if i != top and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[top])]
        piv_cols.append(col)
        top += 1
    for i in range(top, n):
        if aug[i][m] != 0:
            return None
    coeffs = [Fraction(0)] * m
    for idx, col in enumerate(piv_cols):
        coeffs[col] = aug[idx][m]
    return tuple(coeffs)
