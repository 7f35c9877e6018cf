"""Greedy basis reduction for positive definite Gram matrices of rank <= 3.

Works purely on integer coordinate rows relative to a fixed starting basis
whose Gram matrix is supplied; in rank <= 3 the greedy algorithm returns a
basis realizing the successive minima.  Closest-vector subproblems are in
dimension <= 2 and solved exactly: the real solution is computed with
rational arithmetic and a +-2 integer window around it is scanned, which is
sufficient once the smaller basis is itself reduced.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def _inner(gram, u, v) -> Fraction:
    total = Fraction(0)
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = gram[i]
        for j, vj in enumerate(v):
            if vj:
                total += ui * vj * row[j]
    return total


def _norm(gram, v) -> Fraction:
    return _inner(gram, v, v)


def _sub(u, v, c):
    return [a - c * b for a, b in zip(u, v)]


def _solve2(a11, a12, a22, b1, b2):
    det = a11 * a22 - a12 * a12
    return ((b1 * a22 - b2 * a12) / det, (b2 * a11 - b1 * a12) / det)


def _closest_coeffs(gram, head, target):
    """Integer coefficients of a closest vector to target in span(head), |head| <= 2."""
    if len(head) == 1:
        u = _inner(gram, target, head[0]) / _norm(gram, head[0])
        base = int(u.__floor__())
        best = None
        for c in range(base - 2, base + 3):
            diff = _sub(target, head[0], c)
            key = (_norm(gram, diff), (c,))
            if best is None or key < best[0]:
                best = (key, (c,))
        return best[1]
    u1, u2 = _solve2(
        _norm(gram, head[0]), _inner(gram, head[0], head[1]), _norm(gram, head[1]),
        _inner(gram, target, head[0]), _inner(gram, target, head[1]),
    )
    f1, f2 = int(u1.__floor__()), int(u2.__floor__())
    best = None
    for c1, c2 in product(range(f1 - 2, f1 + 3), range(f2 - 2, f2 + 3)):
        diff = _sub(_sub(target, head[0], c1), head[1], c2)
        key = (_norm(gram, diff), (c1, c2))
        if best is None or key < best[0]:
            best = (key, (c1, c2))
    return best[1]


def _sort_key(gram):
    def key(v):
        return (_norm(gram, v), tuple(v))
    return key


def _greedy(gram, vectors, d) -> None:
    if d <= 1:
        return
    key = _sort_key(gram)
    while True:
        vectors[:d] = sorted(vectors[:d], key=key)
        _greedy(gram, vectors, d - 1)
        head = vectors[:d - 1]
        coeffs = _closest_coeffs(gram, head, vectors[d - 1])
        reduced = vectors[d - 1]
        for c, h in zip(coeffs, head):
            reduced = _sub(reduced, h, c)
        if _norm(gram, reduced) < _norm(gram, vectors[d - 1]):
            vectors[d - 1] = reduced
        else:
            break


def greedy_reduce(gram) -> list[list[int]]:
    """Unimodular integer rows U such that U * gram * U^T is greedy-reduced.

    Rows are returned with nondecreasing norms.
    """
    d = len(gram)
    if d > 3:
        raise ValueError("greedy reduction is only implemented for rank <= 3")
    vectors = [[int(i == j) for j in range(d)] for i in range(d)]
    _greedy(gram, vectors, d)
    vectors.sort(key=_sort_key(gram))
    return vectors
