"""Exhaustive checks over small prime fields.

These enumerate every vector of F_p^n and never touch row reduction, so they
serve as an independent check on the linear-algebra routines.
"""

from __future__ import annotations

from itertools import product

from .algebra import Algebra, bracket
from .linalg import Subspace, is_zero

MAX_POINTS = 27


def _points(L: Algebra):
    F = L.field
    if not F.is_finite:
        raise ValueError("enumeration needs a finite field")
    if F.p ** L.dim > MAX_POINTS * 8:
        raise ValueError("field too large to enumerate")
    return [tuple(v) for v in product(range(F.p), repeat=L.dim)]


def brute_kernel(L: Algebra) -> set:
    pts = _points(L)
    sq = {bracket(L, x, x) for x in pts}
    # the kernel is the span of the squares; close the set under addition
    closed = set(sq)
    frontier = list(sq)
    F = L.field
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                s = tuple(F.add(x, y) for x, y in zip(a, b))
                if s not in closed:
                    closed.add(s)
                    new.append(s)
        frontier = new
    return closed


def brute_left_center(L: Algebra) -> set:
    pts = _points(L)
    return {x for x in pts if all(is_zero(bracket(L, x, y)) for y in pts)}


def brute_right_center(L: Algebra) -> set:
    pts = _points(L)
    return {x for x in pts if all(is_zero(bracket(L, y, x)) for y in pts)}


def brute_center(L: Algebra) -> set:
    return brute_left_center(L) & brute_right_center(L)


def elements_of(S: Subspace) -> set:
    """Every vector of a subspace over a finite field."""
    F = S.field
    out = set()
    for coeffs in product(range(F.p), repeat=S.dim):
        v = [0] * S.n
        for c, b in zip(coeffs, S.basis):
            v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
        out.add(tuple(v))
    return out
