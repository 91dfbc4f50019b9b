"""Structural invariants of a Leibniz algebra given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .algebra import (
    Algebra,
    bracket,
    is_lie,
    is_subalgebra,
    polarization_candidates,
    product_subspace,
)
from .linalg import (
    Subspace,
    full_space,
    preimage,
    solve_right_kernel,
    span,
    subspace_intersect,
    vcomb,
    zero_space,
)

NON_NILPOTENT = "non-nilpotent"
NON_SOLUBLE = "non-soluble"


class NotASubalgebra(ValueError):
    pass


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "upper_central" | "lower_central" | "derived"
    terms: tuple
    stabilized: bool
    stabilization_index: int


@dataclass(frozen=True)
class InvariantReport:
    leib: Subspace
    left_center: Subspace
    right_center: Subspace
    center: Subspace
    derived_sub: Subspace
    nilpotency: Union[int, str]
    soluble_depth: Union[int, str]
    is_lie: bool

    def signature(self) -> tuple:
        """Basis-free part of the report."""
        return (
            self.leib.dim,
            self.left_center.dim,
            self.right_center.dim,
            self.center.dim,
            self.derived_sub.dim,
            self.nilpotency,
            self.soluble_depth,
            self.is_lie,
        )


def leibniz_kernel(L: Algebra) -> Subspace:
    cands = polarization_candidates(L.field, L.dim)
    return span(L.field, (bracket(L, x, x) for x in cands), L.dim)


def _left_mult_rows(L: Algebra, j: int, k: int) -> tuple:
    """Row k of the matrix of x -> [x, e_j]."""
    return tuple(L.table[i][j][k] for i in range(L.dim))


def _right_mult_rows(L: Algebra, j: int, k: int) -> tuple:
    """Row k of the matrix of x -> [e_j, x]."""
    return tuple(L.table[j][i][k] for i in range(L.dim))


def left_center(L: Algebra) -> Subspace:
    n = L.dim
    rows = [_left_mult_rows(L, j, k) for j in range(n) for k in range(n)]
    return solve_right_kernel(L.field, rows, n)


def right_center(L: Algebra) -> Subspace:
    n = L.dim
    rows = [_right_mult_rows(L, j, k) for j in range(n) for k in range(n)]
    return solve_right_kernel(L.field, rows, n)


def center(L: Algebra) -> Subspace:
    return subspace_intersect(left_center(L), right_center(L))


def _stack_preimage(L: Algebra, Z: Subspace) -> Subspace:
    """{x : [x, e_j] in Z and [e_j, x] in Z for every j}."""
    F, n = L.field, L.dim
    out = full_space(F, n)
    for j in range(n):
        lm = tuple(_left_mult_rows(L, j, k) for k in range(n))
        rm = tuple(_right_mult_rows(L, j, k) for k in range(n))
        out = subspace_intersect(out, preimage(F, lm, Z))
        out = subspace_intersect(out, preimage(F, rm, Z))
    return out


def _chain(kind: str, first: Subspace, step) -> SeriesReport:
    terms = [first]
    # a strict chain in dimension n has at most n + 1 terms
    for _ in range(first.n + 1):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            terms.append(nxt)
            return SeriesReport(kind, tuple(terms), True, len(terms) - 2)
        terms.append(nxt)
    raise AssertionError("series failed to stabilize")


def upper_central_series(L: Algebra) -> SeriesReport:
    """Z_0 = 0, Z_{k+1} = preimage of the center of L/Z_k."""
    F, n = L.field, L.dim
    rep = _chain("upper_central", zero_space(F, n), lambda Z: _stack_preimage(L, Z))
    return rep


def lower_central_series(L: Algebra) -> SeriesReport:
    full = full_space(L.field, L.dim)
    return _chain("lower_central", full, lambda G: product_subspace(L, full, G))


def derived_series(L: Algebra) -> SeriesReport:
    full = full_space(L.field, L.dim)
    return _chain("derived", full, lambda D: product_subspace(L, D, D))


def is_nilpotent(L: Algebra) -> bool:
    return lower_central_series(L).terms[-1].is_zero()


def ncl(L: Algebra) -> Union[int, str]:
    """Class c with gamma_{c+1} = 0 and gamma_c != 0; the series starts at gamma_1."""
    terms = lower_central_series(L).terms
    if not terms[-1].is_zero():
        return NON_NILPOTENT
    return next(i for i, t in enumerate(terms) if t.is_zero())


def is_soluble(L: Algebra) -> bool:
    return derived_series(L).terms[-1].is_zero()


def soluble_depth(L: Algebra) -> Union[int, str]:
    terms = derived_series(L).terms
    if not terms[-1].is_zero():
        return NON_SOLUBLE
    return next(i for i, t in enumerate(terms) if t.is_zero())


def _annihilator(L: Algebra, H: Subspace, M: Subspace, left: bool) -> Subspace:
    if not is_subalgebra(L, H):
        raise NotASubalgebra("H is not a subalgebra")
    F, n = L.field, L.dim
    # coordinates c on the basis of H; a = sum c_i h_i must kill every m
    rows = []
    for m in M.basis:
        prods = [bracket(L, h, m) if left else bracket(L, m, h) for h in H.basis]
        rows += [tuple(p[k] for p in prods) for k in range(n)]
    ker = solve_right_kernel(F, rows, H.dim)
    return span(F, (vcomb(F, c, H.basis, n) for c in ker.basis), n)


def annihilator_left(L: Algebra, H: Subspace, M: Subspace) -> Subspace:
    return _annihilator(L, H, M, left=True)


def annihilator_right(L: Algebra, H: Subspace, M: Subspace) -> Subspace:
    return _annihilator(L, H, M, left=False)


def annihilator(L: Algebra, H: Subspace, M: Subspace) -> Subspace:
    return subspace_intersect(annihilator_left(L, H, M), annihilator_right(L, H, M))


def invariant_report(L: Algebra) -> InvariantReport:
    full = full_space(L.field, L.dim)
    lc, rc = left_center(L), right_center(L)
    return InvariantReport(
        leib=leibniz_kernel(L),
        left_center=lc,
        right_center=rc,
        center=subspace_intersect(lc, rc),
        derived_sub=product_subspace(L, full, full),
        nilpotency=ncl(L),
        soluble_depth=soluble_depth(L),
        is_lie=is_lie(L),
    )


def expected_fields() -> tuple[str, ...]:
    return ("leib", "left_center", "right_center", "center", "derived_sub", "nilpotency")


def compare_reports(actual: InvariantReport, expected: dict) -> dict:
    """Fields of ``expected`` whose value differs from ``actual``."""
    return {
        k: (getattr(actual, k), v) for k, v in expected.items() if getattr(actual, k) != v
    }


def kernel_squares_in_left_center(L: Algebra, lc: Optional[Subspace] = None) -> bool:
    lc = lc if lc is not None else left_center(L)
    return all(bracket(L, x, x) in lc for x in polarization_candidates(L.field, L.dim))
