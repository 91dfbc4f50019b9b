"""Structure-constant presentations of (left) Leibniz algebras."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Iterable, Optional, Sequence

from .field import Field
from .linalg import (
    DimensionMismatch,
    Matrix,
    SingularMatrix,
    Subspace,
    Vector,
    contains,
    det,
    is_zero,
    mat_inv,
    span,
    unit_vec,
    vadd,
    vec_mat,
    vscale,
    vsub,
    zero_vec,
)

__all__ = [
    "Algebra",
    "NotAnIdeal",
    "SingularMatrix",
    "apply_basis_change",
    "bracket",
    "check_leibniz",
    "generated_subalgebra",
    "is_ideal",
    "is_left_ideal",
    "is_lie",
    "is_right_ideal",
    "is_subalgebra",
    "polarization_candidates",
    "product_subspace",
    "quotient_abelian_test",
]


class NotAnIdeal(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    """``table[i][j]`` holds the coordinates of ``[e_i, e_j]``."""

    field: Field
    dim: int
    table: tuple
    labels: Optional[tuple] = dc_field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dimension must be at least 1")
        ok = len(self.table) == n and all(
            len(row) == n and all(len(v) == n for v in row) for row in self.table
        )
        if not ok:
            raise DimensionMismatch(f"table is not {n}x{n}x{n}")
        if self.labels is not None and len(self.labels) != n:
            raise DimensionMismatch("wrong number of basis labels")

    @classmethod
    def from_brackets(
        cls,
        F: Field,
        n: int,
        brackets: dict,
        labels: Optional[Sequence[str]] = None,
    ) -> "Algebra":
        """Build from a sparse ``{(i, j): coords}`` map with 0-based indices."""
        table = [[zero_vec(F, n) for _ in range(n)] for _ in range(n)]
        for (i, j), coords in brackets.items():
            table[i][j] = tuple(F(c) for c in coords)
        return cls(F, n, tuple(tuple(r) for r in table), tuple(labels) if labels else None)

    @classmethod
    def abelian(cls, F: Field, n: int) -> "Algebra":
        return cls.from_brackets(F, n, {})

    def basis_vector(self, i: int) -> Vector:
        return unit_vec(self.field, self.dim, i)

    def sparse(self) -> dict:
        return {
            (i, j): self.table[i][j]
            for i in range(self.dim)
            for j in range(self.dim)
            if not is_zero(self.table[i][j])
        }


def bracket(L: Algebra, x: Vector, y: Vector) -> Vector:
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatch("vector length differs from algebra dimension")
    F = L.field
    out = zero_vec(F, L.dim)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            out = vadd(F, out, vscale(F, F.mul(xi, yj), L.table[i][j]))
    return out


def _identity_sides(L: Algebra, i: int, j: int, k: int) -> tuple[Vector, Vector]:
    F = L.field
    e = L.basis_vector
    lhs = bracket(L, L.table[i][j], e(k))
    rhs = vsub(F, bracket(L, e(i), L.table[j][k]), bracket(L, e(j), L.table[i][k]))
    return lhs, rhs


def leibniz_defect(L: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """[[x,y],z] - [x,[y,z]] + [y,[x,z]]; zero everywhere iff L is Leibniz."""
    F = L.field
    lhs = bracket(L, bracket(L, x, y), z)
    rhs = vsub(F, bracket(L, x, bracket(L, y, z)), bracket(L, y, bracket(L, x, z)))
    return vsub(F, lhs, rhs)


def check_leibniz(L: Algebra) -> Optional[tuple[int, int, int]]:
    """First 1-based basis triple violating the left Leibniz identity, or None.

    Both sides are trilinear, so basis triples decide the identity.
    """
    n = L.dim
    for i, j, k in product(range(n), repeat=3):
        lhs, rhs = _identity_sides(L, i, j, k)
        if lhs != rhs:
            return (i + 1, j + 1, k + 1)
    return None


def identity_sides(L: Algebra, triple: tuple[int, int, int]) -> tuple[Vector, Vector]:
    i, j, k = (t - 1 for t in triple)
    return _identity_sides(L, i, j, k)


def polarization_candidates(F: Field, n: int) -> list[Vector]:
    """e_i, then e_i + e_j for i < j.

    [x,x] expands as a combination of [e_i,e_i] and [e_i,e_j]+[e_j,e_i], and
    each of those is a signed sum of squares of these candidates.
    """
    es = [unit_vec(F, n, i) for i in range(n)]
    return es + [vadd(F, es[i], es[j]) for i in range(n) for j in range(i + 1, n)]


def is_lie(L: Algebra) -> bool:
    return all(is_zero(bracket(L, x, x)) for x in polarization_candidates(L.field, L.dim))


def product_subspace(L: Algebra, A: Subspace, B: Subspace) -> Subspace:
    if A.n != L.dim or B.n != L.dim:
        raise DimensionMismatch("subspace not in the algebra")
    return span(L.field, (bracket(L, a, b) for a in A.basis for b in B.basis), L.dim)


def _full(L: Algebra) -> Subspace:
    return span(L.field, (L.basis_vector(i) for i in range(L.dim)), L.dim)


def _inside(L: Algebra, A: Subspace, B: Subspace, S: Subspace) -> bool:
    return all(contains(S, bracket(L, a, b)) for a in A.basis for b in B.basis)


def is_subalgebra(L: Algebra, S: Subspace) -> bool:
    return _inside(L, S, S, S)


def is_left_ideal(L: Algebra, S: Subspace) -> bool:
    return is_subalgebra(L, S) and _inside(L, _full(L), S, S)


def is_right_ideal(L: Algebra, S: Subspace) -> bool:
    return is_subalgebra(L, S) and _inside(L, S, _full(L), S)


def is_ideal(L: Algebra, S: Subspace) -> bool:
    return is_left_ideal(L, S) and is_right_ideal(L, S)


def generated_subalgebra(L: Algebra, gens: Iterable[Vector]) -> Subspace:
    F, n = L.field, L.dim
    S = span(F, gens, n)
    while True:
        T = span(F, S.basis + product_subspace(L, S, S).basis, n)
        if T.dim == S.dim:
            return S
        S = T


def quotient_abelian_test(L: Algebra, I: Subspace) -> bool:
    if not is_ideal(L, I):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    full = _full(L)
    return _inside(L, full, full, I)


def apply_basis_change(L: Algebra, P: Matrix) -> Algebra:
    """Rewrite L in the basis given by the rows of P (old coordinates)."""
    F, n = L.field, L.dim
    if len(P) != n or any(len(r) != n for r in P):
        raise DimensionMismatch("basis change has the wrong size")
    if det(F, P) == 0:
        raise SingularMatrix("basis change is singular")
    Pinv = mat_inv(F, P)
    table = tuple(
        tuple(vec_mat(F, bracket(L, P[i], P[j]), Pinv) for j in range(n)) for i in range(n)
    )
    return Algebra(F, n, table, L.labels)
