"""Exact dense linear algebra in small dimension.

Vectors are tuples of scalars.  Every subspace is stored by its reduced row
echelon basis, so subspace equality is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Field, Scalar, quad_roots

Vector = tuple
Matrix = tuple  # tuple of row Vectors


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def vec(F: Field, coords: Iterable) -> Vector:
    return tuple(F(c) for c in coords)


def zero_vec(F: Field, n: int) -> Vector:
    return (F.zero,) * n


def unit_vec(F: Field, n: int, i: int) -> Vector:
    return tuple(F.one if k == i else F.zero for k in range(n))


def vadd(F: Field, x: Vector, y: Vector) -> Vector:
    return tuple(F.add(a, b) for a, b in zip(x, y))


def vsub(F: Field, x: Vector, y: Vector) -> Vector:
    return tuple(F.sub(a, b) for a, b in zip(x, y))


def vscale(F: Field, c: Scalar, x: Vector) -> Vector:
    return tuple(F.mul(c, a) for a in x)


def vcomb(F: Field, coeffs: Sequence[Scalar], vs: Sequence[Vector], n: int) -> Vector:
    out = zero_vec(F, n)
    for c, v in zip(coeffs, vs):
        if c != 0:
            out = vadd(F, out, vscale(F, c, v))
    return out


def is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


def dot(F: Field, x: Vector, y: Vector) -> Scalar:
    s = F.zero
    for a, b in zip(x, y):
        s = F.add(s, F.mul(a, b))
    return s


def mat_vec(F: Field, M: Matrix, x: Vector) -> Vector:
    return tuple(dot(F, row, x) for row in M)


def vec_mat(F: Field, x: Vector, M: Matrix) -> Vector:
    """Row vector times matrix."""
    n = len(M[0]) if M else 0
    return vcomb(F, x, M, n)


def mat_mul(F: Field, A: Matrix, B: Matrix) -> Matrix:
    return tuple(vec_mat(F, row, B) for row in A)


def identity(F: Field, n: int) -> Matrix:
    return tuple(unit_vec(F, n, i) for i in range(n))


def rref(F: Field, rows: Iterable[Vector], n: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != n:
            raise DimensionMismatch(f"expected length {n}, got {len(r)}")
    pivots: list[int] = []
    top = 0
    for col in range(n):
        piv = next((i for i in range(top, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        inv = F.inv(m[top][col])
        m[top] = [F.mul(inv, a) for a in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col] != 0:
                f = m[i][col]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
    return tuple(tuple(r) for r in m[:top]), pivots


def mat_inv(F: Field, M: Matrix) -> Matrix:
    n = len(M)
    aug = [tuple(row) + unit_vec(F, n, i) for i, row in enumerate(M)]
    R, piv = rref(F, aug, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise SingularMatrix("matrix is not invertible")
    return tuple(r[n:] for r in R)


def det(F: Field, M: Matrix) -> Scalar:
    n = len(M)
    m = [list(r) for r in M]
    d = F.one
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return F.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            d = F.neg(d)
        d = F.mul(d, m[col][col])
        inv = F.inv(m[col][col])
        for i in range(col + 1, n):
            f = F.mul(m[i][col], inv)
            if f != 0:
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[col])]
    return d


@dataclass(frozen=True)
class Subspace:
    field: Field
    n: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.n

    def __contains__(self, v: Vector) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return all(contains(other, v) for v in self.basis)

    def __str__(self) -> str:
        return render(self)


def span(F: Field, vs: Iterable[Vector], n: int) -> Subspace:
    basis, _ = rref(F, vs, n)
    return Subspace(F, n, basis)


def zero_space(F: Field, n: int) -> Subspace:
    return Subspace(F, n, ())


def full_space(F: Field, n: int) -> Subspace:
    return Subspace(F, n, identity(F, n))


def _check(S: Subspace, T: Subspace) -> None:
    if S.n != T.n or S.field != T.field:
        raise DimensionMismatch("subspaces live in different spaces")


def contains(S: Subspace, v: Vector) -> bool:
    if len(v) != S.n:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient {S.n}")
    F = S.field
    _, piv = rref(F, S.basis, S.n)
    r = list(v)
    for row, col in zip(S.basis, piv):
        if r[col] != 0:
            f = r[col]
            r = [F.sub(a, F.mul(f, b)) for a, b in zip(r, row)]
    return all(a == 0 for a in r)


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _check(S, T)
    return span(S.field, S.basis + T.basis, S.n)


def subspace_intersect(S: Subspace, T: Subspace) -> Subspace:
    _check(S, T)
    F, n = S.field, S.n
    # x = sum a_i s_i = sum b_j t_j; solve for (a, b) and map back through S
    rows = [tuple(s[k] for s in S.basis) + tuple(F.neg(t[k]) for t in T.basis) for k in range(n)]
    ker = solve_right_kernel(F, rows, S.dim + T.dim)
    return span(F, (vcomb(F, k[: S.dim], S.basis, n) for k in ker.basis), n)


def subspace_eq(S: Subspace, T: Subspace) -> bool:
    _check(S, T)
    return S.basis == T.basis


def solve_right_kernel(F: Field, rows: Iterable[Vector], n: int) -> Subspace:
    """All x with row . x = 0 for every row."""
    R, piv = rref(F, rows, n)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [F.zero] * n
        x[f] = F.one
        for row, col in zip(R, piv):
            x[col] = F.neg(row[f])
        basis.append(tuple(x))
    return span(F, basis, n)


def preimage(F: Field, M: Matrix, T: Subspace) -> Subspace:
    """{x : M x in T} for a square matrix M given by rows."""
    n = T.n
    if len(M) != n or any(len(r) != n for r in M):
        raise DimensionMismatch("map and target disagree on dimension")
    # M x in T  iff  every functional vanishing on T kills M x
    ann = solve_right_kernel(F, T.basis, n)
    rows = [vec_mat(F, f, M) for f in ann.basis]
    return solve_right_kernel(F, rows, n)


def complement_vector(S: Subspace) -> Vector:
    """First standard basis vector outside S."""
    F = S.field
    for i in range(S.n):
        e = unit_vec(F, S.n, i)
        if not contains(S, e):
            return e
    raise ValueError("subspace is the whole space")


def coordinates(F: Field, v: Vector, basis: Sequence[Vector]) -> tuple:
    """Coordinates of v in a linearly independent list, or raise ValueError."""
    n = len(v)
    k = len(basis)
    rows = [tuple(b[i] for b in basis) + (v[i],) for i in range(n)]
    R, piv = rref(F, rows, k + 1)
    if k in piv:
        raise ValueError("vector not in span")
    out = [F.zero] * k
    for row, col in zip(R, piv):
        out[col] = row[k]
    return tuple(out)


def eigen_lines_2x2(M: Matrix, F: Field) -> list[tuple[Scalar, Subspace]]:
    """Eigenvalues of a 2x2 matrix in F with their eigenspaces.

    The eigenvalues come out in the order :func:`quad_roots` gives them; a
    scalar matrix yields one eigenvalue with the whole plane.
    """
    (a, b), (c, d) = M
    tr = F.add(a, d)
    dt = F.sub(F.mul(a, d), F.mul(b, c))
    out = []
    for lam in quad_roots(F.neg(tr), dt, F):
        shifted = ((F.sub(a, lam), b), (c, F.sub(d, lam)))
        out.append((lam, solve_right_kernel(F, shifted, 2)))
    return out


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def render_vector(F: Field, v: Vector, labels: Sequence[str] | None = None) -> str:
    labels = labels or [f"a{i + 1}".translate(_SUB) for i in range(len(v))]
    terms = []
    for c, lab in zip(v, labels):
        if c == 0:
            continue
        s = F.format(c)
        if s == "1":
            terms.append(lab)
        elif s == "-1":
            terms.append("-" + lab)
        else:
            terms.append(f"({s}){lab}" if "/" in s or s.startswith("-") else f"{s}{lab}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def render(S: Subspace, labels: Sequence[str] | None = None) -> str:
    """Render in the usual notation, e.g. ``Fa₂⊕Fa₃`` or ``⟨0⟩``."""
    if S.is_zero():
        return "⟨0⟩"
    if S.is_full():
        return "L"
    parts = []
    for v in S.basis:
        r = render_vector(S.field, v, labels)
        parts.append("F" + r if " " not in r else f"F({r})")
    return "⊕".join(parts)
