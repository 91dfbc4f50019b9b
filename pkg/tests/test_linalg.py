from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibniz_kit.field import GF, QQ
from leibniz_kit.linalg import (
    DimensionMismatch,
    SingularMatrix,
    complement_vector,
    contains,
    coordinates,
    det,
    eigen_lines_2x2,
    full_space,
    identity,
    mat_inv,
    mat_mul,
    mat_vec,
    preimage,
    render,
    solve_right_kernel,
    span,
    subspace_eq,
    subspace_intersect,
    subspace_sum,
    vec,
    zero_space,
)
from leibniz_kit.oracle import elements_of

from conftest import matrices, prime_fields, vectors

F3 = GF(3)


def all_vectors(F, n):
    return [tuple(v) for v in product(range(F.p), repeat=n)]


class TestSpan:
    def test_examples(self):
        S = span(QQ, [vec(QQ, (1, 0, 0)), vec(QQ, (1, 1, 0))], 3)
        assert S.dim == 2 and S.basis == (vec(QQ, (1, 0, 0)), vec(QQ, (0, 1, 0)))
        assert span(QQ, [], 3).dim == 0
        assert span(GF(5), [(2, 4)], 2).basis == ((1, 2),)

    def test_length_checked(self):
        with pytest.raises(DimensionMismatch):
            span(QQ, [vec(QQ, (1, 0))], 3)

    @given(prime_fields(), st.data())
    def test_order_independent(self, F, data):
        vs = data.draw(st.lists(vectors(F, 3), max_size=4))
        perm = data.draw(st.permutations(vs))
        assert span(F, vs, 3) == span(F, perm, 3)

    @given(st.lists(vectors(F3, 3), max_size=4))
    def test_against_enumeration(self, vs):
        # the span is every combination of the generators
        combos = set()
        for cs in product(range(3), repeat=len(vs)):
            combos.add(tuple(sum(c * v[k] for c, v in zip(cs, vs)) % 3 for k in range(3)))
        combos.add((0, 0, 0))
        assert elements_of(span(F3, vs, 3)) == combos


class TestSubspaceOps:
    def test_examples(self):
        e = [vec(QQ, r) for r in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        assert not contains(span(QQ, [e[2]], 3), e[1])
        assert subspace_sum(span(QQ, [e[1]], 3), span(QQ, [e[2]], 3)).dim == 2
        meet = subspace_intersect(span(QQ, e[:2], 3), span(QQ, e[1:], 3))
        assert subspace_eq(meet, span(QQ, [e[1]], 3))

    @given(st.lists(vectors(F3, 3), max_size=3), st.lists(vectors(F3, 3), max_size=3))
    def test_intersection_oracle(self, a, b):
        S, T = span(F3, a, 3), span(F3, b, 3)
        assert elements_of(subspace_intersect(S, T)) == elements_of(S) & elements_of(T)

    @given(st.lists(vectors(F3, 3), max_size=3), st.lists(vectors(F3, 3), max_size=3))
    def test_dimension_formula(self, a, b):
        S, T = span(F3, a, 3), span(F3, b, 3)
        assert subspace_sum(S, T).dim + subspace_intersect(S, T).dim == S.dim + T.dim

    def test_complement_vector(self):
        S = span(QQ, [vec(QQ, (1, 0, 0)), vec(QQ, (0, 0, 1))], 3)
        assert complement_vector(S) == vec(QQ, (0, 1, 0))
        with pytest.raises(ValueError):
            complement_vector(full_space(QQ, 3))

    @given(prime_fields(), st.data())
    def test_coordinates(self, F, data):
        vs = data.draw(st.lists(vectors(F, 3), min_size=1, max_size=3))
        basis = span(F, vs, 3).basis
        cs = data.draw(st.lists(st.integers(0, F.p - 1), min_size=len(basis), max_size=len(basis)))
        v = tuple(sum(c * b[k] for c, b in zip(cs, basis)) % F.p for k in range(3))
        assert coordinates(F, v, basis) == tuple(cs)


class TestKernels:
    def test_examples(self):
        assert solve_right_kernel(QQ, [], 3) == full_space(QQ, 3)
        assert solve_right_kernel(QQ, identity(QQ, 3), 3) == zero_space(QQ, 3)
        assert solve_right_kernel(GF(2), [(1, 1)], 2).basis == ((1, 1),)

    @given(st.lists(vectors(F3, 3), max_size=4))
    def test_kernel_oracle(self, rows):
        K = solve_right_kernel(F3, rows, 3)
        brute = {x for x in all_vectors(F3, 3)
                 if all(sum(r[k] * x[k] for k in range(3)) % 3 == 0 for r in rows)}
        assert elements_of(K) == brute

    def test_preimage_examples(self):
        T = span(QQ, [vec(QQ, (1, 1, 0))], 3)
        assert preimage(QQ, identity(QQ, 3), T) == T
        zero = tuple(vec(QQ, (0, 0, 0)) for _ in range(3))
        assert preimage(QQ, zero, T) == full_space(QQ, 3)
        diag = (vec(QQ, (1, 0)), vec(QQ, (0, 0)))
        assert preimage(QQ, diag, zero_space(QQ, 2)) == span(QQ, [vec(QQ, (0, 1))], 2)

    @given(matrices(F3, 3), st.lists(vectors(F3, 3), max_size=2))
    def test_preimage_oracle(self, M, gens):
        T = span(F3, gens, 3)
        brute = {x for x in all_vectors(F3, 3) if contains(T, mat_vec(F3, M, x))}
        assert elements_of(preimage(F3, M, T)) == brute


class TestMatrices:
    @given(prime_fields(), st.data())
    def test_inverse(self, F, data):
        M = data.draw(matrices(F, 3))
        if det(F, M) == 0:
            with pytest.raises(SingularMatrix):
                mat_inv(F, M)
        else:
            assert mat_mul(F, M, mat_inv(F, M)) == identity(F, 3)

    @given(matrices(GF(5), 3), matrices(GF(5), 3))
    def test_det_multiplicative(self, A, B):
        F = GF(5)
        assert det(F, mat_mul(F, A, B)) == F.mul(det(F, A), det(F, B))


class TestEigenLines:
    def test_examples(self):
        lines = eigen_lines_2x2(((0, 1), (1, 0)), F3)
        assert [lam for lam, _ in lines] == [1, 2]
        (lam, E), = eigen_lines_2x2(identity(QQ, 2), QQ)
        assert lam == 1 and E.dim == 2
        assert eigen_lines_2x2(((QQ(0), QQ(-1)), (QQ(1), QQ(0))), QQ) == []

    def test_all_matrices_over_f5(self):
        F = GF(5)
        for a, b, c, d in product(range(5), repeat=4):
            M = ((a, b), (c, d))
            got = eigen_lines_2x2(M, F)
            brute = sorted(
                lam for lam in range(5)
                if any(mat_vec(F, M, v) == tuple(lam * x % 5 for x in v)
                       for v in all_vectors(F, 2) if v != (0, 0))
            )
            assert [lam for lam, _ in got] == brute
            for lam, E in got:
                for v in E.basis:
                    assert mat_vec(F, M, v) == tuple(lam * x % 5 for x in v)


class TestRender:
    def test_forms(self):
        assert render(span(QQ, [vec(QQ, (0, 1, 0)), vec(QQ, (0, 0, 1))], 3)) == "Fa₂⊕Fa₃"
        assert render(zero_space(QQ, 3)) == "⟨0⟩"
        assert render(full_space(QQ, 3)) == "L"
        assert render(span(QQ, [vec(QQ, (1, -1, 0))], 3)) == "F(a₁ - a₂)"
