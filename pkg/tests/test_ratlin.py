from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blfsig import ratlin
from conftest import random_int_matrix, random_symmetric, random_unimodular, signature_oracle


class TestSignature:
    def test_single_positive_entry(self):
        assert ratlin.signature_of_symmetric([[2]]) == 1

    def test_mixed_diagonal(self):
        assert ratlin.signature_of_symmetric([[1, 0], [0, -3]]) == 0

    def test_hyperbolic_pair(self):
        # eigenvalues +-1 by hand
        assert ratlin.signature_of_symmetric([[0, 1], [1, 0]]) == 0

    def test_definite(self):
        assert ratlin.signature_of_symmetric([[-1, 0], [0, -1]]) == -2
        assert ratlin.signature_of_symmetric(ratlin.identity(5)) == 5

    def test_fractional_entries(self):
        M = [[F(1, 2), F(1, 3)], [F(1, 3), F(-5, 7)]]
        assert ratlin.signature_of_symmetric(M) == signature_oracle(M)

    def test_rejects_nonsquare(self):
        with pytest.raises(ratlin.ShapeError):
            ratlin.signature_of_symmetric([[1, 0]])

    def test_rejects_asymmetric(self):
        with pytest.raises(ratlin.ShapeError):
            ratlin.signature_of_symmetric([[0, 1], [2, 0]])

    def test_congruence_invariance(self, rng):
        for _ in range(60):
            n = rng.randint(1, 8)
            M = random_symmetric(rng, n)
            P = random_unimodular(rng, n)
            assert ratlin.signature_of_symmetric(P @ M @ P.T) == \
                ratlin.signature_of_symmetric(M)

    def test_signature_bounded_by_rank(self, rng):
        for _ in range(40):
            n = rng.randint(1, 6)
            M = random_symmetric(rng, n)
            assert abs(ratlin.signature_of_symmetric(M)) <= ratlin.rank(M) <= n

    def test_against_charpoly_oracle(self, rng):
        for _ in range(80):
            n = rng.randint(1, 5)
            M = random_symmetric(rng, n)
            assert ratlin.signature_of_symmetric(M) == signature_oracle(M)


class TestSmithNormalForm:
    def check(self, A):
        A = ratlin.as_matrix(A)
        U, D, V = ratlin.smith_normal_form(A)
        assert (U @ A @ V == D).all()
        assert ratlin.is_unimodular(U) and ratlin.is_unimodular(V)
        m, n = D.shape
        diag = [D[i, i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert D[i, j] == 0
        for d in diag:
            assert d >= 0
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0
        return diag

    def test_identity(self):
        assert self.check([[1, 0], [0, 1]]) == [1, 1]

    def test_diag_4_6(self):
        # brute-force oracle over unimodular operations gives diag(2, 12)
        assert self.check([[4, 0], [0, 6]]) == [2, 12]

    def test_column_vector(self):
        # gcd(12, -12) = 12
        U, D, V = ratlin.smith_normal_form([[12], [-12]])
        assert D.tolist() == [[12], [0]]
        self.check([[12], [-12]])

    def test_random(self, rng):
        for _ in range(60):
            A = random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            self.check(A)

    @given(st.lists(st.lists(st.integers(-20, 20), min_size=1, max_size=4),
                    min_size=1, max_size=4).filter(
                        lambda rows: len({len(r) for r in rows}) == 1))
    @settings(max_examples=60, deadline=None)
    def test_recomposition_property(self, rows):
        self.check(rows)


class TestKernel:
    def test_identity_injective(self):
        assert ratlin.kernel_basis(ratlin.identity(3)) == []

    def test_zero_matrix(self):
        basis = ratlin.kernel_basis(ratlin.zeros(2, 2))
        assert len(basis) == 2

    def test_single_equation(self):
        (v,) = ratlin.kernel_basis([[1, 1]])
        # spans the line through (1, -1)
        assert v[0] * (-1) == v[1] and v[0] != 0

    def test_kernel_vectors_annihilated(self, rng):
        for _ in range(40):
            A = random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
            for v in ratlin.kernel_basis(A):
                assert all(x == 0 for x in A @ v)
            for v in ratlin.kernel_basis_int(A):
                assert all(sum(A[i, j] * v[j] for j in range(A.shape[1])) == 0
                           for i in range(A.shape[0]))

    def test_kernel_dimension_matches_rank(self, rng):
        for _ in range(30):
            A = random_int_matrix(rng, rng.randint(1, 4), rng.randint(1, 6))
            n = A.shape[1]
            assert len(ratlin.kernel_basis(A)) == n - ratlin.rank(A)
            assert len(ratlin.kernel_basis_int(A)) == n - ratlin.rank(A)
