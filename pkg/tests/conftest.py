"""Shared fixtures and independent oracles for the test suite.

The signature oracle goes through the characteristic polynomial (exact
Faddeev-LeVerrier over Fractions) and Descartes' rule of signs, which
counts roots exactly for real-rooted polynomials; it shares no code with
the congruence-diagonalisation implementation it checks.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from blfsig import ratlin


def char_poly(M) -> list[Fraction]:
    """Coefficients of det(xI - M), highest degree first."""
    M = ratlin.as_matrix(M)
    n = M.shape[0]
    I = ratlin.identity(n)
    coeffs = [Fraction(1)]
    A = np.array([[Fraction(x) for x in row] for row in M], dtype=object)
    Mf = A.copy()
    c = Fraction(-sum(A[i, i] for i in range(n)))
    coeffs.append(c)
    for k in range(2, n + 1):
        A = Mf @ (A + c * I)
        c = Fraction(-sum(A[i, i] for i in range(n)), k)
        coeffs.append(c)
    return coeffs


def _sign_changes(seq) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature_oracle(M) -> int:
    """Eigenvalue-sign count via Descartes' rule on the char polynomial."""
    coeffs = char_poly(M)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()  # zero eigenvalues
    n = len(coeffs) - 1
    pos = _sign_changes(coeffs)
    neg = _sign_changes([c * (-1) ** (n - i) for i, c in enumerate(coeffs)])
    return pos - neg


def random_symmetric(rng: random.Random, n: int, fractions=True):
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if fractions:
                v = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            else:
                v = rng.randint(-6, 6)
            M[i][j] = M[j][i] = v
    return ratlin.as_matrix(M)


def random_unimodular(rng: random.Random, n: int, ops: int = 12):
    P = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        k = rng.randint(-2, 2)
        P[i] = [a + k * b for a, b in zip(P[i], P[j])]
    if rng.random() < 0.5:
        i = rng.randrange(n)
        P[i] = [-a for a in P[i]]
    return ratlin.as_matrix(P)


def random_int_matrix(rng: random.Random, m: int, n: int):
    return ratlin.as_matrix([[rng.randint(-9, 9) for _ in range(n)]
                             for _ in range(m)])


@pytest.fixture
def rng():
    return random.Random(12345)
