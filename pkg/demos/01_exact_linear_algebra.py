"""Exact linear algebra: signatures, Smith normal forms, kernels.

Everything runs over Python ints and fractions.Fraction inside numpy
object arrays, so all outputs below are exact.
"""

from fractions import Fraction as F

from blfsig import ratlin

# %% signatures of symmetric forms by congruence diagonalisation
print("signature [[2]]              =", ratlin.signature_of_symmetric([[2]]))
print("signature diag(1, -3)        =", ratlin.signature_of_symmetric([[1, 0], [0, -3]]))
print("signature hyperbolic [[0,1],[1,0]] =",
      ratlin.signature_of_symmetric([[0, 1], [1, 0]]))

M = [[F(1, 2), F(2, 3), 1],
     [F(2, 3), 0, F(-1, 5)],
     [1, F(-1, 5), -2]]
print("signature of a rational form =", ratlin.signature_of_symmetric(M))

# %% Smith normal form with its unimodular transforms
A = ratlin.as_matrix([[4, 0], [0, 6]])
U, D, V = ratlin.smith_normal_form(A)
print("\nSNF of diag(4, 6):")
print("  D =", D.tolist())
print("  U A V == D:", (U @ A @ V == D).all())
print("  U, V unimodular:", ratlin.is_unimodular(U), ratlin.is_unimodular(V))

# the quotient Z^2 / <(12, -12)> = Z + Z/12, read off the diagonal
U, D, V = ratlin.smith_normal_form([[12], [-12]])
print("SNF of the column (12, -12)^T:", D.tolist())

# %% rational kernels
print("\nkernel of [1 1]:", [v.tolist() for v in ratlin.kernel_basis([[1, 1]])])
print("kernel of the identity:", ratlin.kernel_basis(ratlin.identity(3)))
K = [[1, 2, 3, 4], [2, 4, 6, 8]]
basis = ratlin.kernel_basis(K)
print("kernel of a rank-1 2x4 matrix: dimension", len(basis))
for v in basis:
    assert all(x == 0 for x in ratlin.as_matrix(K) @ v)
print("all kernel vectors annihilated exactly")
