"""Meyer's signature cocycle on Sp(2g, Z) and its rational cobounding
function on the hyperelliptic mapping class group.

The cocycle tau(A, B) is the signature of an explicit rational bilinear
form: on V_{A,B} = {(x, y) : (A^-1 - 1)x + (B - 1)y = 0} pair

    <(x1, y1), (x2, y2)> = (x1 + y1)^T J (1 - B) y2,

which is symmetric on V_{A,B}.  The overall sign is calibrated once so
that the cobounding function takes the value (g+1)/(2g+1) on a chain
twist (equivalently, tau of a right-handed transvection with itself is
+1); the calibration is pinned by the class-function tests, which fail
loudly for the flipped convention.

The cobounding function phi is evaluated on words by the extension-group
law phi(uv) = phi(u) + phi(v) - tau(u, v) from the base values

    phi(chain twist)             = (g+1)/(2g+1)
    phi(separating twist, h)     = -4h(g-h)/(2g+1)
    phi(iota)                    = tau(-1, -1)/2   (computed, and = 0)

Powers of subwords are combined by repeated squaring, which is sound
because the cocycle identity makes the combine law associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import ratlin, surface
from .words import ChainTwist, Iota, SeparatingTwist, Word, WordError


def _symplectic_pair(A, B):
    A = ratlin.as_matrix(A)
    B = ratlin.as_matrix(B)
    if A.shape != B.shape:
        raise ratlin.ShapeError(f"dimension mismatch: {A.shape} vs {B.shape}")
    n = A.shape[0]
    if A.shape[1] != n or n % 2:
        raise ratlin.ShapeError(f"expected square even-dimensional matrices, got {A.shape}")
    for M, name in ((A, "first"), (B, "second")):
        if not surface.is_symplectic(M):
            raise ValueError(f"{name} argument is not symplectic")
    return A, B


def meyer_form(A, B) -> np.ndarray:
    """Gram matrix of the Meyer pairing on V_{A,B} (integer entries)."""
    A, B = _symplectic_pair(A, B)
    return ratlin.as_matrix(_gram(tuple(map(tuple, A.tolist())),
                                  tuple(map(tuple, B.tolist()))))


def _gram(At: tuple, Bt: tuple) -> list[list[int]]:
    n = len(At)
    g = n // 2
    A = [list(r) for r in At]
    B = [list(r) for r in Bt]
    J = surface.intersection_matrix(g).tolist()
    # A^-1 = -J A^T J
    JA = [[sum(J[i][k] * A[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    Ainv = [[-sum(JA[i][k] * J[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    K = [[(Ainv[i][j] - (i == j)) for j in range(n)] +
         [(B[i][j] - (i == j)) for j in range(n)] for i in range(n)]
    kern = ratlin.kernel_basis_int(K)
    # P = J (1 - B)
    P = [[sum(J[i][k] * ((1 if k == j else 0) - B[k][j]) for k in range(n))
          for j in range(n)] for i in range(n)]
    us = []
    zs = []
    for v in kern:
        x, y = v[:n], v[n:]
        us.append([a + b for a, b in zip(x, y)])
        zs.append([sum(P[i][k] * y[k] for k in range(n)) for i in range(n)])
    d = len(kern)
    G = [[sum(us[i][k] * zs[j][k] for k in range(n)) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            if G[i][j] != G[j][i]:
                raise AssertionError("Meyer form came out asymmetric; convention bug")
    return G


def _tau_core(At: tuple, Bt: tuple) -> int:
    if not At:
        return 0
    return -ratlin._signature_int(_gram(At, Bt))


@lru_cache(maxsize=1 << 16)
def _tau_cached(At: tuple, Bt: tuple) -> int:
    return _tau_core(At, Bt)


def tau(A, B) -> int:
    """Meyer cocycle of two symplectic matrices; |tau| <= 2g and
    tau(1, .) = tau(., 1) = 0."""
    A, B = _symplectic_pair(A, B)
    return _tau_cached(tuple(map(tuple, A.tolist())), tuple(map(tuple, B.tolist())))


def _key(M: np.ndarray) -> tuple:
    return tuple(map(tuple, M.tolist()))


# -- the cobounding function -------------------------------------------------

@dataclass(frozen=True)
class PhiTable:
    """Base values of the cobounding function at a fixed genus."""
    genus: int
    nonseparating: Fraction
    iota: Fraction

    def separating(self, h: int) -> Fraction:
        g = self.genus
        if not 0 <= h <= g:
            raise ValueError(f"separating type needs 0 <= h <= {g}, got {h}")
        return Fraction(-4 * h * (g - h), 2 * g + 1)


@lru_cache(maxsize=None)
def phi_table(g: int) -> PhiTable:
    surface.check_genus(g)
    minus_one = _key(-ratlin.identity(2 * g))
    iota_value = Fraction(_tau_cached(minus_one, minus_one), 2)
    return PhiTable(genus=g,
                    nonseparating=Fraction(g + 1, 2 * g + 1),
                    iota=iota_value)


def phi_base(gen, g: int) -> Fraction:
    """Base value of the cobounding function on a single generator."""
    table = phi_table(g)
    if isinstance(gen, ChainTwist):
        if not 1 <= gen.index <= 2 * g + 1:
            raise WordError(f"t{gen.index} out of range for genus {g}")
        return table.nonseparating
    if isinstance(gen, SeparatingTwist):
        return table.separating(gen.h)
    if isinstance(gen, Iota):
        return table.iota
    raise WordError(f"unknown generator {gen!r}")


# states of the central extension Q x_tau Sp(2g, Z): (value, matrix key)

def _combine(s1, s2):
    v1, M1 = s1
    v2, M2 = s2
    t = _tau_cached(M1, M2)
    P1 = np.array(M1, dtype=object)
    P2 = np.array(M2, dtype=object)
    return (v1 + v2 - t, _key(P1 @ P2))


def _invert(s):
    v, M = s
    Minv = _key(surface.symplectic_inverse(np.array(M, dtype=object)))
    return (-v + _tau_cached(M, Minv), Minv)


def _pow(s, e: int, ident):
    if e < 0:
        return _pow(_invert(s), -e, ident)
    acc = ident
    p = s
    while e:
        if e & 1:
            acc = _combine(acc, p)
        e >>= 1
        if e:
            p = _combine(p, p)
    return acc


@lru_cache(maxsize=None)
def _gen_state(gen, g: int):
    return (phi_base(gen, g), _key(surface.generator_matrix(gen, g)))


def _eval(w: Word):
    g = w.genus
    ident = (Fraction(0), _key(ratlin.identity(2 * g)))
    state = ident
    for item, exp in w.items:
        base = _eval(item) if isinstance(item, Word) else _gen_state(item, g)
        state = _combine(state, _pow(base, exp, ident))
    return state


def phi(w: Word) -> Fraction:
    """The cobounding function evaluated on a word; independent of the
    chosen word for a fixed group element."""
    if w.genus == 0:
        return Fraction(0)  # trivial mapping class group
    return _eval(w)[0]


def tau_of_words(u: Word, v: Word) -> int:
    """Cocycle of the symplectic images of two words."""
    return tau(surface.word_to_matrix(u), surface.word_to_matrix(v))
