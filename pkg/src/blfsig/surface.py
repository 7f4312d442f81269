"""The closed genus-g reference surface and its symplectic representation.

First homology carries the symplectic basis (a_1, b_1, ..., a_g, b_g).
The chain curves c_1, ..., c_{2g+1} get the homology classes

    [c_{2k}]   = b_k,
    [c_{2k-1}] = a_{k-1} + a_k      (a_0 = a_{g+1} = 0),

so consecutive chain classes pair to +-1, non-consecutive ones to 0, and
the chain relation holds at the matrix level.  A right-handed Dehn twist
along a class c acts as the transvection x -> x + <x, c> c; the
hyperelliptic involution acts as -identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ratlin
from .words import ChainTwist, Iota, SeparatingTwist, Word, WordError


@dataclass(frozen=True)
class TypeI:
    """A non-separating simple closed curve."""

    def __str__(self):
        return "I"


@dataclass(frozen=True)
class TypeII:
    """A separating curve bounding subsurfaces of genus h and g-h."""
    h: int

    def __str__(self):
        return f"II_{self.h}"


CurveDescriptor = TypeI | TypeII


def check_genus(g: int) -> int:
    if g < 1:
        raise ValueError(f"mapping class operations need genus >= 1, got {g}")
    return g


def intersection_matrix(g: int) -> np.ndarray:
    """Block-diagonal J with <a_i, b_i> = +1 in the interleaved basis."""
    J = ratlin.zeros(2 * g, 2 * g)
    for k in range(g):
        J[2 * k, 2 * k + 1] = 1
        J[2 * k + 1, 2 * k] = -1
    return J


def pairing(u, v) -> int:
    """Algebraic intersection number <u, v> = u^T J v."""
    n = len(u)
    total = 0
    for k in range(n // 2):
        total += u[2 * k] * v[2 * k + 1] - u[2 * k + 1] * v[2 * k]
    return total


def basis_a(k: int, g: int) -> np.ndarray:
    v = np.zeros(2 * g, dtype=object)
    v[2 * (k - 1)] = 1
    return v


def basis_b(k: int, g: int) -> np.ndarray:
    v = np.zeros(2 * g, dtype=object)
    v[2 * (k - 1) + 1] = 1
    return v


def chain_class(i: int, g: int) -> np.ndarray:
    """Homology class of the i-th chain curve, 1 <= i <= 2g+1."""
    check_genus(g)
    if not 1 <= i <= 2 * g + 1:
        raise ValueError(f"chain index {i} out of range 1..{2 * g + 1}")
    v = np.zeros(2 * g, dtype=object)
    if i % 2 == 0:
        v[i - 1] = 1  # b_{i/2}
    else:
        k = (i + 1) // 2
        if k - 1 >= 1:
            v[2 * (k - 2)] = 1  # a_{k-1}
        if k <= g:
            v[2 * (k - 1)] += 1  # a_k
    return v


def twist_matrix(c, g: int) -> np.ndarray:
    """Transvection x -> x + <x, c> c of the right-handed twist along c.

    A null class (separating curve) gives the identity.
    """
    c = np.array(c, dtype=object)
    M = ratlin.identity(2 * g)
    J = intersection_matrix(g)
    return M - np.outer(c, c) @ J


def iota_matrix(g: int) -> np.ndarray:
    return -ratlin.identity(2 * g)


def is_symplectic(M: np.ndarray, g: int | None = None) -> bool:
    r, c = M.shape
    if r != c or r % 2:
        return False
    if g is not None and r != 2 * g:
        return False
    J = intersection_matrix(r // 2)
    return bool((M.T @ J @ M == J).all())


def symplectic_inverse(M: np.ndarray) -> np.ndarray:
    """Inverse of a symplectic matrix: M^-1 = -J M^T J."""
    J = intersection_matrix(M.shape[0] // 2)
    return -J @ M.T @ J


def generator_matrix(gen, g: int) -> np.ndarray:
    if isinstance(gen, ChainTwist):
        return twist_matrix(chain_class(gen.index, g), g)
    if isinstance(gen, Iota):
        return iota_matrix(g)
    if isinstance(gen, SeparatingTwist):
        return ratlin.identity(2 * g)  # null-homologous cycle, trivial transvection
    raise WordError(f"unknown generator {gen!r}")


def word_to_matrix(w: Word) -> np.ndarray:
    """Product of generator matrices, left to right in word order."""
    g = check_genus(w.genus)
    M = ratlin.identity(2 * g)
    for item, exp in w.items:
        if isinstance(item, Word):
            base = word_to_matrix(item)
        else:
            base = generator_matrix(item, g)
        M = M @ ratlin.mat_pow(base, exp, inverse=symplectic_inverse)
    return M


def curve_action(M: np.ndarray, c) -> int:
    """+1 if M c = c, -1 if M c = -c, 0 otherwise.

    A zero class returns +1; homology cannot see separating curves, so the
    caller should flag that case as vacuous.
    """
    c = np.array(c, dtype=object)
    img = M @ c
    if (img == c).all():
        return 1
    if (img == -c).all():
        return -1
    return 0


def cycle_class(cycle: CurveDescriptor, g: int) -> np.ndarray:
    """Homology class of the standard curve of the given type: the top
    chain curve (class a_g) for type I, zero for separating types."""
    check_genus(g)
    if isinstance(cycle, TypeI):
        return chain_class(2 * g + 1, g)
    if not 0 <= cycle.h <= g:
        raise ValueError(f"type II_h needs 0 <= h <= {g}, got {cycle.h}")
    return np.zeros(2 * g, dtype=object)
