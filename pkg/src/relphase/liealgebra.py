"""Quasi-orthogonal Lie algebra and the graded algebra built on the phase space.

An invertible map g is quasi-orthogonal when it preserves the bilinear scalar
product, <ga|gb> = <a|b>, i.e. g^T eta g = eta.  Its Lie algebra consists of
the operators X with <Xa|b> + <a|Xb> = 0; equivalently the lowered matrix
X_{alpha beta} = eta_{gamma beta} X^gamma_alpha is antisymmetric.  The six
operators d_basis(0,1), d_basis(0,2), d_basis(0,3), d_basis(2,3),
d_basis(3,1), d_basis(1,2) span it over the complex numbers.

A ``QoElement`` stores both views of an algebra element: the antisymmetric
coefficient tensor x^{alpha beta} and the realised operator

    sum over ALL ordered pairs (alpha, beta) of x^{alpha beta} D_{alpha beta},

so a coefficient pair (x^{alpha beta}, x^{beta alpha} = -x^{alpha beta})
contributes 2 x^{alpha beta} D_{alpha beta}.  This double-counting convention
is fixed here once; ``qo_from_operator`` inverts it.

The graded algebra is L0 + L1 + L2 with L0 the quasi-orthogonal algebra,
L1 the phase space and L2 the complex scalars.  Brackets: operator commutator
on L0; [A, v] = A v between L0 and L1; the symplectic skew product between
two vectors, landing in L2; every bracket involving L2 vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from .core import ETA, ArrayC, symplectic_bracket
from .triproduct import d_basis

#: Index pairs of the six independent algebra generators, in the order
#: (electric-type 01, 02, 03, then magnetic-type 23, 31, 12).
QO_BASIS_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))


def qo_basis() -> dict[tuple[int, int], ArrayC]:
    """The six basis operators keyed by their index pair."""
    return {pair: d_basis(*pair) for pair in QO_BASIS_PAIRS}


_BASIS_MATRICES = np.stack([d_basis(*pair) for pair in QO_BASIS_PAIRS])
# Flattened basis, pseudo-inverted once: projects any operator onto the span.
_BASIS_FLAT = _BASIS_MATRICES.reshape(6, 16)
_BASIS_PINV = np.linalg.pinv(_BASIS_FLAT)


@dataclass(frozen=True)
class QoElement:
    """Element of the quasi-orthogonal algebra.

    coeffs: antisymmetric 4x4 complex tensor x^{alpha beta}.
    matrix: the realised operator, summed over all ordered index pairs.
    """

    coeffs: ArrayC
    matrix: ArrayC

    def __post_init__(self) -> None:
        # Private copies so elements stay immutable even if the caller
        # mutates its arrays afterwards.
        for name in ("coeffs", "matrix"):
            arr = np.array(getattr(self, name), dtype=np.complex128, copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __add__(self, other: "QoElement") -> "QoElement":
        return QoElement(self.coeffs + other.coeffs, self.matrix + other.matrix)

    def __sub__(self, other: "QoElement") -> "QoElement":
        return QoElement(self.coeffs - other.coeffs, self.matrix - other.matrix)

    def __neg__(self) -> "QoElement":
        return QoElement(-self.coeffs, -self.matrix)

    def __mul__(self, scale: complex) -> "QoElement":
        return QoElement(self.coeffs * scale, self.matrix * scale)

    __rmul__ = __mul__

    @staticmethod
    def zero() -> "QoElement":
        return QoElement(np.zeros((4, 4), dtype=np.complex128),
                         np.zeros((4, 4), dtype=np.complex128))


def qo_realize(coeffs: ArrayLike, tol: float = 1e-12) -> QoElement:
    """Realise an antisymmetric coefficient tensor as an algebra element.

    Raises ValueError when the input tensor is not antisymmetric within tol.
    """
    x = np.asarray(coeffs, dtype=np.complex128)
    if x.shape != (4, 4):
        raise ValueError(f"coefficient tensor must be 4x4, got shape {x.shape}")
    asym = np.abs(x + x.T).max()
    if asym > tol:
        raise ValueError(f"coefficient tensor is not antisymmetric (residual {asym:.3e})")
    x = 0.5 * (x - x.T)  # exact antisymmetry
    matrix = np.einsum("ab,abij->ij", x, _D_ALL)
    return QoElement(x, matrix)


def qo_from_operator(matrix: ArrayLike, tol: float = 1e-10) -> QoElement:
    """Recover the coefficient view of an operator known to lie in the algebra.

    Raises ValueError when the operator is outside the span within tol.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    c = _BASIS_PINV.T @ m.reshape(16)
    recon = (c @ _BASIS_FLAT).reshape(4, 4)
    scale = max(1.0, float(np.abs(m).max()))
    if np.abs(recon - m).max() > tol * scale:
        raise ValueError("operator is not in the quasi-orthogonal algebra")
    coeffs = np.zeros((4, 4), dtype=np.complex128)
    for (alpha, beta), ci in zip(QO_BASIS_PAIRS, c):
        coeffs[alpha, beta] += ci / 2.0
        coeffs[beta, alpha] -= ci / 2.0
    return QoElement(coeffs, m)


# Full table D_{alpha beta} for the einsum in qo_realize.
_D_ALL = np.zeros((4, 4, 4, 4), dtype=np.complex128)
for _a in range(4):
    for _b in range(4):
        _D_ALL[_a, _b] = d_basis(_a, _b)
_D_ALL.setflags(write=False)


def is_quasi_orthogonal(g: ArrayLike, tol: float = 1e-12) -> bool:
    """True when g preserves the scalar product: g^T eta g = eta.

    Checked on all 16 basis pairs at once; the residual is normalised by the
    squared size of g so large flows are judged relative to their own scale.
    """
    g = np.asarray(g, dtype=np.complex128)
    resid = np.abs(g.T @ ETA @ g - ETA).max()
    scale = max(1.0, float(np.abs(g).max()) ** 2)
    return bool(resid <= tol * scale)


def is_in_qo(x: ArrayLike, tol: float = 1e-12) -> bool:
    """True when <Xa|b> + <a|Xb> = 0 on basis pairs, i.e. X^T eta + eta X = 0."""
    x = np.asarray(x, dtype=np.complex128)
    resid = np.abs(x.T @ ETA + ETA @ x).max()
    scale = max(1.0, float(np.abs(x).max()))
    return bool(resid <= tol * scale)


def commutator(a: ArrayLike, b: ArrayLike) -> ArrayC:
    """Operator bracket AB - BA."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    return a @ b - b @ a


@dataclass(frozen=True)
class GradedElement:
    """Element of the graded algebra L0 + L1 + L2.

    l0: quasi-orthogonal operator part; l1: phase-space vector part;
    l2: complex scalar part.  Addition is componentwise.
    """

    l0: QoElement
    l1: ArrayC
    l2: complex

    def __post_init__(self) -> None:
        vec = np.array(self.l1, dtype=np.complex128, copy=True)
        vec.setflags(write=False)
        object.__setattr__(self, "l1", vec)
        object.__setattr__(self, "l2", complex(self.l2))

    @staticmethod
    def zero() -> "GradedElement":
        return GradedElement(QoElement.zero(), np.zeros(4, dtype=np.complex128), 0.0)

    @staticmethod
    def from_operator(q: QoElement) -> "GradedElement":
        return GradedElement(q, np.zeros(4, dtype=np.complex128), 0.0)

    @staticmethod
    def from_vector(v: ArrayLike) -> "GradedElement":
        return GradedElement(QoElement.zero(), np.asarray(v, dtype=np.complex128), 0.0)

    @staticmethod
    def from_scalar(s: complex) -> "GradedElement":
        return GradedElement(QoElement.zero(), np.zeros(4, dtype=np.complex128), s)

    def __add__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.l0 + other.l0, self.l1 + other.l1, self.l2 + other.l2)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.l0 - other.l0, self.l1 - other.l1, self.l2 - other.l2)

    def __neg__(self) -> "GradedElement":
        return GradedElement(-self.l0, -self.l1, -self.l2)

    def norm(self) -> float:
        """Max-entry size across the three grades; used for residual scaling."""
        return max(float(np.abs(self.l0.matrix).max()),
                   float(np.abs(self.l1).max()),
                   abs(self.l2))


def graded_bracket(x: GradedElement, y: GradedElement) -> GradedElement:
    """Bracket of the graded algebra, antisymmetric by construction.

    [L0, L0] is the operator commutator; [A, v] = A v and [v, A] = -A v
    between grades 0 and 1; [v, w] is the symplectic skew product landing in
    L2; brackets with L2 vanish.  The real symplectic pairing makes this
    bracket real-bilinear (not complex-bilinear) in the vector slots.

    The Jacobi identity holds on the real form of the algebra: elements
    whose grade-0 part has real coefficients (which covers all generator
    images of the spin-1 map).  It provably fails for imaginary grade-0
    parts: with A = i d_basis(0,1), v = u_0, w = u_1 the cyclic sum is
    [[A,v],w] + [[w,A],v] = -2, an unavoidable consequence of pairing a
    complex grade 0 with a real-valued grade-2 form.  The spin-1/2 maps use
    the modified bracket in :mod:`relphase.representations`, which restores
    Jacobi on their image.
    """
    op = qo_from_operator(commutator(x.l0.matrix, y.l0.matrix))
    vec = x.l0.matrix @ y.l1 - y.l0.matrix @ x.l1
    scal = symplectic_bracket(x.l1, y.l1)
    return GradedElement(op, vec, scal)
