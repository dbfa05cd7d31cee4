"""Spin-1 and spin-1/2 images of the translation and angular-momentum
generators, their exponential flows, and the null-tetrad (Newman-Penrose)
block structure.

Generator labels: P_mu for the four translations, M_{alpha beta} (alpha !=
beta, M_{beta alpha} = -M_{alpha beta}) for boosts (one index 0) and
rotations (both indices spatial).

The spin-1 map sends P_mu to the basis vector u_mu (grade 1) and
M_{alpha beta} to the algebra generator d_basis(alpha, beta) (grade 0).

The spin-1/2 maps combine each boost generator with its dual rotation
generator.  With the dual pairing

    perp(0,1) = (2,3),   perp(0,2) = (3,1),   perp(0,3) = (1,2),

the combinations D(0,j) +/- i D_perp(0,j) square to the identity and satisfy
canonical anticommutation relations; halving them gives the boost images.
Rotation images follow from the complex dependence M_{kl} -> -i M_{0j}
(cyclic, plus sign) or its conjugate (minus sign).  Between grades 0 and 1 the
spin-1/2 maps use the modified bracket [A, v] = (A + conj(A)) v, which
reproduces the translation commutators exactly.

Sign conventions that differ from common displays, fixed by internal
consistency and covered by tests:

* exp(phi * d_basis(0,1)) has -sinh(phi) off-diagonal entries (u_0 ->
  cosh(phi) u_0 - sinh(phi) u_1).  The textbook boost with +sinh corresponds
  to rapidity -phi.
* The closed-form spin-1/2 flows carry a factor 2 on the generator term:
  exp(phi X) = cos(phi/2) I + 2 sin(phi/2) X when X^2 = -I/4, and
  cosh/sinh likewise when X^2 = +I/4.
* In the null tetrad (l, m, n, mbar) the first diagonal block of the plus
  representation is -conj(sigma_j)/2 for every boost; the second block is
  -sigma_j/2 for j in {1, 2} but +sigma_3/2 for j = 3 (equivalently
  -sigma_1 conj(sigma_j) sigma_1 / 2 for all j).  No basis change can make
  the second block -sigma_j/2 for all three j at once: the commutator
  [M_{01}, M_{02}] = -M_{12} forces the relative sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy.linalg import expm

from .core import ArrayC, basis, symplectic_bracket
from .liealgebra import (GradedElement, QoElement, commutator, graded_bracket,
                         qo_from_operator, qo_realize)
from .triproduct import d_basis

# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

#: Rotation index pair dual to each boost plane, keyed by the spatial axis.
DUAL_PAIRS: dict[int, tuple[int, int]] = {1: (2, 3), 2: (3, 1), 3: (1, 2)}

_CANONICAL_ANGULAR = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class PoincareGenerator:
    """A translation P_mu or an angular generator M_{alpha beta}.

    Angular labels are canonicalised to alpha < beta; M with swapped indices
    is stored as the canonical generator with sign -1.
    """

    kind: str  # "translation" | "angular"
    indices: tuple[int, ...]
    sign: int = 1

    @staticmethod
    def translation(mu: int) -> "PoincareGenerator":
        if not 0 <= mu <= 3:
            raise ValueError(f"translation index must be in 0..3, got {mu}")
        return PoincareGenerator("translation", (mu,))

    @staticmethod
    def angular(alpha: int, beta: int) -> "PoincareGenerator":
        if alpha == beta or not (0 <= alpha <= 3 and 0 <= beta <= 3):
            raise ValueError(f"angular indices must be distinct and in 0..3, got ({alpha}, {beta})")
        if alpha < beta:
            return PoincareGenerator("angular", (alpha, beta), 1)
        return PoincareGenerator("angular", (beta, alpha), -1)

    @property
    def label(self) -> str:
        if self.kind == "translation":
            return f"P{self.indices[0]}"
        alpha, beta = self.indices
        return ("-" if self.sign < 0 else "") + f"M{alpha}{beta}"

    def is_boost(self) -> bool:
        return self.kind == "angular" and self.indices[0] == 0


def parse_generator(label: str) -> PoincareGenerator:
    """Parse labels like "P0", "M01", "M31"."""
    label = label.strip()
    if len(label) == 2 and label[0] in "Pp" and label[1].isdigit():
        return PoincareGenerator.translation(int(label[1]))
    if len(label) == 3 and label[0] in "Mm" and label[1].isdigit() and label[2].isdigit():
        return PoincareGenerator.angular(int(label[1]), int(label[2]))
    raise ValueError(f"unknown generator label {label!r} (expected e.g. P0 or M01)")


# ---------------------------------------------------------------------------
# Dual rotation plane, tripotent combinations
# ---------------------------------------------------------------------------

def d_perp(j: int) -> ArrayC:
    """Rotation generator dual to the boost d_basis(0, j)."""
    if j not in DUAL_PAIRS:
        raise ValueError(f"dual index must be 1, 2 or 3, got {j}")
    return d_basis(*DUAL_PAIRS[j])


def qo_dual(q: QoElement) -> QoElement:
    """Linear dual map on the algebra: boost planes to their rotation planes.

    On the basis: (0,j) -> dual pair of j, and the dual pair of j -> -(0,j);
    applying it twice gives minus the identity.
    """
    x = q.coeffs
    out = np.zeros((4, 4), dtype=np.complex128)
    for j, (k, l) in DUAL_PAIRS.items():
        out[k, l] += x[0, j]
        out[l, k] -= x[0, j]
        out[0, j] -= x[k, l]
        out[j, 0] += x[k, l]
    return qo_realize(out)


def d_pm(j: int, sign: int) -> ArrayC:
    """Tripotent combination d_basis(0,j) +/- i * d_perp(j).

    Squares to the identity; distinct axes with the same sign anticommute
    (canonical anticommutation relations); opposite-sign combinations
    commute.
    """
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return d_basis(0, j) + sign * 1j * d_perp(j)


def _qo_single(alpha: int, beta: int, scale: complex = 1.0) -> QoElement:
    """QoElement holding scale * d_basis(alpha, beta)."""
    coeffs = np.zeros((4, 4), dtype=np.complex128)
    coeffs[alpha, beta] = scale / 2.0
    coeffs[beta, alpha] = -scale / 2.0
    return qo_realize(coeffs)


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------

def pi_spin1(g: PoincareGenerator) -> GradedElement:
    """Spin-1 image: P_mu -> u_mu in grade 1, M_{alpha beta} -> D_{alpha beta}."""
    if g.kind == "translation":
        return GradedElement.from_vector(basis(g.indices[0]))
    alpha, beta = g.indices
    return GradedElement.from_operator(_qo_single(alpha, beta, g.sign))


def pi_half(g: PoincareGenerator, sign: int) -> GradedElement:
    """Spin-1/2 image for the plus (+1) or minus (-1) representation.

    Boosts: M_{0j} -> (d_basis(0,j) + sign * i * d_perp(j)) / 2.
    Rotations: M_{kl} -> -sign * i times the boost image of the dual axis
    ((k,l,j) cyclic in (1,2,3)), so e.g. the plus image of M_{23} equals
    (d_basis(2,3) - i d_basis(0,1)) / 2.
    Translations: u_mu, as in the spin-1 map.

    The minus-representation operators are the entrywise conjugates of the
    plus ones.
    """
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if g.kind == "translation":
        return GradedElement.from_vector(basis(g.indices[0]))
    alpha, beta = g.indices
    if alpha == 0:
        j = beta
        op = (_qo_single(0, j, 0.5 * g.sign)
              + _qo_single(*DUAL_PAIRS[j], 0.5j * sign * g.sign))
        return GradedElement.from_operator(op)
    # spatial rotation: find the dual axis and its orientation
    for j, (k, l) in DUAL_PAIRS.items():
        if (alpha, beta) == (k, l):
            orient = 1
            break
        if (alpha, beta) == (l, k):
            orient = -1
            break
    else:
        raise ValueError(f"not a rotation pair: ({alpha}, {beta})")
    scale = -sign * 1j * orient * g.sign
    boost = pi_half(PoincareGenerator.angular(0, j), sign)
    return GradedElement.from_operator(scale * boost.l0)


def half_graded_bracket(x: GradedElement, y: GradedElement) -> GradedElement:
    """Graded bracket with the spin-1/2 rule between grades 0 and 1.

    [A, v] = (A + conj(A)) v, so the complex-dependent rotation images act on
    translations exactly like their spin-1 counterparts.  Grade-0 and
    grade-1-pair brackets are unchanged.
    """
    op = qo_from_operator(commutator(x.l0.matrix, y.l0.matrix))
    a = x.l0.matrix + np.conj(x.l0.matrix)
    b = y.l0.matrix + np.conj(y.l0.matrix)
    vec = a @ y.l1 - b @ x.l1
    scal = symplectic_bracket(x.l1, y.l1)
    return GradedElement(op, vec, scal)


@dataclass(frozen=True)
class Representation:
    """One of the three generator maps, with its matching graded bracket."""

    kind: str  # "spin1" | "spin_half_plus" | "spin_half_minus"

    def __post_init__(self) -> None:
        if self.kind not in ("spin1", "spin_half_plus", "spin_half_minus"):
            raise ValueError(f"unknown representation {self.kind!r}")

    def __call__(self, g: PoincareGenerator) -> GradedElement:
        if self.kind == "spin1":
            return pi_spin1(g)
        return pi_half(g, +1 if self.kind == "spin_half_plus" else -1)

    def angular_matrix(self, alpha: int, beta: int) -> ArrayC:
        """Operator part of the image of M_{alpha beta}."""
        return np.asarray(self(PoincareGenerator.angular(alpha, beta)).l0.matrix)

    def bracket(self, x: GradedElement, y: GradedElement) -> GradedElement:
        if self.kind == "spin1":
            return graded_bracket(x, y)
        return half_graded_bracket(x, y)


REPRESENTATION_KINDS = ("spin1", "spin_half_plus", "spin_half_minus")


# ---------------------------------------------------------------------------
# Exponential flows
# ---------------------------------------------------------------------------

def exponential_flow(x: ArrayLike, phi: float) -> ArrayC:
    """Matrix exponential exp(phi * X) via scaling-and-squaring."""
    x = np.asarray(x, dtype=np.complex128)
    return expm(phi * x)


def boost_flow_closed(j: int, phi: float) -> ArrayC:
    """Closed form of exp(phi * d_basis(0,j)), valid because D^3 = D.

    Carries -sinh entries relative to the textbook boost display; see the
    module docstring.
    """
    d = d_basis(0, j)
    return np.eye(4, dtype=np.complex128) + np.sinh(phi) * d + (np.cosh(phi) - 1.0) * (d @ d)


def rotation_flow_closed(k: int, l: int, phi: float) -> ArrayC:
    """Closed form of exp(phi * d_basis(k,l)) for spatial k, l: D^3 = -D."""
    d = d_basis(k, l)
    return np.eye(4, dtype=np.complex128) + np.sin(phi) * d + (1.0 - np.cos(phi)) * (d @ d)


def half_flow_closed(x: ArrayLike, phi: float) -> ArrayC:
    """Closed form of exp(phi X) for spin-1/2 generator images.

    Uses X^2 = s I/4 with s = +1 (boosts) or s = -1 (rotations):
        exp(phi X) = cosh(phi/2) I + 2 sinh(phi/2) X      (s = +1)
        exp(phi X) = cos(phi/2) I + 2 sin(phi/2) X        (s = -1)
    """
    x = np.asarray(x, dtype=np.complex128)
    sq = x @ x
    s = sq[0, 0] / 0.25
    if abs(sq - 0.25 * s * np.eye(4)).max() > 1e-12:
        raise ValueError("operator does not square to +/- I/4")
    if abs(s - 1.0) < 1e-12:
        return np.cosh(phi / 2) * np.eye(4, dtype=np.complex128) + 2 * np.sinh(phi / 2) * x
    if abs(s + 1.0) < 1e-12:
        return np.cos(phi / 2) * np.eye(4, dtype=np.complex128) + 2 * np.sin(phi / 2) * x
    raise ValueError("operator does not square to +/- I/4")


# ---------------------------------------------------------------------------
# Null tetrad and Pauli block structure
# ---------------------------------------------------------------------------

PAULI: tuple[ArrayC, ArrayC, ArrayC] = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)
for _p in PAULI:
    _p.setflags(write=False)


@dataclass(frozen=True)
class NPBasis:
    """Null tetrad basis (l, m, n, mbar) built from the standard basis.

    l = (u0 + u3)/sqrt(2), m = (u1 + i u2)/sqrt(2),
    n = (u0 - u3)/sqrt(2), mbar = (u1 - i u2)/sqrt(2).

    ``matrix`` holds the tetrad vectors as columns (null-tetrad coordinates
    to standard coordinates); ``inverse`` converts the other way.  The tetrad
    is unitary, so the inverse is exact and the round trip is lossless.
    """

    matrix: ArrayC
    inverse: ArrayC
    labels: tuple[str, str, str, str]

    def to_np_coords(self, v: ArrayLike) -> ArrayC:
        return self.inverse @ np.asarray(v, dtype=np.complex128)

    def from_np_coords(self, v: ArrayLike) -> ArrayC:
        return self.matrix @ np.asarray(v, dtype=np.complex128)


def np_matrix() -> NPBasis:
    """The null tetrad in the order (l, m, n, mbar)."""
    s = np.array(
        [[1, 0, 1, 0],
         [0, 1, 0, 1],
         [0, 1j, 0, -1j],
         [1, 0, -1, 0]],
        dtype=np.complex128,
    ) / np.sqrt(2.0)
    return NPBasis(s, np.conj(s.T), ("l", "m", "n", "mbar"))


def np_matrix_conjugate() -> NPBasis:
    """Tetrad with m and mbar swapped: (l, mbar, n, m).

    The minus representation is block diagonal with respect to this ordering,
    and its blocks are the entrywise conjugates of the plus-representation
    blocks in the standard ordering.
    """
    base = np_matrix()
    perm = np.eye(4, dtype=np.complex128)[:, [0, 3, 2, 1]]
    s = base.matrix @ perm
    return NPBasis(s, np.conj(s.T), ("l", "mbar", "n", "m"))


def to_np_basis(a: ArrayLike, tetrad: NPBasis | None = None) -> ArrayC:
    """Similarity transform of an operator into null-tetrad coordinates."""
    if tetrad is None:
        tetrad = np_matrix()
    a = np.asarray(a, dtype=np.complex128)
    return tetrad.inverse @ a @ tetrad.matrix


def np_block_pattern(j: int, boost: bool, rep_kind: str = "spin_half_plus") -> tuple[ArrayC, ArrayC]:
    """Reference diagonal blocks of the spin-1/2 angular images in the tetrad.

    For the plus representation in the (l, m, n, mbar) ordering:
        boosts    M_{0j}:  (-conj(sigma_j)/2,  -sigma_1 conj(sigma_j) sigma_1 / 2)
        rotations J_j:     ( i conj(sigma_j)/2, i sigma_1 conj(sigma_j) sigma_1 / 2)
    The second block equals -sigma_j/2 (resp. i sigma_j/2) for j in {1, 2}
    and carries the opposite sign for j = 3.  The minus-representation blocks
    (taken in the conjugated tetrad ordering) are the entrywise conjugates.
    """
    sig = PAULI[j - 1]
    first = -0.5 * np.conj(sig)
    second = -0.5 * (PAULI[0] @ np.conj(sig) @ PAULI[0])
    if not boost:
        first = -1j * first
        second = -1j * second
    if rep_kind == "spin_half_minus":
        first, second = np.conj(first), np.conj(second)
    elif rep_kind != "spin_half_plus":
        raise ValueError(f"no block pattern for representation {rep_kind!r}")
    return first, second


def np_blocks(a: ArrayLike) -> tuple[ArrayC, ArrayC, float]:
    """Split a 4x4 matrix into its two diagonal 2x2 blocks.

    Returns (first block, second block, largest off-block entry).
    """
    a = np.asarray(a, dtype=np.complex128)
    off = max(float(np.abs(a[:2, 2:]).max()), float(np.abs(a[2:, :2]).max()))
    return a[:2, :2].copy(), a[2:, 2:].copy(), off
