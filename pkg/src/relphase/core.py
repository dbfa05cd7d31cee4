"""Complex relativistic phase space: vectors, metric, and scalar products.

The phase space is C^4 with the fixed Minkowski metric eta = diag(1,-1,-1,-1).
A phase vector a^mu simultaneously carries a four-momentum (its real part)
and a space-time position (its imaginary part): a^mu = p^mu + i x^mu.

Conventions, fixed once for the whole library:

* Coordinates are contravariant components a^mu in the standard basis
  u_0..u_3.  Index lowering is always an explicit contraction with ``ETA``,
  never implicit.
* The scalar product <a|b> = eta_{mu nu} a^mu b^nu is complex BILINEAR in
  both arguments and symmetric.  There is no conjugation; consequently
  <ia|ia> = -<a|a>.  The Lorentz product and the symplectic bracket are
  recovered as the real and imaginary parts of <conj(a)|b>.
* Natural units throughout: c = 1, unit charge and mass.

All operations are pure functions over immutable values and are safe to use
from multiple threads.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

ArrayC = NDArray[np.complex128]
ArrayR = NDArray[np.float64]

#: Minkowski metric with signature (+,-,-,-).
ETA: ArrayR = np.diag([1.0, -1.0, -1.0, -1.0])
ETA.setflags(write=False)

_UNIT = np.eye(4, dtype=np.complex128)
_UNIT.setflags(write=False)


def basis(mu: int) -> ArrayC:
    """Return the standard basis vector u_mu, mu in 0..3."""
    if not 0 <= mu <= 3:
        raise ValueError(f"basis index must be in 0..3, got {mu}")
    return _UNIT[mu].copy()


def phase_vector(coords: ArrayLike) -> ArrayC:
    """Build a phase vector from four complex coordinates.

    Rejects anything that is not a finite length-4 coordinate array.
    """
    a = np.asarray(coords, dtype=np.complex128)
    if a.shape != (4,):
        raise ValueError(f"phase vector needs 4 coordinates, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise ValueError("phase vector coordinates must be finite")
    return a


def phase_operator(matrix: ArrayLike) -> ArrayC:
    """Build a linear operator on the phase space from a 4x4 complex matrix.

    Entry [gamma][mu] is the u_gamma coefficient of the image of u_mu.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"phase operator must be 4x4, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("phase operator entries must be finite")
    return m


def scalar_product(a: ArrayLike, b: ArrayLike) -> complex:
    """Bilinear Minkowski scalar product <a|b> = eta_{mu nu} a^mu b^nu.

    Complex linear in both slots (no conjugation) and symmetric.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    return complex(a @ ETA @ b)


def scalar_square(a: ArrayLike) -> complex:
    """Scalar square <a|a>; an arbitrary complex number in general."""
    return scalar_product(a, a)


def conjugate(a: ArrayLike) -> ArrayC:
    """Coordinate-wise complex conjugate in the standard basis."""
    return np.conj(np.asarray(a, dtype=np.complex128))


def lorentz_product(a: ArrayLike, b: ArrayLike) -> float:
    """Re <conj(a)|b>: the Lorentzian product extended to the full space.

    Restricts to the usual Lorentz product on the real (momentum) subspace
    and on the imaginary (position) subspace.
    """
    return complex(scalar_product(conjugate(a), b)).real


def symplectic_bracket(a: ArrayLike, b: ArrayLike) -> float:
    """Im <conj(a)|b>: the symplectic skew product; antisymmetric.

    Vanishes when both arguments are real or both pure imaginary; it pairs
    the momentum subspace with the position subspace.
    """
    return complex(scalar_product(conjugate(a), b)).imag


def decompose(a: ArrayLike) -> tuple[ArrayR, ArrayR]:
    """Split a = p + i*x into the real four-momentum p and position x.

    Cross-check identities, with s = <conj(a)|a>:
        p^2 = Re(s + <a|a>) / 2,   x^2 = Re(s - <a|a>) / 2.
    """
    a = np.asarray(a, dtype=np.complex128)
    return a.real.copy(), a.imag.copy()
