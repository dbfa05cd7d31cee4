"""Geometric tri-product on the phase space and the operator maps it induces.

The tri-product is {a,b,c} = <a|b>c - <c|a>b + <b|c>a, built on the bilinear
Minkowski scalar product.  It is complex trilinear and symmetric in the outer
pair: {a,b,c} = {c,b,a}.

``d_operator(a, b)`` is the map c -> {a,b,c}; its antisymmetrisation
``d_hat`` generates the quasi-orthogonal Lie algebra.  ``d_basis(alpha, beta)``
is the same operator on basis vectors, built directly from the closed-form
action

    u_gamma -> -eta_{gamma alpha} u_beta + eta_{beta gamma} u_alpha,

kept as an independent construction so the two code paths can be tested
against each other.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from .core import ETA, ArrayC, scalar_product


def tri_product(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> ArrayC:
    """{a,b,c} = <a|b>c - <c|a>b + <b|c>a."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    c = np.asarray(c, dtype=np.complex128)
    return scalar_product(a, b) * c - scalar_product(c, a) * b + scalar_product(b, c) * a


def tri_product_coords(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> ArrayC:
    """Coordinate form of the tri-product, written as explicit contractions.

    Independent of :func:`tri_product`; used to cross-check it.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    c = np.asarray(c, dtype=np.complex128)
    al = ETA @ a
    bl = ETA @ b
    cl = ETA @ c
    return (al @ b) * c - (cl @ a) * b + (bl @ c) * a


def d_operator(a: ArrayLike, b: ArrayLike) -> ArrayC:
    """Matrix of c -> {a,b,c}."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    # {a,b,c} = <a|b> c - <c|a> b + <b|c> a, column gamma = image of u_gamma
    ab = a @ ETA @ b
    m = ab * np.eye(4, dtype=np.complex128)
    m -= np.outer(b, ETA @ a)
    m += np.outer(a, ETA @ b)
    return m


def d_hat(a: ArrayLike, b: ArrayLike) -> ArrayC:
    """Antisymmetrised operator (d_operator(a,b) - d_operator(b,a)) / 2."""
    return 0.5 * (d_operator(a, b) - d_operator(b, a))


def d_basis(alpha: int, beta: int) -> ArrayC:
    """Closed-form matrix of d_hat(u_alpha, u_beta).

    Action: u_gamma -> -eta_{gamma alpha} u_beta + eta_{beta gamma} u_alpha.
    Antisymmetric in (alpha, beta); zero when alpha == beta.
    """
    if not (0 <= alpha <= 3 and 0 <= beta <= 3):
        raise ValueError(f"basis indices must be in 0..3, got ({alpha}, {beta})")
    m = np.zeros((4, 4), dtype=np.complex128)
    m[beta, alpha] -= ETA[alpha, alpha]
    m[alpha, beta] += ETA[beta, beta]
    return m
