# The geometric triple product {a,b,c} = <a|b>c - <c|a>b + <b|c>a generates
# the quasi-orthogonal algebra: six antisymmetrised operators D_{ab} that
# exponentiate to boosts and rotations preserving the bilinear product.
import numpy as np

from relphase import (basis, commutator, d_basis, d_hat, exponential_flow,
                      is_in_qo, is_quasi_orthogonal, qo_realize, tri_product)

a, b, c = basis(0), basis(0), basis(1)
print("{u0, u0, u1} =", tri_product(a, b, c))

# the antisymmetrised operator map on a basis pair
print("\nD_01 = d_hat(u0, u1):")
print(d_hat(basis(0), basis(1)).real)
print("same thing in closed form, d_basis(0, 1):")
print(d_basis(0, 1).real)

# brackets close on the six-dimensional algebra, e.g. [D_01, D_12] = -D_02
print("\n[D_01, D_12] + D_02 =",
      np.abs(commutator(d_basis(0, 1), d_basis(1, 2)) + d_basis(0, 2)).max())

# a boost: exp(phi D_01) with phi = atanh(v); note the -sinh convention
phi = np.arctanh(0.6)
g = exponential_flow(d_basis(0, 1), phi)
print("\nboost at v = 0.6 (phi = %.4f):" % phi)
print(np.round(g.real, 6))
print("preserves the product:", is_quasi_orthogonal(g))

# a rotation: exp(phi D_12) turns u1 into u2
quarter = exponential_flow(d_basis(1, 2), np.pi / 2)
print("\nquarter turn of u1:", np.round(quarter @ basis(1), 12).real)

# arbitrary antisymmetric coefficient tensors realize algebra elements;
# complex coefficients are fine and still exponentiate into the group
rng = np.random.default_rng(0)
coeffs = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
q = qo_realize(coeffs - coeffs.T)
print("\nrandom element in the algebra:", is_in_qo(q.matrix))
for t in (0.1, 1.0, 2.5):
    print(f"  exp({t} X) in the group:", is_quasi_orthogonal(exponential_flow(q.matrix, t)))
