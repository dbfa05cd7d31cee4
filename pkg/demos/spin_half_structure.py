# Combining each boost generator with its dual rotation generator gives
# tripotents satisfying canonical anticommutation relations; halving them
# gives spin-1/2 images of the angular-momentum generators.  In the null
# tetrad these become block-diagonal Pauli-type matrices, and their flows
# need a 4 pi turn to come back to the identity.
import numpy as np

from relphase import (PAULI, Representation, d_basis, d_perp, d_pm,
                      exponential_flow, np_blocks, np_matrix, to_np_basis)

np.set_printoptions(precision=3, suppress=True)

# tripotent combinations: (D_0j + i Dperp_j)^2 = identity
t = d_pm(1, +1)
print("(D+_01)^2 == I:", np.abs(t @ t - np.eye(4)).max())
print("anticommutator of different axes:",
      np.abs(d_pm(1, +1) @ d_pm(2, +1) + d_pm(2, +1) @ d_pm(1, +1)).max())
print("dual pair annihilates its own boost:",
      np.abs(d_perp(1) @ d_basis(0, 1)).max())

plus = Representation("spin_half_plus")
m01 = plus.angular_matrix(0, 1)
print("\nspin-1/2 boost image of M_01 (= (D_01 + i D_23)/2):")
print(m01)

# rotations are complex multiples of boosts in this representation
m23 = plus.angular_matrix(2, 3)
print("\nM_23 image equals -i * M_01 image:", np.abs(m23 + 1j * m01).max())

# squares fix the spin: boosts -> +I/4, rotations -> -I/4
print("\nM_01 image squared (I/4):")
print(m01 @ m01)

# null tetrad: (l, m, n, mbar) built from the standard basis
tetrad = np_matrix()
print("\ntetrad columns (l, m, n, mbar):")
print(tetrad.matrix)

for j in (1, 2, 3):
    blocked = to_np_basis(plus.angular_matrix(0, j))
    b1, b2, off = np_blocks(blocked)
    print(f"\nboost axis {j} in the tetrad (off-block residual {off:.1e}):")
    print(blocked)
    print(" first block vs -conj(sigma)/2:", np.abs(b1 + 0.5 * np.conj(PAULI[j - 1])).max())

# half-angle behaviour: a full 2 pi turn flips the sign, 4 pi restores it
x = plus.angular_matrix(1, 2)
print("\nexp(2 pi X) + I:", np.abs(exponential_flow(x, 2 * np.pi) + np.eye(4)).max())
print("exp(4 pi X) - I:", np.abs(exponential_flow(x, 4 * np.pi) - np.eye(4)).max())
print("spin-1 comparison, exp(2 pi D_12) - I:",
      np.abs(exponential_flow(d_basis(1, 2), 2 * np.pi) - np.eye(4)).max())
