# Walk through the phase-space products: one complex four-vector carries a
# particle's four-momentum (real part) and space-time position (imaginary
# part), and one bilinear product carries the Lorentz interval (real part of
# the conjugate pairing) and the symplectic form (imaginary part).
import numpy as np

from relphase import (basis, conjugate, decompose, lorentz_product,
                      phase_vector, scalar_product, scalar_square,
                      symplectic_bracket)

# a particle with momentum p = (2, 0.3, 0, 0) sitting at x = (0, 1, 4, 0)
p = np.array([2.0, 0.3, 0.0, 0.0])
x = np.array([0.0, 1.0, 4.0, 0.0])
a = phase_vector(p + 1j * x)
print("phase vector a =", a)

p_back, x_back = decompose(a)
print("momentum part  =", p_back)
print("position part  =", x_back)

# the scalar product is bilinear: no conjugation, so i*i = -1 shows up
print("\n<u0|u0> =", scalar_product(basis(0), basis(0)))
print("<i u0|i u0> =", scalar_product(1j * basis(0), 1j * basis(0)))

# scalar square of a mixes p^2, x^2 and the p.x pairing:
#   a^2 = p^2 - x^2 + 2i <p|x>
print("\na^2           =", scalar_square(a))
print("p^2 - x^2     =", scalar_square(p) - scalar_square(x))
print("2 <p|x>       =", 2 * scalar_product(p, x))

# the conjugate pairing splits into the Lorentz product and symplectic form
s = scalar_product(conjugate(a), a)
print("\n<conj(a)|a>   =", s, " (= p^2 + x^2 =", scalar_square(p) + scalar_square(x), ")")
print("Lorentz product  Re<conj(a)|b>:", lorentz_product(a, 1j * basis(0)))
print("symplectic form  Im<conj(a)|b>:", symplectic_bracket(a, 1j * basis(0)))

# recover the invariants from the two squares
print("\np^2 from identity:", 0.5 * (s + scalar_square(a)).real,
      " direct:", scalar_square(p))
print("x^2 from identity:", 0.5 * (s - scalar_square(a)).real,
      " direct:", scalar_square(x))

# the symplectic bracket pairs momentum with position and nothing else
print("\n[u0, i u0] =", symplectic_bracket(basis(0), 1j * basis(0)))
print("[u1, i u1] =", symplectic_bracket(basis(1), 1j * basis(1)), " (spatial sign)")
print("[u0, u1]   =", symplectic_bracket(basis(0), basis(1)), " (real with real: 0)")
