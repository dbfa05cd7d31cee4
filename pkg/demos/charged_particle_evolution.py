# A uniform electromagnetic field drives the four-momentum linearly,
# dp/dtau = F p.  Writing the field as the complex Faraday operator and its
# conjugate (which commute) solves the motion in closed form; a Runge-Kutta
# integration of the same equation confirms it.
import numpy as np

from relphase import (EMField, evolve_closed_form, evolve_numeric,
                      exp_faraday, faraday_tensor, invariant_z, scalar_square)

np.set_printoptions(precision=6, suppress=True)

# a generic field: crossed E and B with nonzero invariants
f = EMField(e=[0.8, 0.0, 0.2], b=[0.0, 0.5, -0.3])
inv = invariant_z(f)
print("field invariant z = (E+iB).(E+iB) =", inv.z)
print("  component check  (E.E - B.B, 2 E.B):",
      f.e @ f.e - f.b @ f.b, 2 * f.e @ f.b)

# the Faraday operator squares to z/4 times the identity
fc = faraday_tensor(f)
print("Faraday square residual:",
      np.abs(fc @ fc - (inv.z / 4) * np.eye(4)).max())

# closed-form evolution vs a 4th-order Runge-Kutta oracle
p0 = np.array([1.0, 0.2, -0.1, 0.0])
print("\nstart momentum:", p0, " p^2 =", scalar_square(p0).real)
print(f"{'tau':>5} {'closed form':>44} {'max dev vs RK4':>15} {'p^2 drift':>10}")
for tau in (0.0, 1.0, 2.5, 5.0):
    pc = evolve_closed_form(f, p0, tau)
    pn = evolve_numeric(f, p0, tau, 4000)
    drift = scalar_square(pc).real - scalar_square(p0).real
    print(f"{tau:5.1f} {np.array2string(pc, precision=5):>44} "
          f"{np.abs(pc - pn).max():15.2e} {drift:10.2e}")

# pure electric field: hyperbolic motion (a boost at rapidity e*tau)
e = 0.7
pure_e = EMField([e, 0, 0], [0, 0, 0])
p = evolve_closed_form(pure_e, [1, 0, 0, 0], 2.0)
print("\npure E: p(2) =", p, " vs (cosh, -sinh):",
      np.cosh(e * 2), -np.sinh(e * 2))

# pure magnetic field: circular motion, energy exactly constant
pure_b = EMField([0, 0, 0], [0, 0, 0.9])
p = evolve_closed_form(pure_b, [1.5, 1, 0, 0], 4.0)
print("pure B: p(4) =", p, " p^0 unchanged:", p[0])

# a null field (E.B = 0, |E| = |B|) makes the Faraday operator nilpotent and
# the motion polynomial in proper time
null = EMField([1, 0, 0], [0, 1, 0])
print("\nnull field z =", invariant_z(null).z)
print("exp(tau Fc) - (I + tau Fc) residual:",
      np.abs(exp_faraday(null, 3.0) - np.eye(4) - 3.0 * faraday_tensor(null)).max())
p = evolve_closed_form(null, [1, 0, 0, 0], 3.0)
print("null-field p(3) =", p, " (p^0 = 1 + tau^2/2 =", 1 + 3.0 ** 2 / 2, ")")
