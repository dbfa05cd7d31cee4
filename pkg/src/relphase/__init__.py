"""relphase: the complex relativistic phase space as a numerical library.

C^4 with the Minkowski-bilinear scalar product carries four-momentum in its
real part and space-time position in its imaginary part.  The geometric
tri-product on this space generates the quasi-orthogonal (Lorentz) algebra,
whose spin-1 and spin-1/2 generator images drive boosts, rotations and the
closed-form evolution of charged particles in uniform electromagnetic fields.
"""

from .core import (ETA, ArrayC, ArrayR, basis, conjugate, decompose,
                   lorentz_product, phase_operator, phase_vector,
                   scalar_product, scalar_square, symplectic_bracket)
from .em import (EMField, FieldInvariant, evolution_generator,
                 evolve_closed_form, evolve_numeric, exp_faraday,
                 exp_faraday_conjugate, faraday_components, faraday_conjugate,
                 faraday_tensor, field_tensor, invariant_z, lorentz_force,
                 mass_shell_residual)
from .liealgebra import (QO_BASIS_PAIRS, GradedElement, QoElement, commutator,
                         graded_bracket, is_in_qo, is_quasi_orthogonal,
                         qo_basis, qo_from_operator, qo_realize)
from .representations import (DUAL_PAIRS, PAULI, NPBasis, PoincareGenerator,
                              Representation, boost_flow_closed, d_perp, d_pm,
                              exponential_flow, half_flow_closed,
                              half_graded_bracket, np_block_pattern, np_blocks,
                              np_matrix, np_matrix_conjugate, parse_generator,
                              pi_half, pi_spin1, qo_dual, rotation_flow_closed,
                              to_np_basis)
from .triproduct import (d_basis, d_hat, d_operator, tri_product,
                         tri_product_coords)

__version__ = "0.1.0"

__all__ = [
    "ETA", "ArrayC", "ArrayR", "basis", "conjugate", "decompose",
    "lorentz_product", "phase_operator", "phase_vector", "scalar_product",
    "scalar_square", "symplectic_bracket",
    "tri_product", "tri_product_coords", "d_operator", "d_hat", "d_basis",
    "QO_BASIS_PAIRS", "QoElement", "GradedElement", "commutator",
    "graded_bracket", "is_in_qo", "is_quasi_orthogonal", "qo_basis",
    "qo_from_operator", "qo_realize",
    "DUAL_PAIRS", "PAULI", "NPBasis", "PoincareGenerator", "Representation",
    "boost_flow_closed", "d_perp", "d_pm", "exponential_flow",
    "half_flow_closed", "half_graded_bracket", "np_block_pattern", "np_blocks",
    "np_matrix", "np_matrix_conjugate", "parse_generator", "pi_half",
    "pi_spin1", "qo_dual", "rotation_flow_closed", "to_np_basis",
    "EMField", "FieldInvariant", "evolution_generator", "evolve_closed_form",
    "evolve_numeric", "exp_faraday", "exp_faraday_conjugate",
    "faraday_components", "faraday_conjugate", "faraday_tensor",
    "field_tensor", "invariant_z", "lorentz_force", "mass_shell_residual",
    "__version__",
]
