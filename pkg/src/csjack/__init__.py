"""Exact symbolic Jack polynomials over Q(beta), with operator machinery.

The package builds Jack polynomials by repeated application of raising
operators assembled from Dunkl-type derivatives, cross-checks them against
independent constructions, and computes the quasi-particle spectrum of the
underlying trigonometric many-body model.
"""

from .errors import AlgebraError
from .fieldring import BETA, ONE, ZERO, FieldElement, pochhammer
from .operators import (
    apply_B_plus,
    apply_D,
    apply_D_string,
    apply_dunkl,
    apply_H,
    apply_hatD,
    apply_hatH,
    apply_L,
    apply_N,
)
from .oracle import (
    jack_by_gram_schmidt,
    jack_by_symmetrization,
    jack_by_triangular_H,
    nonsym_eigenfunction,
    nonsym_eigenvalues,
)
from .partitions import Partition, dominance_compare, dominates, partitions_of
from .polyring import LaurentPoly, VarContext, divide_by_vardiff
from .rodrigues import JackResult, c_coefficient, eigenvalue_epsilon, jack, rodrigues_raw
from .spectrum import (
    ModelParams,
    ground_energy,
    quasi_momenta,
    spectrum_record,
    total_energy,
    total_momentum,
    wavefunction_descriptor,
)
from .symbases import (
    BasisExpansion,
    circle_inner_product,
    expand_in_basis,
    monomial_sym,
    power_sum,
    scalar_product_p,
    schur,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BETA",
    "ONE",
    "ZERO",
    "FieldElement",
    "pochhammer",
    "Partition",
    "dominance_compare",
    "dominates",
    "partitions_of",
    "LaurentPoly",
    "VarContext",
    "divide_by_vardiff",
    "BasisExpansion",
    "monomial_sym",
    "power_sum",
    "schur",
    "expand_in_basis",
    "scalar_product_p",
    "circle_inner_product",
    "apply_dunkl",
    "apply_D",
    "apply_D_string",
    "apply_B_plus",
    "apply_N",
    "apply_H",
    "apply_L",
    "apply_hatD",
    "apply_hatH",
    "jack",
    "JackResult",
    "rodrigues_raw",
    "c_coefficient",
    "eigenvalue_epsilon",
    "jack_by_triangular_H",
    "jack_by_gram_schmidt",
    "jack_by_symmetrization",
    "nonsym_eigenfunction",
    "nonsym_eigenvalues",
    "ModelParams",
    "ground_energy",
    "quasi_momenta",
    "total_momentum",
    "total_energy",
    "spectrum_record",
    "wavefunction_descriptor",
    "__version__",
]
