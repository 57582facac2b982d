"""Exact checks of the arithmetic Siegel-Weil identity for CM fields of degree 2 and 4.

The degree of the special CM divisor Z^(alpha) is computed from ideal counts
and local lengths; the derivative of the incoherent Eisenstein coefficient is
computed from local Whittaker values.  The two are compared by
:mod:`cm_eisenstein.verify_cli`.
"""

from .cm_fields import (
    ClassData,
    FieldTower,
    SplittingType,
    TowerError,
    build_tower,
    splitting_in_K,
    validate_conditions,
)
from .degree_side import CaseTag, DegreeBreakdown, arithmetic_degree, finite_degree, green_contribution
from .eisenstein_side import (
    b_phi,
    b_phi_closed,
    beta1,
    beta1_scaled,
    coeff_derivative_for_class,
    diff_set,
    enumerate_Xi,
    value_at_zero,
    whittaker_arch,
    whittaker_finite,
)
from .ideal_arith import ElementF, IdealF, ideal_norm, principal_ideal, rho, rho_local
from .local_deformation import deformation_length, epsilon_P, lift_bound_k, local_context, order_profile
from .number_field import PrimeOfF, primes_above

__version__ = "0.1.0"
