"""Enumeration, counting and classification of unmixed Beauville structures on Z_n^2."""

from .classifier import (
    ClassificationReport,
    OrbitClass,
    StabilizerType,
    are_isomorphic,
    burnside_count,
    canonical_rep,
    fixed_count,
    orbits,
    orbits_unswapped,
    stabilizer_type,
)
from .closed_forms import ThetaBreakdown, asymptotic_ratio, fermat_genus, theta, theta1, theta2, theta3, theta4, theta_prime_power
from .gl2 import BeauvilleMatrix, Mat2, SingularMatrixError, det, enumerate_beauville, invert, is_beauville_matrix, triples_of
from .modular import LevelError, PrimePower, Residue, crt_combine, factorize, is_valid_level
from .oracle import beauville_condition_check, free_action_check, naive_orbit_count, sigma_set
from .weyl import IDENTITY, J, WElement, act, conjugacy_class_of, m_rep, w_mul

__version__ = "0.1.0"
