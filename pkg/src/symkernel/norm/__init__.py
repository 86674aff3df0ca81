from .charpoly import CharPolynomial, char_coeffs, fresh_variable, norm, trace
from .flags import ModuleFlag
from .identities import (
    check_base_change,
    check_char_coefficients,
    check_det_transitivity,
    check_local_factorization,
    check_random_towers,
    check_sampled_char_coefficients,
    check_ses_multiplicativity,
    check_tensor,
    check_theta_homomorphism,
    check_tower,
    diagonal_split,
    flagged_triple,
    random_tower,
    unimodular,
)
from .theta import Symmetrization, theta, theta_charpoly, theta_pure

__all__ = [
    "CharPolynomial",
    "ModuleFlag",
    "Symmetrization",
    "char_coeffs",
    "check_base_change",
    "check_char_coefficients",
    "check_det_transitivity",
    "check_local_factorization",
    "check_random_towers",
    "check_sampled_char_coefficients",
    "check_ses_multiplicativity",
    "check_tensor",
    "check_theta_homomorphism",
    "check_tower",
    "diagonal_split",
    "flagged_triple",
    "fresh_variable",
    "norm",
    "random_tower",
    "theta",
    "theta_charpoly",
    "theta_pure",
    "trace",
    "unimodular",
]
