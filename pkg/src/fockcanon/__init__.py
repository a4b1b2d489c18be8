"""Operators T^(s,t) with Gaussian kernels on F^2, their spectra, and the
Bargmann-transform correspondence with linear canonical transforms."""
from .errors import FockCanonError
from .fock import (QuadratureRule, TruncatedFockVector, fock_inner, fock_norm,
                   principal_sqrt, reproducing_kernel)
from .group import (GroupElement, RealSymplecticMatrix, cocycle, compose, inverse,
                    phi, phi_inverse)
from .hermite import (IntegralEqParams, gaussian_moment, generalized_hermite,
                      hermite_gaussian_integral, verify_integral_equation)
from .kernel import kernel_compose, kernel_eval, kernel_norm
from .lct import (SampledRealFunction, bargmann, bargmann_sign, frft, inverse_bargmann,
                  lct_apply, lct_inverse_sign, verify_conjugation)
from .operators import CanonicalOperator, OperatorClass, apply, classify, hs_norm_sq, matrix
from .spectral import SpectralData, eigenfunction, eigenvalue, solve_gamma, spectral_data

__version__ = "0.1.0"

__all__ = [
    "FockCanonError", "QuadratureRule", "TruncatedFockVector", "fock_inner", "fock_norm",
    "principal_sqrt", "reproducing_kernel", "GroupElement", "RealSymplecticMatrix",
    "cocycle", "compose", "inverse", "phi", "phi_inverse", "IntegralEqParams",
    "gaussian_moment", "generalized_hermite", "hermite_gaussian_integral",
    "verify_integral_equation", "kernel_compose", "kernel_eval", "kernel_norm",
    "SampledRealFunction", "bargmann", "bargmann_sign", "frft", "inverse_bargmann",
    "lct_apply", "lct_inverse_sign", "verify_conjugation", "CanonicalOperator",
    "OperatorClass", "apply", "classify", "hs_norm_sq", "matrix", "SpectralData",
    "eigenfunction", "eigenvalue", "solve_gamma", "spectral_data",
]
