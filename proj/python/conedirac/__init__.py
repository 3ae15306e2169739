"""Fiber spectra of the spin-orbit operator for the bag-confined Dirac
operator on a circular cone, with cross-validating solvers."""

from ._core import (  # noqa: F401
    __version__,
    bessel_i,
    bessel_k,
    char_fn,
    classify_halfline,
    deficiency_function,
    eigenfunction,
    ferrers_identity_residual,
    ferrers_p,
    ferrers_p_derivative,
    gamma_fn,
    gap_report,
    hyp2f1,
    oracle_spectrum,
    perturbation_budget,
    quantum_dot_matrix,
    spectrum,
)
