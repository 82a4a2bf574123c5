"""Cubic analogues of the elliptic modulus: mu*_a, phi*_K and the cubic AGM.

Special functions (``specialfn``), the starred modular functions and their
inverses (``modular``), the Borwein cubic AGM (``cubic_agm``), the orbit-sum
representation of mu* (``product_expansion``) and a numerical verification
suite (``verifier``). Series summation runs in a compiled kernel when the
extension is built and in pure Python otherwise; ``BACKEND`` says which.
"""

from ._backend import BACKEND
from .cubic_agm import AgmState, agm_iterate, agm_limit, agm_step
from .errors import (ConfigurationError, ConvergenceError, CubicModularError,
                     DomainError, ParameterError)
from .modular import (complement, mu_a, mu_star, mu_star_derivative,
                      mu_star_inverse, phi13_star_closed, phi3_star_closed,
                      phi_star)
from .product_expansion import (CubicOrbit, cubic_orbit, mu_star_bounds,
                                mu_star_product, phi_inv_lower_bound)
from .reports import VerificationReport
from .specialfn import (EvalOptions, EvalResult, SeriesParameters, beta_fn,
                        bessel_u, digamma, euler_gamma, gamma_fn, hyp2f1,
                        kummer_phi, ramanujan_R)
from .verifier import SweepGrid, run_full_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AgmState", "agm_iterate", "agm_limit", "agm_step",
    "ConfigurationError", "ConvergenceError", "CubicModularError", "DomainError",
    "ParameterError", "complement", "mu_a", "mu_star", "mu_star_derivative",
    "mu_star_inverse", "phi13_star_closed", "phi3_star_closed", "phi_star",
    "CubicOrbit", "cubic_orbit", "mu_star_bounds", "mu_star_product",
    "phi_inv_lower_bound", "VerificationReport", "EvalOptions", "EvalResult",
    "SeriesParameters", "beta_fn", "bessel_u", "digamma", "euler_gamma", "gamma_fn",
    "hyp2f1", "kummer_phi", "ramanujan_R", "SweepGrid", "run_full_suite",
]
