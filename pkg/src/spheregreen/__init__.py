"""Fundamental solution of the Laplace-Beltrami operator on hyperspheres S_R^d.

Submodules
----------
specfun      elliptic integrals, Gauss 2F1, Gegenbauer/Legendre polynomials, Ferrers functions
geometry     hyperspherical and Hopf coordinates, geodesic separation
fundsol      the kernel G_R^d and its Euclidean counterpart
fourier      azimuthal Fourier coefficients on S^2 and S^3, quadrature oracle
gegenbauer   Gegenbauer expansion and addition theorem
potentials   potentials, binding energies and superintegrable pairs
verify       numerical verification suites
cli          command-line interface
"""

__version__ = "0.1.0"

from .config import DEFAULT_CONFIG, ExpansionConfig
from .errors import (ArgumentError, ConvergenceError, DomainError, RepresentationError,
                     SingularityError, SphereGreenError)
from .fourier import (FourierCoefficient, fourier_coeff_quadrature, fourier_coeff_s2,
                      fourier_coeff_s3, fourier_sum_s2, fourier_sum_s3)
from .fundsol import J_d, greens, greens_theta, newtonian_euclidean
from .gegenbauer import gegenbauer_sum, gegenbauer_sum_adaptive, radial_u_l
from .geometry import HopfPoint, SpherePoint, geodesic_distance
from .potentials import (DensitySpec, binding_2disc, binding_3ball, convolve_axisymmetric,
                         kepler_pair, oscillator_pair, potential_2disc, potential_3ball,
                         potential_curve_segment)

__all__ = [
    "__version__", "DEFAULT_CONFIG", "ExpansionConfig",
    "ArgumentError", "ConvergenceError", "DomainError", "RepresentationError",
    "SingularityError", "SphereGreenError",
    "FourierCoefficient", "fourier_coeff_quadrature", "fourier_coeff_s2", "fourier_coeff_s3",
    "fourier_sum_s2", "fourier_sum_s3",
    "J_d", "greens", "greens_theta", "newtonian_euclidean",
    "gegenbauer_sum", "gegenbauer_sum_adaptive", "radial_u_l",
    "HopfPoint", "SpherePoint", "geodesic_distance",
    "DensitySpec", "binding_2disc", "binding_3ball", "convolve_axisymmetric", "kepler_pair",
    "oscillator_pair", "potential_2disc", "potential_3ball", "potential_curve_segment",
]
