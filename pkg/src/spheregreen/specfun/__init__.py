"""Special functions used by the hypersphere kernels."""

from .elliptic import (carlson_rc, carlson_rd, carlson_rf, carlson_rj, elliptic_E,
                       elliptic_F, elliptic_K, elliptic_Pi)
from .ferrers import FerrersIndex, ferrers_P, ferrers_Q, ferrers_Q_diagonal
from .hypergeometric import gauss_2F1, hyp2f1_regularized, pochhammer, rgamma
from .polynomials import assoc_legendre_P, chebyshev_T, gegenbauer_C, legendre_P

__all__ = [
    "carlson_rc", "carlson_rd", "carlson_rf", "carlson_rj",
    "elliptic_E", "elliptic_F", "elliptic_K", "elliptic_Pi",
    "FerrersIndex", "ferrers_P", "ferrers_Q", "ferrers_Q_diagonal",
    "gauss_2F1", "hyp2f1_regularized", "pochhammer", "rgamma",
    "assoc_legendre_P", "chebyshev_T", "gegenbauer_C", "legendre_P",
]
