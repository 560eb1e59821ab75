from .quadrature import Rule, QuadratureSpec, DEFAULT_1D, DEFAULT_RADIAL, fourier_1d, hankel
from .identity import gaussian, gaussian_pair, comb_sum_1d, alias_sum_1d, poisson_identity_residual

__all__ = ["Rule", "QuadratureSpec", "DEFAULT_1D", "DEFAULT_RADIAL", "fourier_1d", "hankel", "gaussian",
    "gaussian_pair", "comb_sum_1d", "alias_sum_1d", "poisson_identity_residual"]
