from .hermite import MAX_HERMITE_ORDER, hermite_functions, hermite_u
from .bessel import bessel_j0
from .eigen import SymMatrix, min_eigenvalue, min_eigenvalues, jacobi_eigenvalues

__all__ = ["MAX_HERMITE_ORDER", "hermite_functions", "hermite_u", "bessel_j0",
    "SymMatrix", "min_eigenvalue", "min_eigenvalues", "jacobi_eigenvalues"]
