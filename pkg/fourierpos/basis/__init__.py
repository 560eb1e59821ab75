from .coefficients import Kind, Label, CoefficientVector, LabeledFunction
from .hermite1d import eval_psi_1d, eval_phi_1d, psi_fn_1d, phi_fn_1d
from .laguerre import (eval_psi_radial, eval_phi_radial, psi_fn_radial, phi_fn_radial, phi_numerator,
    coefficients_from_polynomial)
from .corpus import classify, is_positive, sample_corpus, save_corpus, load_corpus


def psi_fn(cv):
    """ Picklable psi callable for either basis kind. """
    return psi_fn_1d(cv) if cv.kind is Kind.HERMITE_1D else psi_fn_radial(cv)


def phi_fn(cv):
    return phi_fn_1d(cv) if cv.kind is Kind.HERMITE_1D else phi_fn_radial(cv)


__all__ = ["Kind", "Label", "CoefficientVector", "LabeledFunction", "eval_psi_1d", "eval_phi_1d",
    "eval_psi_radial", "eval_phi_radial", "phi_numerator", "coefficients_from_polynomial", "classify",
    "is_positive", "sample_corpus", "save_corpus", "load_corpus", "psi_fn", "phi_fn"]
