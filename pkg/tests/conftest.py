from pathlib import Path

import numpy as np
import pytest

from fourierpos.basis import CoefficientVector, Kind
from fourierpos.basis.laguerre import coefficients_from_polynomial
from fourierpos.utils import logger

ROOT = Path(__file__).resolve().parents[1]
CONFIGS = ROOT / "configs"

PP_1D = (0.901, 0.276, 0.259, 0.006, 0.214)
PN_1D = (0.772, 0.304, 0.386, 0.171, 0.366)
PP_RADIAL_POLY = (3.6096, -6.7462, 4.8826, -1.6141, 0.28086, -0.027009, 0.00145, -0.000042169, 5.63539e-7)
PN_RADIAL_POLY = (2.49362, -6.84573, 6.76697, -3.04127, 0.723816, -0.0959944, 0.00705616, -0.000265057,
    3.93896e-6)


def random_unit(rng, kind, n):
    kind = Kind.parse(kind)
    out = []
    for c in rng.standard_normal((n, kind.size)):
        out.append(CoefficientVector.normalized(kind, c))
    return out


@pytest.fixture(autouse=True, scope="session")
def quiet_logger():
    logger.basic_config(None, use_color=False)
    yield


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def pp_1d():
    return CoefficientVector.normalized(Kind.HERMITE_1D, PP_1D)


@pytest.fixture
def pn_1d():
    return CoefficientVector.normalized(Kind.HERMITE_1D, PN_1D)


@pytest.fixture
def gaussian_1d():
    return CoefficientVector(Kind.HERMITE_1D, (1.0, 0.0, 0.0, 0.0, 0.0))


@pytest.fixture
def pp_radial():
    return coefficients_from_polynomial(PP_RADIAL_POLY)


@pytest.fixture
def pn_radial():
    return coefficients_from_polynomial(PN_RADIAL_POLY)


@pytest.fixture
def configs():
    return CONFIGS
