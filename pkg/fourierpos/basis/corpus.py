import csv
from functools import partial
from pathlib import Path
from typing import List, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from ..errors import DataError, UsageError
from ..utils.pool import map_ordered, get_num_workers
from .coefficients import CoefficientVector, Kind, Label, LabeledFunction
from .hermite1d import phi_1d_values, psi_1d_values, psi_polynomial_1d
from .laguerre import phi_numerator, phi_radial_values, psi_polynomial_radial, psi_radial_values

__all__ = [
    "EPS_LABEL",
    "CORPUS_VERSION",
    "BLOCK_SIZE",
    "PSI_GRID",
    "LABEL_GRID",
    "uniform_grid",
    "negative_beyond",
    "positive_mask",
    "is_positive",
    "classify",
    "sample_corpus",
    "save_corpus",
    "load_corpus",
]

EPS_LABEL = 1e-12
CORPUS_VERSION = 1
_HEADER = "#fourierpos-corpus"

# (stop, step) of the scan grids starting at 0
PSI_GRID = {
    Kind.HERMITE_1D: (12.0, 1e-3),
    Kind.LAGUERRE_RADIAL: (60.0, 1e-2),
}
LABEL_GRID = (12.0, 1e-3)

_COARSE_STRIDE = 25
# fixed: the corpus of a seed depends on it
BLOCK_SIZE = 4096


def uniform_grid(stop, step):
    return np.linspace(0.0, stop, int(round(stop / step)) + 1)


def negative_beyond(poly, x0):
    """
    Whether the polynomial (ascending coefficients) is negative anywhere on
    (x0, inf). Decided from its real roots past x0 and its leading sign.
    """
    poly = P.polytrim(np.asarray(poly, dtype=np.float64), tol=0)
    if len(poly) == 1:
        return bool(poly[0] < 0)
    if poly[-1] < 0:
        return True
    roots = P.polyroots(poly)
    real = np.sort(roots.real[(np.abs(roots.imag) <= 1e-9 * np.maximum(1.0, np.abs(roots))) & (roots.real > x0)])
    if len(real) == 0:
        return bool(P.polyval(x0 + 1.0, poly) < 0)
    edges = np.concatenate([[x0], real, [2.0 * real[-1] + 1.0]])
    probes = 0.5 * (edges[:-1] + edges[1:])
    return bool(np.any(P.polyval(probes, poly) < 0))


def _psi_values(kind, coeffs, grid):
    if kind is Kind.HERMITE_1D:
        return psi_1d_values(coeffs, grid)
    return psi_radial_values(coeffs, grid)


def _psi_tail_negative(kind, coeffs):
    stop = PSI_GRID[kind][0]
    if kind is Kind.HERMITE_1D:
        return negative_beyond(psi_polynomial_1d(coeffs), stop * stop)
    return negative_beyond(psi_polynomial_radial(coeffs), stop)


def positive_mask(kind, coeffs):
    """
    Which rows of `coeffs` (B, n) give psi >= 0 on the positivity grid and
    beyond it. A strided subset of the grid screens first, the full grid and
    the exact tail only run on the survivors.
    """
    kind = Kind.parse(kind)
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=np.float64))
    grid = uniform_grid(*PSI_GRID[kind])

    mask = np.all(_psi_values(kind, coeffs, grid[::_COARSE_STRIDE]) >= 0, axis=1)
    idx = np.flatnonzero(mask)
    if len(idx):
        mask[idx] = np.all(_psi_values(kind, coeffs[idx], grid) >= 0, axis=1)
    for i in np.flatnonzero(mask):
        mask[i] = not _psi_tail_negative(kind, coeffs[i])
    return mask


def is_positive(cv: CoefficientVector):
    return bool(positive_mask(cv.kind, cv.array[None])[0])


def _labels(kind, coeffs, eps_label):
    grid = uniform_grid(*LABEL_GRID)
    if kind is Kind.HERMITE_1D:
        # the Gaussian envelope puts anything past the grid far below eps_label
        negative = np.min(phi_1d_values(coeffs, grid), axis=1) < -eps_label
    else:
        negative = np.min(phi_radial_values(coeffs, grid), axis=1) < -eps_label
        q0 = LABEL_GRID[0] ** 2
        for i in np.flatnonzero(~negative):
            negative[i] = negative_beyond(phi_numerator(coeffs[i]), q0)
    return [Label.PN if n else Label.PP for n in negative]


def classify(cv: CoefficientVector, eps_label=EPS_LABEL):
    """ PN iff the analytic transform goes below -eps_label somewhere. """
    return _labels(cv.kind, cv.array[None], eps_label)[0]


def _screen_block(block, kind, seed, eps_label):
    rng = np.random.default_rng([seed, block])
    draws = rng.standard_normal((BLOCK_SIZE, kind.size))
    draws /= np.sqrt(np.sum(draws * draws, axis=1, keepdims=True))
    accepted = draws[positive_mask(kind, draws)]
    if not len(accepted):
        return accepted, []
    return accepted, _labels(kind, accepted, eps_label)


def sample_corpus(kind, n_target, seed, num_workers=0, eps_label=EPS_LABEL,
                  desc=None) -> List[LabeledFunction]:
    """
    Rejection-sample `n_target` functions with psi >= 0 and label them.

    Candidates are normalized Gaussian vectors, i.e. uniform on the unit
    sphere. Block b draws from `default_rng([seed, b])` and blocks are
    consumed in order, so the corpus depends on the seed only.
    """
    kind = Kind.parse(kind)
    if int(n_target) < 1:
        raise UsageError("corpus size must be >= 1, got {}".format(n_target))
    n_target = int(n_target)
    num_workers = get_num_workers(num_workers)
    per_round = max(1, num_workers) * 4

    fn = partial(_screen_block, kind=kind, seed=seed, eps_label=eps_label)
    out = []
    block = 0
    while len(out) < n_target:
        blocks = range(block, block + per_round)
        for accepted, labels in map_ordered(fn, blocks, num_workers=num_workers, desc=desc):
            for c, label in zip(accepted, labels):
                if len(out) == n_target:
                    break
                out.append(LabeledFunction(CoefficientVector(kind, tuple(c)), label, seed))
        block += per_round
    return out


def save_corpus(records: Sequence[LabeledFunction], path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    width = max((len(r.cv) for r in records), default=0)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow([_HEADER, CORPUS_VERSION])
        writer.writerow(["kind", "seed"] + ["c{}".format(i) for i in range(width)] + ["label"])
        for r in records:
            writer.writerow([r.kind.value, r.seed] + ["{:.17g}".format(c) for c in r.cv.coeffs] + [r.label.value])
    return path


def load_corpus(path) -> List[LabeledFunction]:
    path = Path(path)
    if not path.is_file():
        raise DataError("corpus file not found: {}".format(path))

    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    if len(rows) < 2 or rows[0][:1] != [_HEADER]:
        raise DataError("{} is not a corpus file".format(path))
    if rows[0][1:] != [str(CORPUS_VERSION)]:
        raise DataError("unsupported corpus version {} in {}".format(rows[0][1:], path))

    records = []
    for lineno, row in enumerate(rows[2:], start=3):
        if not row:
            continue
        try:
            kind = Kind.parse(row[0])
            if len(row) != kind.size + 3:
                raise DataError("expected {} fields, got {}".format(kind.size + 3, len(row)))
            cv = CoefficientVector(kind, tuple(float(c) for c in row[2:-1]))
            records.append(LabeledFunction(cv, Label.parse(row[-1]), int(row[1])))
        except ValueError as e:
            raise DataError("{}:{}: {}".format(path, lineno, e)) from e
    return records
