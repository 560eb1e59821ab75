from dataclasses import dataclass

import numpy as np
import torch

from ..errors import DataError, UsageError

__all__ = ["MAX_ORDER", "METHODS", "SymMatrix", "min_eigenvalue", "min_eigenvalues", "jacobi_eigenvalues"]

MAX_ORDER = 128
METHODS = ("eigh", "jacobi")


@dataclass(eq=False)
class SymMatrix:
    """ Real symmetric matrix, symmetric by construction. """
    entries: np.ndarray

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.float64)
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise DataError("SymMatrix needs a square matrix, got shape {}".format(self.entries.shape))
        if self.order < 1:
            raise DataError("SymMatrix order must be >= 1")
        _check_finite(self.entries)
        if not np.array_equal(self.entries, self.entries.T):
            raise DataError("SymMatrix entries are not exactly symmetric")

    @property
    def order(self):
        return self.entries.shape[0]

    def principal(self, n):
        """ Leading principal submatrix of order n. """
        return SymMatrix(self.entries[:n, :n])


def _check_finite(a):
    if not np.all(np.isfinite(a)):
        raise DataError("matrix has non-finite entries")


def _as_stack(stack):
    if isinstance(stack, SymMatrix):
        stack = stack.entries[None]
    stack = np.asarray(stack, dtype=np.float64)
    if stack.ndim == 2:
        stack = stack[None]
    if stack.ndim != 3 or stack.shape[-1] != stack.shape[-2]:
        raise DataError("expected a stack of square matrices, got shape {}".format(stack.shape))
    if stack.shape[-1] > MAX_ORDER:
        raise DataError("matrix order {} exceeds {}".format(stack.shape[-1], MAX_ORDER))
    _check_finite(stack)
    return stack


def jacobi_eigenvalues(stack, tol=1e-14, max_sweeps=100, return_vectors=False):
    """
    Cyclic Jacobi on a stack of symmetric matrices, shape (B, n, n).

    Every (p, q) rotation is applied to the whole batch at once; a matrix whose
    pivot is already zero gets the identity rotation. Sweeps stop once the
    off-diagonal Frobenius norm of every matrix is below `tol` times its
    initial norm, or after `max_sweeps`.

    Returns eigenvalues in ascending order, (B, n), and with `return_vectors`
    the matching eigenvectors as columns, (B, n, n).
    """
    A = _as_stack(stack).copy()
    B, n, _ = A.shape
    V = np.broadcast_to(np.eye(n), (B, n, n)).copy() if return_vectors else None

    bound = tol * np.linalg.norm(A, axis=(1, 2))
    offdiag = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(A[:, offdiag] ** 2, axis=1))
        if np.all(off <= bound):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[:, p, q]
                active = apq != 0.0
                if not np.any(active):
                    continue
                safe = np.where(active, apq, 1.0)
                theta = (A[:, q, q] - A[:, p, p]) / (2.0 * safe)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
                c = np.where(active, 1.0 / np.sqrt(t * t + 1.0), 1.0)
                s = np.where(active, t * c, 0.0)
                c_, s_ = c[:, None], s[:, None]

                Ap, Aq = A[:, :, p].copy(), A[:, :, q].copy()
                A[:, :, p] = c_ * Ap - s_ * Aq
                A[:, :, q] = s_ * Ap + c_ * Aq
                Ap, Aq = A[:, p, :].copy(), A[:, q, :].copy()
                A[:, p, :] = c_ * Ap - s_ * Aq
                A[:, q, :] = s_ * Ap + c_ * Aq
                A[:, p, q] = np.where(active, 0.0, A[:, p, q])
                A[:, q, p] = A[:, p, q]

                if V is not None:
                    Vp, Vq = V[:, :, p].copy(), V[:, :, q].copy()
                    V[:, :, p] = c_ * Vp - s_ * Vq
                    V[:, :, q] = s_ * Vp + c_ * Vq

    w = np.diagonal(A, axis1=1, axis2=2)
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if V is None:
        return w
    return w, np.take_along_axis(V, order[:, None, :], axis=2)


def min_eigenvalues(stack, method="eigh"):
    """ Smallest eigenvalue of every matrix in a (B, n, n) stack. """
    stack = _as_stack(stack)
    if method == "eigh":
        with torch.no_grad():
            w = torch.linalg.eigvalsh(torch.from_numpy(stack))
        return w[:, 0].numpy()
    if method == "jacobi":
        return jacobi_eigenvalues(stack)[:, 0]
    raise UsageError("unknown eigen method {!r}, expected one of {}".format(method, METHODS))


def min_eigenvalue(m, method="eigh", return_vector=False):
    """
    Smallest eigenvalue of a symmetric matrix, optionally with its unit
    eigenvector (the detection witness).
    """
    if not return_vector:
        return float(min_eigenvalues(m, method=method)[0])

    stack = _as_stack(m)
    if method == "eigh":
        with torch.no_grad():
            w, v = torch.linalg.eigh(torch.from_numpy(stack))
        return float(w[0, 0]), v[0, :, 0].numpy()
    if method == "jacobi":
        w, v = jacobi_eigenvalues(stack, return_vectors=True)
        return float(w[0, 0]), v[0, :, 0]
    raise UsageError("unknown eigen method {!r}, expected one of {}".format(method, METHODS))
