"""Dense symmetric eigensolver and singular-value machinery.

Every spectrum in this package flows through the cyclic Jacobi solver
below.  Jacobi is unconditionally stable, accurate to roundoff for the
desk-scale dense matrices produced here (orders up to a few thousand),
and — with a fixed row-major sweep order — bit-reproducible from run to
run, which the golden tests rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, NegativeGramEigenvalue, NoConvergence

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "Spectrum",
    "sym_eigenvalues",
    "singular_values",
    "matrix_energy",
    "spectral_radius",
    "clamp_psd",
]


@dataclass(frozen=True)
class Tolerances:
    """Central numeric configuration; solvers and checks read one of these.

    eig_rel        Jacobi stops once the off-diagonal Frobenius norm drops
                   below ``eig_rel * ||M||_F`` (1e-300 absolute for the
                   zero matrix).
    max_sweeps     hard cap on Jacobi sweeps before NoConvergence.
    clamp_rel      Gram/PSD eigenvalues inside ``(-c, c)`` are snapped to
                   zero, ``c = clamp_rel * max(1, lambda_max)``; anything
                   below ``-c`` is a genuine numerical breakdown.
    check_rel      default certification tolerance, scaled by
                   ``max(1, |lhs|, |rhs|)``.
    omega_tie      slack when counting eigenvalues >= the average degree.
    parity_window  window for declaring an incidence energy an integer.
    spectrum_match absolute tolerance for entrywise spectrum comparisons.
    """

    eig_rel: float = 1e-12
    max_sweeps: int = 100
    clamp_rel: float = 1e-10
    check_rel: float = 1e-8
    omega_tie: float = 1e-9
    parity_window: float = 1e-9
    spectrum_match: float = 1e-7


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Spectrum:
    """Descending real eigenvalues (or singular values) with rank metadata."""

    values: tuple[float, ...]
    numeric_rank: int
    tol_used: float

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def _off_norm(a: np.ndarray) -> float:
    # direct norm of the off-diagonal part; subtracting ||diag||^2 from
    # ||A||_F^2 cancels catastrophically once the residual is tiny
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _require_square_symmetric(matrix: np.ndarray) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParams(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise InvalidParams("matrix order must be >= 1")
    if not np.array_equal(a, a.T):
        raise InvalidParams("matrix is not exactly symmetric")
    return a


def sym_eigenvalues(matrix: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> Spectrum:
    """All eigenvalues of an exactly-symmetric real matrix, descending.

    Cyclic Jacobi with row-major (p < q) pivot order.  Converged when the
    off-diagonal Frobenius norm is at most ``tol.eig_rel`` of the full
    Frobenius norm; raises NoConvergence if ``tol.max_sweeps`` sweeps do
    not get there.
    """
    a = _require_square_symmetric(matrix).copy()
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    target = tol.eig_rel * fro if fro > 0.0 else 1e-300

    converged = n == 1 or _off_norm(a) <= target
    for _ in range(tol.max_sweeps):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                # smaller root of t^2 + 2*theta*t - 1 = 0 with
                # theta = (aqq - app) / (2 apq), written so nothing overflows
                diff = aqq - app
                denom = abs(diff) + math.hypot(diff, 2.0 * apq)
                t = 2.0 * apq / denom if diff >= 0.0 else -2.0 * apq / denom
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                a[:, p] = a[p]
                a[:, q] = a[q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        converged = _off_norm(a) <= target
    if not converged:
        raise NoConvergence(
            f"off-diagonal norm {_off_norm(a):.3e} above target {target:.3e} "
            f"after {tol.max_sweeps} sweeps (order {n})"
        )

    values = np.sort(a.diagonal())[::-1]
    tol_used = tol.clamp_rel * max(1.0, float(np.abs(values).max()))
    rank = int(np.count_nonzero(np.abs(values) > tol_used))
    return Spectrum(tuple(float(v) for v in values), rank, tol_used)


def clamp_psd(values: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Snap roundoff-scale entries of a PSD spectrum to zero.

    Entries strictly inside ``(-c, c)`` become 0 with
    ``c = clamp_rel * max(1, max(values))``; an entry below ``-c`` means the
    input was not PSD to machine accuracy and raises NegativeGramEigenvalue.
    """
    values = np.asarray(values, dtype=float)
    top = float(values.max(initial=0.0))
    clamp = tol.clamp_rel * max(1.0, top)
    out = values.copy()
    out[np.abs(out) < clamp] = 0.0
    if np.any(out < 0.0):
        worst = float(out.min())
        raise NegativeGramEigenvalue(
            f"eigenvalue {worst:.6e} below -{clamp:.3e}; matrix is not PSD"
        )
    return out


def singular_values(matrix: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> Spectrum:
    """Singular values of a rectangular matrix, descending.

    Solves the eigenproblem of the smaller Gram matrix (``B B^T`` when
    rows <= cols, else ``B^T B``) and takes square roots after the PSD
    clamp.  numeric_rank counts the surviving nonzero values.
    """
    b = np.asarray(matrix, dtype=float)
    if b.ndim != 2:
        raise InvalidParams(f"expected a 2-d matrix, got shape {b.shape}")
    if min(b.shape) == 0:
        raise InvalidParams("matrix must have at least one row and column")
    gram = b @ b.T if b.shape[0] <= b.shape[1] else b.T @ b
    eig = sym_eigenvalues(gram, tol)
    clamped = clamp_psd(eig.as_array(), tol)
    sigma = np.sqrt(clamped)
    clamp = tol.clamp_rel * max(1.0, float(clamped.max(initial=0.0)))
    rank = int(np.count_nonzero(sigma > clamp))
    return Spectrum(tuple(float(v) for v in sigma), rank, clamp)


def matrix_energy(matrix: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Sum of absolute eigenvalues of a symmetric matrix."""
    return float(np.abs(sym_eigenvalues(matrix, tol).as_array()).sum())


def spectral_radius(matrix: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Largest eigenvalue modulus of a symmetric matrix."""
    return float(np.abs(sym_eigenvalues(matrix, tol).as_array()).max())
