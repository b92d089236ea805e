"""Dense symmetric eigendecomposition and Laplacian-derived quantities.

The eigensolver is LAPACK's symmetric driver (tridiagonalization + implicit
QL/QR) through numpy; it is deterministic for a fixed input.  Eigenvectors are
canonicalized so that their first non-negligible entry is positive, which
keeps tests reproducible.  Every quantity downstream only consumes squared
projections, so the sign convention never changes results.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, NumericFailureError, StructuralError
from .graphs import Graph, laplacian

# lambda_3 - lambda_2 below this relative level counts as an exact
# multiplicity (the gap is declared zero).
MULTIPLICITY_RTOL = 1e-8

_SIGN_EPS = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Full spectrum, ascending; eigenvectors[:, i] pairs with eigenvalues[i]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _canonicalize_signs(vectors: np.ndarray) -> np.ndarray:
    out = vectors.copy()
    for i in range(out.shape[1]):
        col = out[:, i]
        nz = np.nonzero(np.abs(col) > _SIGN_EPS)[0]
        if nz.size and col[nz[0]] < 0:
            out[:, i] = -col
    return out


def eig_sym(a: np.ndarray, tol: float = 1e-10, check: bool = True) -> Spectrum:
    """Eigendecomposition of a symmetric matrix, eigenvalues ascending.

    Raises InvalidArgumentError for non-symmetric input and
    NumericFailureError if the residual contract ||A v - lam v|| <= tol*||A||_F
    is not met.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidArgumentError(f"expected a square matrix, got shape {a.shape}")
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if not np.isfinite(a).all():
        raise InvalidArgumentError("matrix has non-finite entries")
    if np.abs(a - a.T).max(initial=0.0) > 1e-12 * scale:
        raise InvalidArgumentError("matrix is not symmetric")
    w, v = np.linalg.eigh(a)
    v = _canonicalize_signs(v)
    if check:
        fro = float(np.linalg.norm(a))
        resid = float(np.abs(a @ v - v * w).max())
        if resid > tol * max(fro, 1.0):
            raise NumericFailureError(
                f"eigensolver residual {resid:.3e} exceeds {tol:.1e} * ||A||_F"
            )
        ortho = float(np.abs(v.T @ v - np.eye(a.shape[0])).max())
        if ortho > 1e-8:
            raise NumericFailureError(f"eigenvectors not orthonormal ({ortho:.3e})")
    return Spectrum(eigenvalues=w, eigenvectors=v)


def gap_from_eigenvalues(w: np.ndarray) -> float:
    """lambda_3 - lambda_2, clamped to 0 below the multiplicity tolerance."""
    delta = float(w[2] - w[1])
    if delta <= MULTIPLICITY_RTOL * max(1.0, abs(float(w[2]))):
        return 0.0
    return delta


def laplacian_gap_delta(g: Graph) -> float:
    """Gap between the third and second smallest Laplacian eigenvalues."""
    if g.n < 3:
        raise InvalidArgumentError("gap needs at least 3 vertices")
    if not g.is_connected():
        raise StructuralError("gap is defined for connected graphs only")
    w = eig_sym(laplacian(g)).eigenvalues
    return gap_from_eigenvalues(w)


def algebraic_multiplicity(g: Graph) -> int:
    """Multiplicity of the algebraic connectivity lambda_2(L_G)."""
    if not g.is_connected():
        raise StructuralError("algebraic connectivity assumes a connected graph")
    w = eig_sym(laplacian(g)).eigenvalues
    lam2 = float(w[1])
    tol = MULTIPLICITY_RTOL * max(1.0, abs(lam2))
    return int(np.sum(np.abs(w[1:] - lam2) <= tol))


def fiedler_vector(g: Graph) -> np.ndarray:
    """Unit eigenvector for lambda_2(L_G), first non-negligible entry positive.

    With a degenerate algebraic connectivity this is one deterministic member
    of the eigenspace; use algebraic_multiplicity to detect that case.
    """
    if not g.is_connected():
        raise StructuralError("Fiedler vector assumes a connected graph")
    spec = eig_sym(laplacian(g))
    return spec.eigenvectors[:, 1].copy()


def grid_spectrum_closed_form(m: int, n: int) -> np.ndarray:
    """Laplacian eigenvalues of Grid(m, n): (2 sin(pi i / 2m))^2 + (2 sin(pi j / 2n))^2."""
    if m < 1 or n < 1:
        raise InvalidArgumentError("grid dimensions must be positive")
    vals = [
        (2.0 * math.sin(math.pi * i / (2 * m))) ** 2
        + (2.0 * math.sin(math.pi * j / (2 * n))) ** 2
        for i in range(m)
        for j in range(n)
    ]
    return np.sort(np.array(vals))
