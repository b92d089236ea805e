"""SDP relaxation solver, rounding, dual certificate, and brute-force oracle.

The relaxation maximizes <X, Y> over PSD matrices with unit diagonal and
Y a_i = 0 for each parity attribute.  It is solved by ADMM: an affine step
(alternating projections onto the attribute nullspace and the unit diagonal)
and a PSD-cone projection, with a scaled dual update and adaptive penalty.
Only an eigensolver is needed.

The linear node term is *not* lifted into the SDP; the global sign of the
solution is fixed afterwards by majority vote against the node observation.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    InfeasibleError,
    InvalidArgumentError,
    NumericFailureError,
    SizeLimitError,
)
from .spectral import eig_sym

BRUTE_FORCE_MAX_N = 20
CERTIFICATE_TOL = 1e-9

_AFFINE_INNER_CAP = 50
_AFFINE_INNER_TOL = 1e-10


@dataclass(frozen=True)
class SdpConfig:
    """ADMM tolerances.  Residuals are Frobenius norms, converged when
    primal <= primal_tol * sqrt(n) and dual <= dual_tol * sqrt(n)."""

    primal_tol: float = 1e-6
    dual_tol: float = 1e-6
    max_iters: int = 20000
    penalty: float = 1.0

    def __post_init__(self) -> None:
        if self.primal_tol <= 0 or self.dual_tol <= 0 or self.penalty <= 0:
            raise InvalidArgumentError("tolerances and penalty must be positive")
        if self.max_iters < 1:
            raise InvalidArgumentError("max_iters must be >= 1")


@dataclass(frozen=True)
class SdpSolution:
    y_matrix: np.ndarray
    objective: float
    status: str  # "converged" | "iteration-cap"
    iterations: int
    primal_residual: float
    dual_residual: float


@dataclass(frozen=True)
class CertificateReport:
    """lambda_2 of the KKT dual matrix; positive means unique rank-1 optimum."""

    lambda2_of_Lambda: float
    holds: bool
    residual_null: float


def _validate_observation_matrix(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise InvalidArgumentError("observation matrix must be square")
    if np.abs(x - x.T).max(initial=0.0) > 0 or np.abs(np.diag(x)).max(initial=0.0) > 0:
        raise InvalidArgumentError("observation matrix must be symmetric with zero diagonal")
    return x


def _attribute_basis(attributes, n: int) -> np.ndarray | None:
    """Orthonormal basis of span{a_i}; dependent attributes are dropped."""
    if not attributes:
        return None
    a = np.column_stack([np.asarray(v, dtype=float) for v in attributes])
    if a.shape[0] != n:
        raise InvalidArgumentError("attribute length must match matrix dimension")
    q, r = np.linalg.qr(a)
    keep = np.abs(np.diag(r)) > 1e-10 * max(1.0, np.abs(r).max())
    if not keep.all():
        warnings.warn("linearly dependent attributes deduplicated", stacklevel=3)
    q = q[:, keep]
    return q if q.shape[1] else None


def _project_attribute_nullspace(w: np.ndarray, q: np.ndarray) -> np.ndarray:
    # (I - QQ^T) W (I - QQ^T) in O(n^2 k)
    w = w - q @ (q.T @ w)
    w = w - (w @ q) @ q.T
    return w


def _affine_project(w: np.ndarray, q: np.ndarray | None) -> np.ndarray:
    """Approximate projection onto {diag = 1} intersect {Y a_i = 0}.

    Alternating projections, nullspace first then diagonal reset; not the
    exact projection onto the intersection, but a point arbitrarily close to
    the affine set after at most _AFFINE_INNER_CAP sweeps.
    """
    if q is None:
        w = w.copy()
        np.fill_diagonal(w, 1.0)
        return w
    for _ in range(_AFFINE_INNER_CAP):
        w = _project_attribute_nullspace(w, q)
        np.fill_diagonal(w, 1.0)
        if np.abs(q.T @ w).max(initial=0.0) <= _AFFINE_INNER_TOL:
            break
    return 0.5 * (w + w.T)


def _psd_project(w: np.ndarray) -> np.ndarray:
    spec = eig_sym(0.5 * (w + w.T), check=False)
    lam = np.clip(spec.eigenvalues, 0.0, None)
    v = spec.eigenvectors
    return (v * lam) @ v.T


def solve_sdp(x: np.ndarray, attributes=(), cfg: SdpConfig | None = None) -> SdpSolution:
    """Solve max <X, Y> s.t. diag(Y) = 1, a_i^T Y a_i = 0, Y >= 0 by ADMM."""
    cfg = cfg or SdpConfig()
    x = _validate_observation_matrix(x)
    n = x.shape[0]
    basis = _attribute_basis(list(attributes), n)

    rho = cfg.penalty
    root_n = float(np.sqrt(n))
    z = np.eye(n)
    u = np.zeros((n, n))
    y = np.eye(n)
    best = None  # (score, y, iters, r, s)
    status = "iteration-cap"
    iters = 0
    primal = dual = np.inf
    for it in range(1, cfg.max_iters + 1):
        iters = it
        y = _affine_project(z - u + x / rho, basis)
        z_prev = z
        z = _psd_project(y + u)
        u = u + (y - z)
        if not np.isfinite(y).all() or not np.isfinite(z).all():
            raise NumericFailureError("ADMM iterates diverged to non-finite values")
        primal = float(np.linalg.norm(y - z))
        dual = float(rho * np.linalg.norm(z - z_prev))
        score = max(primal, dual)
        if best is None or score < best[0]:
            best = (score, y.copy(), it, primal, dual)
        if primal <= cfg.primal_tol * root_n and dual <= cfg.dual_tol * root_n:
            status = "converged"
            break
        if it % 25 == 0:
            if primal > 10.0 * dual:
                rho *= 2.0
                u /= 2.0
            elif dual > 10.0 * primal:
                rho /= 2.0
                u *= 2.0
    if status == "converged":
        y_out, it_out, r_out, s_out = y, iters, primal, dual
    else:
        _, y_out, it_out, r_out, s_out = best
    return SdpSolution(
        y_matrix=y_out,
        objective=float(np.sum(x * y_out)),
        status=status,
        iterations=it_out,
        primal_residual=r_out,
        dual_residual=s_out,
    )


def round_solution(sol: SdpSolution, c: np.ndarray) -> np.ndarray:
    """Signs of the top eigenvector of Y, sign-disambiguated by majority vote.

    sign(0) counts as +1; the whole vector flips iff c^T y_hat < 0 (ties keep
    the unflipped vector).
    """
    spec = eig_sym(sol.y_matrix, check=False)
    top = spec.eigenvectors[:, -1]
    y_hat = np.where(top >= 0, 1, -1).astype(np.int64)
    c = np.asarray(c)
    if float(c @ y_hat) < 0:
        y_hat = -y_hat
    return y_hat


def dual_certificate(x: np.ndarray, attributes, y_bar: np.ndarray) -> CertificateReport:
    """KKT certificate Lambda = V - X + n * sum a_i a_i^T with V_ii = (X Ybar)_ii.

    y_bar is always in the null space of Lambda; lambda_2(Lambda) > 0
    certifies that y_bar y_bar^T is the unique SDP optimum.
    """
    x = _validate_observation_matrix(x)
    y = np.asarray(y_bar, dtype=float)
    if not np.all(np.abs(y) == 1):
        raise InvalidArgumentError("y_bar entries must be +/-1")
    n = x.shape[0]
    v_diag = (x @ y) * y
    lam_mat = np.diag(v_diag) - x
    for a in attributes:
        a = np.asarray(a, dtype=float)
        lam_mat = lam_mat + n * np.outer(a, a)
    w = eig_sym(lam_mat).eigenvalues
    lam2 = float(w[1])
    resid = float(np.linalg.norm(lam_mat @ y))
    return CertificateReport(
        lambda2_of_Lambda=lam2, holds=lam2 > CERTIFICATE_TOL, residual_null=resid
    )


def brute_force(
    x: np.ndarray,
    c: np.ndarray,
    attributes=(),
    alpha_val: float = 0.0,
    feas_tol: float = 1e-6,
) -> tuple[np.ndarray, float]:
    """Exact maximizer of 0.5 y^T X y + alpha c^T y over feasible sign vectors.

    Enumerates all 2^n sign vectors (n <= 20), keeping those with
    |<a_i, y>| <= feas_tol * ||a_i|| for every attribute.  Ties go to the
    lexicographically smallest vector with +1 ordered before -1.  With
    generic real attributes the feasible set is exactly {+/-y_bar}, which is
    precisely why the parity constraint helps.
    """
    x = np.asarray(x, dtype=float)
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    if x.shape != (n, n):
        raise InvalidArgumentError("shape mismatch between x and c")
    if n > BRUTE_FORCE_MAX_N:
        raise SizeLimitError(f"brute force supports n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if feas_tol < 0:
        raise InvalidArgumentError("feas_tol must be nonnegative")
    attr = [np.asarray(a, dtype=float) for a in attributes]
    bounds = [feas_tol * float(np.linalg.norm(a)) for a in attr]

    best_obj = -np.inf
    best_y = None
    chunk = 1 << min(n, 14)
    # Counter bit n-1-j holds label j, with bit 0 meaning +1, so ascending
    # counter order is lexicographic order with +1 < -1.
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    for start in range(0, 1 << n, chunk):
        idx = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint64)
        bits = (idx[:, None] >> shifts[None, :]) & 1
        ys = 1.0 - 2.0 * bits  # (chunk, n) in {+1, -1}
        feasible = np.ones(ys.shape[0], dtype=bool)
        for a, b in zip(attr, bounds):
            feasible &= np.abs(ys @ a) <= b
        if not feasible.any():
            continue
        ys = ys[feasible]
        obj = 0.5 * np.einsum("ij,jk,ik->i", ys, x, ys) + alpha_val * (ys @ c)
        j = int(np.argmax(obj))  # argmax keeps the first (lexicographic) winner
        if obj[j] > best_obj:
            best_obj = float(obj[j])
            best_y = ys[j]
    if best_y is None:
        raise InfeasibleError("no sign vector satisfies the parity constraints")
    return best_y.astype(np.int64), best_obj


def check_exact_recovery(y_hat: np.ndarray, y_bar: np.ndarray) -> bool:
    y_hat = np.asarray(y_hat)
    y_bar = np.asarray(y_bar)
    if y_hat.shape != y_bar.shape:
        raise InvalidArgumentError("label vectors must have equal length")
    return bool(np.array_equal(y_hat, y_bar))
