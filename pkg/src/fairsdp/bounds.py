"""Eigenvalue perturbation bound and the exact-recovery probability bound.

lemma1_bound gives a lower bound on lambda_1(M + alpha*N) for PSD M and
low-rank PSD N that is never worse than Weyl's inequality and is tight when
alpha = 0 or when N is rank-1 with a degenerate bottom of M's spectrum.

The recovery bound combines the fairness term eps1 (the perturbation bound
applied with alpha = n to the attribute Gram matrix), the expansion term
eps2 = (1 - 2p) * phi^2 / (4 deg_max), and a matrix Bernstein tail:
    P(exact recovery) >= 1 - 2n * exp(-3 (eps1+eps2)^2 / (24 sigma^2 + 8 R (eps1+eps2)))
with sigma^2 = 4 p (1-p) deg_max and R = 2 (1-p).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, NumericFailureError, StructuralError
from .graphs import CheegerResult, Graph, edge_expansion, EXACT_EXPANSION_MAX_N
from .spectral import eig_sym, fiedler_vector, laplacian_gap_delta

_PSD_ATOL = 1e-9
_RANK_RTOL = 1e-9


@dataclass(frozen=True)
class BoundReport:
    eps1: float
    eps2: float
    sigma_sq: float
    r_const: float
    prob_lower_bound: float  # may be negative (vacuous); returned unclamped
    phi_used: float
    phi_mode: str  # "exact" | "spectral-lower"


def _bracket(alpha_i: float, delta: float, proj_sq: float) -> float:
    """(a+D)/2 - sqrt(((a+D)/2)^2 - a*D*proj^2), clamped against fp noise."""
    term = alpha_i * delta * proj_sq
    if term == 0.0:
        return 0.0
    half = 0.5 * (alpha_i + delta)
    rad = half * half - term
    if rad < -1e-12 * max(1.0, half * half):
        raise NumericFailureError("negative radicand in perturbation bound")
    return half - math.sqrt(max(rad, 0.0))


def lemma1_bound(m: np.ndarray, n_mat: np.ndarray, alpha_scale: float) -> float:
    """Lower bound on lambda_1(M + alpha*N) from the rank-structured inequality."""
    if alpha_scale < 0:
        raise InvalidArgumentError("alpha_scale must be nonnegative")
    sm = eig_sym(np.asarray(m, dtype=float))
    sn = eig_sym(np.asarray(n_mat, dtype=float))
    if sm.eigenvalues[0] < -_PSD_ATOL or sn.eigenvalues[0] < -_PSD_ATOL:
        raise InvalidArgumentError("both matrices must be positive semidefinite")
    lam1 = float(sm.eigenvalues[0])
    if alpha_scale == 0.0:
        return lam1
    delta = float(sm.eigenvalues[1] - sm.eigenvalues[0])
    q1 = sm.eigenvectors[:, 0]
    lam_max = float(sn.eigenvalues[-1])
    if lam_max <= 0.0:
        return lam1
    thresh = _RANK_RTOL * lam_max
    best = 0.0
    for lam, v in zip(sn.eigenvalues, sn.eigenvectors.T):
        if lam <= thresh:
            continue
        proj_sq = float(v @ q1) ** 2
        best = max(best, _bracket(alpha_scale * float(lam), delta, proj_sq))
    return lam1 + best


def weyl_bound(m: np.ndarray, n_mat: np.ndarray, alpha_scale: float) -> float:
    """Weyl's inequality: lambda_1(M) + alpha * lambda_1(N)."""
    lam1_m = float(np.linalg.eigvalsh(np.asarray(m, dtype=float))[0])
    lam1_n = float(np.linalg.eigvalsh(np.asarray(n_mat, dtype=float))[0])
    return lam1_m + alpha_scale * lam1_n


def epsilon1(g: Graph, attributes) -> float:
    """Fairness term: the perturbation bound with alpha = n on N = sum a_i a_i^T.

    Zero whenever there are no attributes or the Laplacian gap
    lambda_3 - lambda_2 vanishes (degenerate algebraic connectivity).
    """
    attrs = [np.asarray(a, dtype=float) for a in attributes]
    if not attrs:
        return 0.0
    delta = laplacian_gap_delta(g)
    if delta == 0.0:
        return 0.0
    pi2 = fiedler_vector(g)
    n = g.n
    n_mat = np.zeros((n, n))
    for a in attrs:
        n_mat += np.outer(a, a)
    sn = eig_sym(n_mat)
    lam_max = float(sn.eigenvalues[-1])
    if lam_max <= 0.0:
        return 0.0
    thresh = _RANK_RTOL * lam_max
    k = len(attrs)
    best = 0.0
    for lam, v in zip(sn.eigenvalues[-k:], sn.eigenvectors[:, -k:].T):
        if lam <= thresh:
            continue
        proj_sq = float(v @ pi2) ** 2
        best = max(best, _bracket(n * float(lam), delta, proj_sq))
    return best


def epsilon2(g: Graph, p: float, phi: CheegerResult) -> float:
    """Expansion term (1 - 2p) * phi_G^2 / (4 deg_max)."""
    if not (0.0 < p < 0.5):
        raise InvalidArgumentError(f"p must lie in (0, 0.5), got {p}")
    phi_val = phi.phi if phi.method == "exact" else phi.lower
    deg_max = int(g.degrees().max())
    return (1.0 - 2.0 * p) * phi_val * phi_val / (4.0 * deg_max)


def recovery_probability_bound(
    g: Graph, attributes, p: float, phi: CheegerResult | None = None
) -> BoundReport:
    """Assemble every quantity in the recovery bound into one report.

    phi defaults to exact enumeration for n <= 24 and to the conservative
    spectral lower bound above that (which keeps the bound valid).
    """
    if not g.is_connected():
        raise StructuralError("the recovery bound assumes a connected graph")
    if phi is None:
        mode = "exact" if g.n <= EXACT_EXPANSION_MAX_N else "spectral"
        phi = edge_expansion(g, mode)
    eps1 = epsilon1(g, attributes)
    eps2 = epsilon2(g, p, phi)
    deg_max = int(g.degrees().max())
    sigma_sq = 4.0 * p * (1.0 - p) * deg_max
    r_const = 2.0 * (1.0 - p)
    eps = eps1 + eps2
    if eps == 0.0:
        prob = 1.0 - 2.0 * g.n
    else:
        exponent = -3.0 * eps * eps / (24.0 * sigma_sq + 8.0 * r_const * eps)
        prob = 1.0 - 2.0 * g.n * math.exp(exponent)
    phi_used = phi.phi if phi.method == "exact" else phi.lower
    return BoundReport(
        eps1=eps1,
        eps2=eps2,
        sigma_sq=sigma_sq,
        r_const=r_const,
        prob_lower_bound=prob,
        phi_used=phi_used,
        phi_mode="exact" if phi.method == "exact" else "spectral-lower",
    )
