"""Seeded Monte-Carlo harnesses for the gap statistics and recovery curves.

Every trial derives its generator from a SeedSequence over
(seed, stream tag, indices), so runs are reproducible and trials are
independent; identical seeds produce byte-identical CSV files.
"""
from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, NumericFailureError
from .graphs import Graph, erdos_renyi, grid, laplacian
from .model import Instance, observe, sample_fair_attributes, sample_labels
from .solver import SdpConfig, check_exact_recovery, dual_certificate, round_solution, solve_sdp
from .spectral import gap_from_eigenvalues

# Stream tags keeping the per-purpose substreams disjoint.
_TAG_GRAPH = 1
_TAG_TRUTH = 2
_TAG_ATTR = 3
_TAG_OBS = 4


@dataclass(frozen=True)
class GapStatsRow:
    n: int
    r_spec: str
    trials: int
    prob_delta_positive: float
    mean_delta: float


@dataclass(frozen=True)
class RecoveryCurveRow:
    p: float
    k: int
    trials: int
    recovery_rate: float
    certificate_rate: float
    solver_failures: int = 0


def subseed(seed: int, *parts: int) -> int:
    """Deterministic 64-bit sub-seed derived from (seed, parts)."""
    ss = np.random.SeedSequence([int(seed), *[int(x) for x in parts]])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def resolve_edge_probability(r_spec: str, n: int) -> float:
    """Map an edge-probability spec string to a value for a given n.

    Accepts a float literal, "2logn/n" (= 2 ln(n)/n, the connectivity-threshold
    reading), or the literal "2^logn/n" (= 2^(ln(n)/n)); results clamp to 1.
    """
    spec = r_spec.strip().lower().replace(" ", "")
    if spec == "2logn/n":
        return min(1.0, 2.0 * math.log(n) / n)
    if spec == "2^logn/n":
        return min(1.0, 2.0 ** (math.log(n) / n))
    try:
        r = float(spec)
    except ValueError:
        raise InvalidArgumentError(f"unrecognized edge-probability spec {r_spec!r}")
    if not (0.0 <= r <= 1.0):
        raise InvalidArgumentError(f"edge probability must be in [0,1], got {r}")
    return r


def run_fig1(n_values, r_spec: str, trials: int, seed: int) -> list[GapStatsRow]:
    """Gap statistics over Erdos-Renyi draws.

    For each n, draws `trials` graphs ER(n, r) and computes the Laplacian gap
    lambda_3 - lambda_2 (clamped at the multiplicity tolerance); disconnected
    draws contribute their gap as-is.  Reports the fraction with a positive
    gap and the mean gap.
    """
    if trials < 1:
        raise InvalidArgumentError("trials must be >= 1")
    rows = []
    for n_idx, n in enumerate(n_values):
        if n < 3:
            raise InvalidArgumentError("gap statistics need n >= 3")
        r = resolve_edge_probability(r_spec, n)
        deltas = np.empty(trials)
        for t in range(trials):
            g = erdos_renyi(n, r, subseed(seed, _TAG_GRAPH, n_idx, t))
            w = np.linalg.eigvalsh(laplacian(g))
            deltas[t] = gap_from_eigenvalues(w)
        rows.append(
            GapStatsRow(
                n=int(n),
                r_spec=r_spec,
                trials=trials,
                prob_delta_positive=float(np.mean(deltas > 0.0)),
                mean_delta=float(np.mean(deltas)),
            )
        )
    return rows


def _fig2_trial(g: Graph, trial: int, p_values, k_values, seed: int, q, cfg, fixed_truth):
    """One planted truth, one observation per (p, k) cell; returns outcome flags."""
    truth_trial = 0 if fixed_truth else trial
    y_bar = sample_labels(g.n, subseed(seed, _TAG_TRUTH, truth_trial))
    k_max = max(k_values)
    attrs = sample_fair_attributes(y_bar, k_max, subseed(seed, _TAG_ATTR, truth_trial))
    inst = Instance(graph=g, y_bar=y_bar, attributes=attrs)
    out = {}
    for p_idx, p in enumerate(p_values):
        for k in k_values:
            q_eff = p if q is None else q
            obs = observe(inst, p, q_eff, subseed(seed, _TAG_OBS, p_idx, k, trial))
            used = attrs[:k]
            cert = dual_certificate(obs.x, used, y_bar)
            try:
                sol = solve_sdp(obs.x, used, cfg)
                y_hat = round_solution(sol, obs.c)
                recovered = check_exact_recovery(y_hat, y_bar)
                failed = False
            except NumericFailureError:
                recovered = False
                failed = True
                sol = None
            out[(p_idx, k)] = (recovered, cert.holds, failed, (sol, used))
    return out


def run_fig2(
    rows: int,
    cols: int,
    p_values,
    k_values,
    trials: int,
    seed: int,
    q: float | None = None,
    cfg: SdpConfig | None = None,
    fixed_truth: bool = False,
    threads: int = 1,
    collect_solutions: bool = False,
) -> list[RecoveryCurveRow] | tuple[list[RecoveryCurveRow], list]:
    """Recovery curves on Grid(rows, cols) with 0..2 parity constraints.

    q defaults to p (recorded divergence knob: the reference experiment does
    not state the node noise).  With fixed_truth the planted labeling is
    shared across trials instead of resampled.
    """
    if rows * cols > 400:
        raise InvalidArgumentError("dense solver budget is rows*cols <= 400")
    if not set(k_values) <= {0, 1, 2}:
        raise InvalidArgumentError("constraint counts must lie in {0, 1, 2}")
    if trials < 1:
        raise InvalidArgumentError("trials must be >= 1")
    for p in p_values:
        if not (0.0 <= p < 0.5):
            raise InvalidArgumentError(f"p must lie in [0, 0.5), got {p}")
    g = grid(rows, cols)
    p_values = list(p_values)
    k_values = sorted(set(int(k) for k in k_values))

    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(
                    lambda t: _fig2_trial(g, t, p_values, k_values, seed, q, cfg, fixed_truth),
                    range(trials),
                )
            )
    else:
        results = [
            _fig2_trial(g, t, p_values, k_values, seed, q, cfg, fixed_truth)
            for t in range(trials)
        ]

    out_rows = []
    solutions = []
    for p_idx, p in enumerate(p_values):
        for k in k_values:
            cell = [res[(p_idx, k)] for res in results]
            out_rows.append(
                RecoveryCurveRow(
                    p=float(p),
                    k=k,
                    trials=trials,
                    recovery_rate=sum(r for r, _, _, _ in cell) / trials,
                    certificate_rate=sum(h for _, h, _, _ in cell) / trials,
                    solver_failures=sum(f for _, _, f, _ in cell),
                )
            )
            if collect_solutions:
                solutions.extend(s for _, _, _, s in cell if s is not None)
    if collect_solutions:
        return out_rows, solutions
    return out_rows


def write_gap_stats_csv(rows_out, path) -> None:
    with open(path, "w", newline="\n") as f:
        f.write("n,r_spec,trials,prob_delta_positive,mean_delta\n")
        for r in rows_out:
            f.write(
                f"{r.n},{r.r_spec},{r.trials},{r.prob_delta_positive!r},{r.mean_delta!r}\n"
            )


def write_recovery_csv(rows_out, path) -> None:
    with open(path, "w", newline="\n") as f:
        f.write("p,k,trials,recovery_rate,certificate_rate\n")
        for r in rows_out:
            f.write(f"{r.p!r},{r.k},{r.trials},{r.recovery_rate!r},{r.certificate_rate!r}\n")
