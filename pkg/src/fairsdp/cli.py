"""Command-line entry point.

Subcommands: graph, spectrum, model, solve, bound, experiment.  All
randomness enters through --seed (wall-clock seeding is deliberately not
supported).  Data goes to files or stdout; diagnostics to stderr.  Exit
codes: 0 success, 1 runtime failure, 2 invalid arguments.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bounds, experiments, graphs, model, solver, spectral
from .errors import FairSdpError, InvalidArgumentError
from .serialize import (
    ARTIFACT_VERSION,
    PRNG_ALGORITHM,
    dump_json,
    instance_from_dict,
    instance_to_dict,
    make_manifest,
    read_edge_list,
    write_edge_list,
)


def _parse_range(spec: str) -> list[float]:
    """'a:b:s' inclusive range, or a comma-separated list."""
    if ":" in spec:
        a, b, s = (float(x) for x in spec.split(":"))
        if s <= 0:
            raise InvalidArgumentError("range step must be positive")
        count = int(round((b - a) / s)) + 1
        return [a + i * s for i in range(count) if a + i * s <= b + 1e-12]
    return [float(x) for x in spec.split(",")]


def _parse_int_list(spec: str) -> list[int]:
    return [int(round(v)) for v in _parse_range(spec)]


def _cmd_graph_gen(args) -> int:
    params = [p for p in (args.params or "").split(",") if p]
    fam = args.family
    if fam == "grid":
        g = graphs.grid(int(params[0]), int(params[1]))
    elif fam == "complete":
        g = graphs.complete(int(params[0]))
    elif fam == "star":
        g = graphs.star(int(params[0]))
    elif fam == "cjoin":
        g = graphs.complement_join(int(params[0]), int(params[1]))
    elif fam == "er":
        if args.seed is None:
            raise InvalidArgumentError("--seed is required for the er family")
        g = graphs.erdos_renyi(int(params[0]), float(params[1]), args.seed)
    else:  # pragma: no cover - argparse choices guard this
        raise InvalidArgumentError(f"unknown family {fam}")
    write_edge_list(g, args.out)
    dump_json(
        make_manifest("graph gen", {"family": fam, "params": args.params}, args.seed),
        args.out + ".manifest.json",
    )
    return 0


def _cmd_spectrum(args) -> int:
    out: dict = {}
    if args.closed_form_grid:
        m, n = args.closed_form_grid
        w = spectral.grid_spectrum_closed_form(m, n)
        out["eigenvalues"] = [float(v) for v in w]
        out["delta"] = spectral.gap_from_eigenvalues(w) if len(w) >= 3 else None
        out["fiedler"] = None
        out["multiplicity_flag"] = None
    else:
        if not args.graph:
            raise InvalidArgumentError("--graph is required without --closed-form-grid")
        g = read_edge_list(args.graph)
        spec = spectral.eig_sym(graphs.laplacian(g))
        w = spec.eigenvalues
        out["eigenvalues"] = [float(v) for v in w]
        out["delta"] = spectral.gap_from_eigenvalues(w) if g.n >= 3 and g.is_connected() else None
        if g.is_connected():
            out["fiedler"] = [float(v) for v in spectral.fiedler_vector(g)]
            out["multiplicity_flag"] = spectral.algebraic_multiplicity(g) > 1
        else:
            out["fiedler"] = None
            out["multiplicity_flag"] = None
    out["manifest"] = make_manifest("spectrum", {"graph": args.graph}, None)
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_model_gen(args) -> int:
    g = read_edge_list(args.graph)
    y_bar = model.sample_labels(g.n, experiments.subseed(args.seed, 1))
    attrs = model.sample_fair_attributes(y_bar, args.k, experiments.subseed(args.seed, 2))
    inst = model.Instance(graph=g, y_bar=y_bar, attributes=attrs)
    obs = model.observe(inst, args.p, args.q, experiments.subseed(args.seed, 3))
    doc = instance_to_dict(inst, obs, seed=args.seed)
    doc["manifest"] = make_manifest(
        "model gen",
        {"graph": args.graph, "k": args.k, "p": args.p, "q": args.q},
        args.seed,
    )
    dump_json(doc, args.out)
    return 0


def _cmd_solve(args) -> int:
    import json

    with open(args.instance) as f:
        doc = json.load(f)
    inst, obs = instance_from_dict(doc)
    if obs is None:
        raise InvalidArgumentError("instance file carries no observation to solve")
    cfg = solver.SdpConfig()
    if args.config:
        with open(args.config) as f:
            cfg = solver.SdpConfig(**json.load(f))
    sol = solver.solve_sdp(obs.x.astype(float), inst.attributes, cfg)
    y_hat = solver.round_solution(sol, obs.c)
    cert = solver.dual_certificate(obs.x.astype(float), inst.attributes, inst.y_bar)
    out = {
        "objective": sol.objective,
        "status": sol.status,
        "iterations": sol.iterations,
        "labels": [int(v) for v in y_hat],
        "recovered": solver.check_exact_recovery(y_hat, inst.y_bar),
        "certificate": {"lambda2": cert.lambda2_of_Lambda, "holds": cert.holds},
        "manifest": make_manifest(
            "solve", {"instance": args.instance, "config": args.config}, None
        ),
    }
    dump_json(out, args.out)
    return 0


def _cmd_bound(args) -> int:
    import json

    with open(args.instance) as f:
        doc = json.load(f)
    inst, _ = instance_from_dict(doc)
    g = read_edge_list(args.graph) if args.graph else inst.graph
    report = bounds.recovery_probability_bound(g, inst.attributes, args.p)
    out = {
        "eps1": report.eps1,
        "eps2": report.eps2,
        "sigma_sq": report.sigma_sq,
        "r_const": report.r_const,
        "prob_lower_bound": report.prob_lower_bound,
        "phi_used": report.phi_used,
        "phi_mode": report.phi_mode,
        "manifest": make_manifest(
            "bound", {"graph": args.graph, "instance": args.instance, "p": args.p}, None
        ),
    }
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_experiment_fig1(args) -> int:
    rows = experiments.run_fig1(_parse_int_list(args.n), args.r, args.trials, args.seed)
    experiments.write_gap_stats_csv(rows, args.out)
    dump_json(
        make_manifest(
            "experiment fig1", {"n": args.n, "r": args.r, "trials": args.trials}, args.seed
        ),
        args.out + ".manifest.json",
    )
    return 0


def _cmd_experiment_fig2(args) -> int:
    rows_s, cols_s = args.grid.lower().split("x")
    rows = experiments.run_fig2(
        int(rows_s),
        int(cols_s),
        _parse_range(args.p),
        _parse_int_list(args.k),
        args.trials,
        args.seed,
        q=args.q,
        fixed_truth=args.fixed_truth,
        threads=args.threads,
    )
    experiments.write_recovery_csv(rows, args.out)
    dump_json(
        make_manifest(
            "experiment fig2",
            {
                "grid": args.grid,
                "p": args.p,
                "k": args.k,
                "trials": args.trials,
                "q": args.q,
                "fixed_truth": args.fixed_truth,
            },
            args.seed,
        ),
        args.out + ".manifest.json",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fairsdp")
    parser.add_argument(
        "--version",
        action="version",
        version=f"fairsdp {ARTIFACT_VERSION} ({PRNG_ALGORITHM})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="graph generation")
    graph_sub = p_graph.add_subparsers(dest="subcommand", required=True)
    p_gen = graph_sub.add_parser("gen")
    p_gen.add_argument("--family", required=True, choices=["grid", "complete", "star", "cjoin", "er"])
    p_gen.add_argument("--params", required=True, help="comma-separated family parameters")
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_graph_gen)

    p_spec = sub.add_parser("spectrum", help="Laplacian spectrum, gap, Fiedler vector")
    p_spec.add_argument("--graph")
    p_spec.add_argument("--closed-form-grid", nargs=2, type=int, metavar=("M", "N"))
    p_spec.set_defaults(func=_cmd_spectrum)

    p_model = sub.add_parser("model", help="instance sampling")
    model_sub = p_model.add_subparsers(dest="subcommand", required=True)
    p_mgen = model_sub.add_parser("gen")
    p_mgen.add_argument("--graph", required=True)
    p_mgen.add_argument("--k", type=int, required=True)
    p_mgen.add_argument("--p", type=float, required=True)
    p_mgen.add_argument("--q", type=float, required=True)
    p_mgen.add_argument("--seed", type=int, required=True)
    p_mgen.add_argument("--out", required=True)
    p_mgen.set_defaults(func=_cmd_model_gen)

    p_solve = sub.add_parser("solve", help="solve the SDP and round labels")
    p_solve.add_argument("--instance", required=True)
    p_solve.add_argument("--config")
    p_solve.add_argument("--out", required=True)
    p_solve.set_defaults(func=_cmd_solve)

    p_bound = sub.add_parser("bound", help="evaluate the recovery bound")
    p_bound.add_argument("--graph")
    p_bound.add_argument("--instance", required=True)
    p_bound.add_argument("--p", type=float, required=True)
    p_bound.set_defaults(func=_cmd_bound)

    p_exp = sub.add_parser("experiment", help="Monte-Carlo harnesses")
    exp_sub = p_exp.add_subparsers(dest="subcommand", required=True)
    p_f1 = exp_sub.add_parser("fig1")
    p_f1.add_argument("--n", required=True, help="node counts, e.g. 10:100:10 or 10,20")
    p_f1.add_argument("--r", required=True, help="edge probability spec, e.g. 0.99 or 2logn/n")
    p_f1.add_argument("--trials", type=int, default=1000)
    p_f1.add_argument("--seed", type=int, required=True)
    p_f1.add_argument("--out", required=True)
    p_f1.set_defaults(func=_cmd_experiment_fig1)
    p_f2 = exp_sub.add_parser("fig2")
    p_f2.add_argument("--grid", required=True, help="RxC, e.g. 4x16")
    p_f2.add_argument("--p", required=True, help="edge noise sweep, e.g. 0:0.1:0.01")
    p_f2.add_argument("--k", default="0,1,2")
    p_f2.add_argument("--trials", type=int, default=30)
    p_f2.add_argument("--seed", type=int, required=True)
    p_f2.add_argument("--q", type=float, default=None, help="node noise (default: q = p)")
    p_f2.add_argument("--threads", type=int, default=1)
    p_f2.add_argument("--fixed-truth", action="store_true")
    p_f2.add_argument("--out", required=True)
    p_f2.set_defaults(func=_cmd_experiment_fig2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FairSdpError, OSError, ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
