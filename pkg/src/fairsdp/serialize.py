"""File formats: edge-list text, instance/observation JSON, run manifests.

Edge-list format: first line "n m", then m lines "u v" with 0-indexed u < v.
JSON numbers are emitted via Python's shortest round-trip repr, which
preserves doubles exactly.
"""
from __future__ import annotations

import datetime
import json
from typing import Any

import numpy as np

from .errors import InvalidArgumentError
from .graphs import Graph
from .model import Instance, Observation

ARTIFACT_VERSION = "0.1.0"
PRNG_ALGORITHM = "numpy PCG64 (default_rng) with SeedSequence sub-seeding"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(f"{g.n} {g.num_edges}\n")
        for u, v in g.sorted_edges():
            f.write(f"{u} {v}\n")


def read_edge_list(path) -> Graph:
    with open(path) as f:
        tokens = f.read().split()
    if len(tokens) < 2:
        raise InvalidArgumentError(f"{path}: missing 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise InvalidArgumentError(f"{path}: expected {m} edges, found malformed body")
    edges = []
    for i in range(m):
        u, v = int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])
        if not u < v:
            raise InvalidArgumentError(f"{path}: edge lines require u < v, got {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)


def instance_to_dict(inst: Instance, obs: Observation | None = None, seed: int | None = None) -> dict:
    d: dict[str, Any] = {
        "n": inst.graph.n,
        "edges": [list(e) for e in inst.graph.sorted_edges()],
        "y_bar": [int(v) for v in inst.y_bar],
        "attributes": [[float(x) for x in a] for a in inst.attributes],
    }
    if obs is not None:
        d["x_entries"] = [
            [u, v, int(obs.x[u, v])] for u, v in inst.graph.sorted_edges()
        ]
        d["c"] = [int(v) for v in obs.c]
        d["p"] = obs.p
        d["q"] = obs.q
    if seed is not None:
        d["seed"] = int(seed)
    return d


def instance_from_dict(d: dict) -> tuple[Instance, Observation | None]:
    g = Graph(int(d["n"]), [tuple(e) for e in d["edges"]])
    inst = Instance(
        graph=g,
        y_bar=np.array(d["y_bar"], dtype=np.int64),
        attributes=[np.array(a, dtype=float) for a in d.get("attributes", [])],
    )
    obs = None
    if "x_entries" in d:
        x = np.zeros((g.n, g.n), dtype=np.int64)
        for u, v, s in d["x_entries"]:
            x[u, v] = x[v, u] = s
        obs = Observation(
            graph=g,
            x=x,
            c=np.array(d["c"], dtype=np.int64),
            p=float(d["p"]),
            q=float(d["q"]),
        )
    return inst, obs


def make_manifest(command: str, parameters: dict, seed: int | None) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "seed": seed,
        "artifact_version": ARTIFACT_VERSION,
        "prng": PRNG_ALGORITHM,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def dump_json(obj, path_or_none=None) -> str:
    text = json.dumps(obj, indent=2) + "\n"
    if path_or_none is not None:
        with open(path_or_none, "w", newline="\n") as f:
            f.write(text)
    return text
