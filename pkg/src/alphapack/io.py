"""JSON formats for instances and solutions."""

from __future__ import annotations

import json
from pathlib import Path

from .model import Graph, Instance, P2Packing, SetPacking, ThreeSetFamily, TripartiteFamily

__all__ = [
    "instance_to_json",
    "instance_from_json",
    "solution_to_json",
    "solution_from_json",
    "read_instance",
    "write_instance",
    "read_solution",
    "write_json",
]


def instance_to_json(inst: Instance) -> dict:
    p = inst.problem
    out: dict = {"kind": inst.kind}
    if isinstance(p, Graph):
        out["n"] = p.n
        out["edges"] = [list(e) for e in p.edges]
    elif isinstance(p, TripartiteFamily):
        out["sizes"] = list(p.sizes)
        out["sets"] = [list(s) for s in p.sets]
    else:
        out["n"] = p.n
        out["sets"] = [list(s) for s in p.sets]
    if inst.planted is not None:
        out["planted"] = [list(s) for s in inst.planted]
    if inst.seed is not None:
        out["seed"] = inst.seed
    return out


def instance_from_json(data: dict) -> Instance:
    kind = data.get("kind")
    if kind == "p2":
        problem = Graph(data["n"], data.get("edges", []))
    elif kind == "3sp":
        problem = ThreeSetFamily(data["n"], data.get("sets", []))
    elif kind == "3dm":
        problem = TripartiteFamily(data["sizes"], data.get("sets", []))
    else:
        raise ValueError(f"unknown instance kind {kind!r}")
    planted = data.get("planted")
    planted = None if planted is None else tuple(tuple(s) for s in planted)
    return Instance(kind, problem, planted, data.get("seed"))


def solution_to_json(packing) -> dict:
    if isinstance(packing, P2Packing):
        return {"paths": [list(p) for p in packing.paths]}
    return {"sets": list(packing.chosen)}


def solution_from_json(data: dict):
    if "solution" in data:
        data = data["solution"]
    if "paths" in data:
        return P2Packing(tuple(tuple(p) for p in data["paths"]))
    if "sets" in data:
        return SetPacking(tuple(data["sets"]))
    raise ValueError("solution needs a 'paths' or 'sets' field")


def write_json(data: dict, path: str | Path | None) -> str:
    text = json.dumps(data, indent=2) + "\n"
    if path is not None and str(path) != "-":
        Path(path).write_text(text)
    return text


def write_instance(inst: Instance, path: str | Path | None) -> str:
    return write_json(instance_to_json(inst), path)


def read_instance(path: str | Path) -> Instance:
    return instance_from_json(json.loads(Path(path).read_text()))


def read_solution(path: str | Path):
    return solution_from_json(json.loads(Path(path).read_text()))
