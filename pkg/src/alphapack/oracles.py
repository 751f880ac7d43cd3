"""Brute-force ground truth, solution checks and planted instance generation."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .model import (
    Graph,
    Instance,
    P2Packing,
    SetPacking,
    ThreeSetFamily,
    TripartiteFamily,
    elements_of,
    mask_of,
)

__all__ = [
    "brute_opt_3set",
    "brute_opt_3dm",
    "brute_opt_p2",
    "brute_opt_center_left",
    "brute_representation_check",
    "verify_solution",
    "solution_errors",
    "plant_instance",
]

MAX_SETS = 25
MAX_NODES = 15


def _max_packing(masks: Sequence[int]) -> tuple[int, list[int]]:
    """Maximum disjoint subfamily by branch and bound; returns (size, indices)."""
    order = sorted(range(len(masks)), key=lambda j: ((masks[j] & -masks[j]).bit_length(), j))
    best: list[int] = []

    def rec(pos: int, used: int, cur: list[int]) -> None:
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        # every remaining set needs 3 fresh elements
        remaining = len(order) - pos
        if len(cur) + remaining <= len(best):
            return
        for p in range(pos, len(order)):
            j = order[p]
            if masks[j] & used == 0:
                cur.append(j)
                rec(p + 1, used | masks[j], cur)
                cur.pop()
                if len(cur) + len(order) - p - 1 <= len(best):
                    return

    rec(0, 0, [])
    return len(best), sorted(best)


def brute_opt_3set(family: ThreeSetFamily, limit: int = MAX_SETS) -> tuple[int, SetPacking]:
    if len(family.sets) > limit:
        raise ValueError(f"brute force limited to {limit} sets")
    size, witness = _max_packing(family.masks())
    return size, SetPacking(tuple(witness))


def brute_opt_3dm(family: TripartiteFamily, limit: int = MAX_SETS) -> tuple[int, SetPacking]:
    if len(family.sets) > limit:
        raise ValueError(f"brute force limited to {limit} sets")
    size, witness = _max_packing(family.masks())
    return size, SetPacking(tuple(witness))


def brute_opt_p2(G: Graph, limit: int = MAX_NODES) -> tuple[int, P2Packing]:
    """Maximum number of node-disjoint paths on three nodes."""
    if G.n > limit:
        raise ValueError(f"brute force limited to {limit} nodes")
    adj = G.adjacency()
    paths = []
    for m in range(G.n):
        for a, b in combinations(sorted(adj[m]), 2):
            paths.append((a, m, b))
    size, witness = _max_packing([mask_of(p) for p in paths])
    return size, P2Packing(tuple(paths[j] for j in witness))


def brute_opt_center_left(left: Sequence[int], right: Sequence[int],
                          edges: Sequence[Sequence[int]]) -> int:
    """Maximum packing of right-left-right paths, by enumeration."""
    nbrs: dict[int, list[int]] = {l: [] for l in left}
    for l, r in edges:
        nbrs[l].append(r)
    paths = [(x, l, y) for l in left for x, y in combinations(sorted(set(nbrs[l])), 2)]
    return _max_packing([mask_of(p) for p in paths])[0]


def brute_representation_check(base: Sequence, chosen: Sequence, universe: Sequence[int] | int,
                               q: int) -> bool:
    """Direct check: every X in base and Y inside universe minus X with |Y| <= q
    has a chosen set disjoint from Y."""
    as_set = lambda s: set(elements_of(s)) if isinstance(s, int) else set(s)
    base = [as_set(s) for s in base]
    chosen = [as_set(s) for s in chosen]
    universe = as_set(universe)
    for X in base:
        free = sorted(universe - X)
        for size in range(min(q, len(free)) + 1):
            for Y in combinations(free, size):
                if not any(not (C & set(Y)) for C in chosen):
                    return False
    return True


def solution_errors(problem, packing) -> list[str]:
    """Reasons why ``packing`` is not a valid packing of ``problem``."""
    errors = []
    used: set[int] = set()
    if isinstance(problem, Graph):
        if not isinstance(packing, P2Packing):
            return ["graph instances need a path packing"]
        adj = problem.adjacency()
        for path in packing.paths:
            if len(path) != 3 or len(set(path)) != 3:
                errors.append(f"path {list(path)} does not have three distinct nodes")
                continue
            a, m, b = path
            if not all(0 <= x < problem.n for x in path):
                errors.append(f"path {list(path)} leaves the graph")
                continue
            if a not in adj[m] or b not in adj[m]:
                errors.append(f"middle {m} of path {list(path)} is not adjacent to both ends")
            if used & set(path):
                errors.append(f"path {list(path)} reuses a node")
            used |= set(path)
        return errors

    if not isinstance(packing, SetPacking):
        return ["set instances need a set packing"]
    if len(set(packing.chosen)) != len(packing.chosen):
        errors.append("a set is chosen twice")
    for j in packing.chosen:
        if not 0 <= j < len(problem.sets):
            errors.append(f"index {j} is not a set of the family")
            continue
        s = set(problem.sets[j])
        if used & s:
            errors.append(f"set {list(problem.sets[j])} overlaps an earlier set")
        used |= s
    return errors


def verify_solution(instance, packing) -> bool:
    problem = instance.problem if isinstance(instance, Instance) else instance
    return not solution_errors(problem, packing)


def plant_instance(kind: str, k: int, noise: int = 0, seed: int = 0, extra: int = 2) -> Instance:
    """Instance containing ``k`` disjoint planted structures plus random noise.

    ``extra`` adds unused elements (per block for ``3dm``) so noise can reach
    outside the plant.
    """
    if k < 0 or noise < 0 or extra < 0:
        raise ValueError("k, noise and extra must be non-negative")
    rng = random.Random(seed)
    if kind == "3sp":
        n = 3 * k + extra
        perm = rng.sample(range(n), n)
        planted = [tuple(sorted(perm[3 * i:3 * i + 3])) for i in range(k)]
        sets = list(planted)
        while len(sets) < k + noise and n >= 3:
            sets.append(tuple(sorted(rng.sample(range(n), 3))))
        rng.shuffle(sets)
        problem = ThreeSetFamily(n, sets)
    elif kind == "3dm":
        b = k + extra
        blocks = [rng.sample(range(i * b, (i + 1) * b), b) for i in range(3)]
        planted = [tuple(blocks[i][j] for i in range(3)) for j in range(k)]
        sets = list(planted)
        while len(sets) < k + noise and b > 0:
            sets.append(tuple(rng.randrange(i * b, (i + 1) * b) for i in range(3)))
        rng.shuffle(sets)
        problem = TripartiteFamily((b, b, b), sets)
    elif kind == "p2":
        n = 3 * k + extra
        perm = rng.sample(range(n), n)
        planted = [tuple(perm[3 * i:3 * i + 3]) for i in range(k)]
        edges = []
        for a, m, c in planted:
            edges += [(a, m), (m, c)]
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for u, v in rng.sample(pairs, min(noise, len(pairs))):
            edges.append((u, v))
        problem = Graph(n, edges)
    else:
        raise ValueError(f"unknown instance kind {kind!r}")
    return Instance(kind, problem, tuple(planted), seed, {"k": k, "noise": noise, "extra": extra})
