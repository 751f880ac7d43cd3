"""Tradeoff procedures and the dispatchers that pick between them.

Every procedure returns a :class:`SolveOutcome` whose packing is valid for
its instance. When the instance has a solution of size ``k`` the packing has
at least ``required_size(k, alpha)`` members; otherwise any valid packing is
acceptable and the procedures return whatever they found (often nothing).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import calc
from .approx import local_search_pack
from .bipartite import BipartiteGraph, max_center_left_p2, max_center_left_size
from .exact import exact_3d_match, exact_3set_pack, rand_3d_match, rand_3set_pack
from .model import (
    Graph,
    P2Packing,
    SetPacking,
    ThreeSetFamily,
    TripartiteFamily,
    elements_of,
    required_size,
)
from .represent import param_match, param_pack, partial_size
from .universal import build_universal

__all__ = [
    "SolverConfig",
    "SolveOutcome",
    "pack1",
    "pack2",
    "setpack1",
    "sprand1",
    "match1",
    "matchrand1",
    "match2",
    "pack",
    "setpack",
    "sprand",
    "match",
    "matchrand",
    "PROCEDURES",
    "paths_from_sets",
]


@dataclass(frozen=True)
class SolverConfig:
    """Knobs shared by all procedures.

    ``c=None`` means the table value: the optimal tradeoff constant rounded to
    one decimal. ``strategy`` selects the universal-set construction used by
    Pack1; ``trials=None`` uses the default trial count of the randomized
    solvers.
    """

    epsilon: float = 0.0
    c: Optional[float] = None
    seed: int = 0
    swap_size: int = 3
    trials: Optional[int] = None
    strategy: str = "base"
    verify_limit: Optional[int] = 5_000_000


@dataclass
class SolveOutcome:
    packing: P2Packing | SetPacking
    target: int
    met: bool
    procedure: str
    predicted_base: float
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        if isinstance(self.packing, P2Packing):
            solution = {"paths": [list(p) for p in self.packing.paths]}
        else:
            solution = {"sets": list(self.packing.chosen)}
        return {
            "procedure": self.procedure,
            "target": self.target,
            "met": self.met,
            "size": len(self.packing),
            "predicted_base": self.predicted_base,
            "seconds": round(self.seconds, 6),
            "solution": solution,
            **({"notes": self.notes} if self.notes else {}),
        }


def _outcome(packing, target: int, procedure: str, base: float, start: float, **notes) -> SolveOutcome:
    return SolveOutcome(packing, target, len(packing) >= target, procedure, base,
                        time.perf_counter() - start, dict(notes))


def _table_c(problem: str, alpha: float, epsilon: float) -> float:
    return calc.second_base(problem, alpha, epsilon)[1]


def _second_base(problem: str, alpha: float, config: SolverConfig) -> float:
    c = config.c if config.c is not None else _table_c(problem, alpha, config.epsilon)
    return calc.second_base(problem, alpha, config.epsilon, c)[0]


# ----------------------------------------------------------------------------
# P2-packing


def _pack1_candidates(G: Graph, members: list[int], target: int) -> np.ndarray:
    """Indices of members passing cheap necessary conditions for ``target`` paths."""
    if not members:
        return np.zeros(0, dtype=np.int64)
    arr = np.array(members, dtype=np.uint64)
    full = np.uint64((1 << G.n) - 1)
    inside = np.bitwise_count(arr)
    outside = np.bitwise_count(full & ~arr)
    ok = (inside >= target) & (outside >= 2 * target)
    adj = G.adjacency()
    centers = np.zeros(arr.size, dtype=np.int64)
    for v in range(G.n):
        if len(adj[v]) < 2:
            continue
        nb = np.uint64(sum(1 << u for u in adj[v]))
        in_f = (arr >> np.uint64(v)) & np.uint64(1)
        centers += (in_f == 1) & (np.bitwise_count(nb & ~arr) >= 2)
    ok &= centers >= target
    return np.flatnonzero(ok)


def pack1(G: Graph, k: int, alpha: float, seed: int = 0,
          config: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Scan an ``(|V|, 3k, k, alpha)``-universal family for a good split of the nodes.

    For each member ``F`` the best packing with middles in ``F`` and
    endpoints outside it is computed; the first one reaching the target is
    returned.
    """
    start = time.perf_counter()
    target = required_size(k, alpha)
    base = calc.base_pack1(alpha)
    if target == 0:
        return _outcome(P2Packing(()), 0, "Pack1", base, start)
    if G.n < 3 * k:
        # no packing of size k fits, so an empty answer is acceptable
        return _outcome(P2Packing(()), target, "Pack1", base, start, skipped="fewer than 3k nodes")
    uni = build_universal(G.n, 3 * k, k, alpha, config.strategy, seed, config.verify_limit)
    members = list(uni.members)
    nodes = set(range(G.n))
    for idx in _pack1_candidates(G, members, target):
        F = set(elements_of(members[idx]))
        edges = [(u, v) if u in F else (v, u) for u, v in G.edges if (u in F) != (v in F)]
        B = BipartiteGraph(sorted(F), sorted(nodes - F), edges)
        if max_center_left_size(B) >= target:
            return _outcome(max_center_left_p2(B), target, "Pack1", base, start,
                            universal_size=len(members))
    return _outcome(P2Packing(()), target, "Pack1", base, start, universal_size=len(members))


def paths_from_sets(G: Graph, family: ThreeSetFamily, chosen) -> P2Packing:
    """Turn chosen 3-sets of ``G.to_three_sets()`` back into paths."""
    adj = G.adjacency()
    paths = []
    for j in chosen:
        triple = family.sets[j]
        m = G.middle_for(triple, adj)
        a, b = [x for x in triple if x != m]
        paths.append((a, m, b))
    return P2Packing(tuple(paths))


def _split_search(family, k: int, alpha: float, config: SolverConfig, pivots,
                  partial: Callable, name: str, problem: str) -> SolveOutcome:
    """Shared body of Pack2 and Match2: partial packings completed by local search."""
    start = time.perf_counter()
    target = required_size(k, alpha)
    bstar = calc.beta_star(alpha, config.epsilon)
    base = _second_base(problem, alpha, config)
    if target == 0:
        return _outcome(SetPacking(()), 0, name, base, start)
    c = config.c if config.c is not None else _table_c(problem, alpha, config.epsilon)
    masks = family.masks()
    seen: set[int] = set()
    m = partial_size(bstar, k)
    for v in pivots:
        collection = partial(family, k, bstar, c, v)
        for packing, union in zip(collection.packings, collection.unions):
            if union in seen:
                continue
            seen.add(union)
            rest = [j for j, s in enumerate(masks) if s & union == 0]
            found = local_search_pack(family.restrict(rest), config.swap_size)
            total = tuple(sorted(packing.chosen + tuple(rest[j] for j in found.chosen)))
            if len(total) >= target:
                return _outcome(SetPacking(total), target, name, base, start, partial_size=m)
        if m == 0:
            break
    return _outcome(SetPacking(()), target, name, base, start, partial_size=m)


def pack2(family: ThreeSetFamily | Graph, k: int, alpha: float,
          config: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Exact partial packing of ``ceil(beta_star k)`` sets, completed by local search.

    A graph is converted to the family of its 3-node paths first and the
    answer is converted back.
    """
    if isinstance(family, Graph):
        sets = family.to_three_sets()
        out = pack2(sets, k, alpha, config)
        out.packing = paths_from_sets(family, sets, out.packing.chosen)
        return out
    return _split_search(family, k, alpha, config, range(family.n),
                         lambda S, k_, b, c, v: param_pack(S, k_, b, c, v, strict=False),
                         "Pack2", "3sp-det")


def pack(G: Graph, k: int, alpha: float, config: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Run whichever of Pack1 and Pack2 has the smaller predicted base (ties: Pack1)."""
    calc._check(alpha, config.epsilon)
    if calc.base_pack1(alpha) <= _second_base("p2", alpha, config):
        return pack1(G, k, alpha, config.seed, config)
    return pack2(G, k, alpha, config)


# ----------------------------------------------------------------------------
# 3-set packing


def _greedy_then_exact(family, k: int, alpha: float, solver: Callable, name: str,
                       base: float) -> SolveOutcome:
    start = time.perf_counter()
    target = required_size(k, alpha)
    g = math.floor((1 - alpha) * k / 2 + 1e-9)
    masks = family.masks()
    chosen: list[int] = []
    used = 0
    for _ in range(g):
        nxt = next((j for j, s in enumerate(masks) if s & used == 0), None)
        if nxt is None:
            return _outcome(SetPacking(()), target, name, base, start, greedy=g)
        chosen.append(nxt)
        used |= masks[nxt]
    rest = [j for j, s in enumerate(masks) if s & used == 0]
    found = solver(family.restrict(rest), max(0, target - g))
    if found is None:
        return _outcome(SetPacking(()), target, name, base, start, greedy=g)
    total = tuple(sorted(chosen + [rest[j] for j in found.chosen]))
    return _outcome(SetPacking(total), target, name, base, start, greedy=g)


def setpack1(family: ThreeSetFamily, k: int, alpha: float, seed: int = 0,
             use_randomized: bool = False, config: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Greedy ``floor((1 - alpha) k / 2)`` sets, then an exact solver for the rest."""
    calc._check(alpha, 0.0)
    if use_randomized:
        solver = lambda S, kk: rand_3set_pack(S, kk, seed, config.trials)
        return _greedy_then_exact(family, k, alpha, solver, "SPRand1",
                                  calc.base_exact_scaled(alpha, "3sp-rand"))
    return _greedy_then_exact(family, k, alpha, exact_3set_pack, "SetPack1",
                              calc.base_exact_scaled(alpha, "3sp-det"))


def sprand1(family: ThreeSetFamily, k: int, alpha: float, seed: int = 0,
            config: SolverConfig = SolverConfig()) -> SolveOutcome:
    return setpack1(family, k, alpha, seed, True, config)


def setpack(family: ThreeSetFamily, k: int, alpha: float,
            config: SolverConfig = SolverConfig()) -> SolveOutcome:
    calc._check(alpha, config.epsilon)
    if calc.base_exact_scaled(alpha, "3sp-det") <= _second_base("3sp-det", alpha, config):
        return setpack1(family, k, alpha, config.seed, False, config)
    return pack2(family, k, alpha, config)


def sprand(family: ThreeSetFamily, k: int, alpha: float,
           config: SolverConfig = SolverConfig()) -> SolveOutcome:
    calc._check(alpha, config.epsilon)
    if calc.base_exact_scaled(alpha, "3sp-rand") <= _second_base("3sp-rand", alpha, config):
        return setpack1(family, k, alpha, config.seed, True, config)
    return pack2(family, k, alpha, config)


# ----------------------------------------------------------------------------
# 3D matching


def match1(family: TripartiteFamily, k: int, alpha: float,
           config: SolverConfig = SolverConfig()) -> SolveOutcome:
    calc._check(alpha, 0.0)
    return _greedy_then_exact(family, k, alpha, exact_3d_match, "Match1",
                              calc.base_exact_scaled(alpha, "3dm-det"))


def matchrand1(family: TripartiteFamily, k: int, alpha: float, seed: int = 0,
               config: SolverConfig = SolverConfig()) -> SolveOutcome:
    calc._check(alpha, 0.0)
    solver = lambda S, kk: rand_3d_match(S, kk, seed, config.trials)
    return _greedy_then_exact(family, k, alpha, solver, "MatchRand1",
                              calc.base_exact_scaled(alpha, "3dm-rand"))


def match2(family: TripartiteFamily, k: int, alpha: float,
           config: SolverConfig = SolverConfig()) -> SolveOutcome:
    """As Pack2, with pivots ranging over the first block."""
    return _split_search(family, k, alpha, config, family.block(0),
                         lambda S, k_, b, c, v: param_match(S, k_, b, c, v, strict=False),
                         "Match2", "3dm-det")


def match(family: TripartiteFamily, k: int, alpha: float,
          config: SolverConfig = SolverConfig()) -> SolveOutcome:
    calc._check(alpha, config.epsilon)
    if calc.base_exact_scaled(alpha, "3dm-det") <= _second_base("3dm-det", alpha, config):
        return match1(family, k, alpha, config)
    return match2(family, k, alpha, config)


def matchrand(family: TripartiteFamily, k: int, alpha: float,
              config: SolverConfig = SolverConfig()) -> SolveOutcome:
    calc._check(alpha, config.epsilon)
    if calc.base_exact_scaled(alpha, "3dm-rand") <= _second_base("3dm-rand", alpha, config):
        return matchrand1(family, k, alpha, config.seed, config)
    return match2(family, k, alpha, config)


def _with_seed(fn):
    return lambda problem, k, alpha, config: fn(problem, k, alpha, config.seed, config=config)


# name -> (instance kind, callable(problem, k, alpha, config))
PROCEDURES: dict[str, tuple[str, Callable]] = {
    "pack": ("p2", pack),
    "pack1": ("p2", _with_seed(pack1)),
    "pack2": ("3sp", pack2),
    "setpack": ("3sp", setpack),
    "setpack1": ("3sp", lambda S, k, a, cfg: setpack1(S, k, a, cfg.seed, False, cfg)),
    "sprand": ("3sp", sprand),
    "sprand1": ("3sp", _with_seed(sprand1)),
    "match": ("3dm", match),
    "match1": ("3dm", match1),
    "matchrand": ("3dm", matchrand),
    "matchrand1": ("3dm", _with_seed(matchrand1)),
    "match2": ("3dm", match2),
}
