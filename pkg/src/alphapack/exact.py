"""Exact and randomized solvers for 3-set k-packing and 3D k-matching.

The deterministic solvers run the representative-family dynamic programme of
:mod:`alphapack.represent` with the pivot at the last element, so every set is
eligible. The randomized solvers use color coding: elements get random colors,
only sets with distinct colors survive, and a dynamic programme over color
masks looks for ``k`` sets with pairwise disjoint colors.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .model import BudgetExceeded, SetPacking, ThreeSetFamily, TripartiteFamily
from .represent import param_match, param_pack

__all__ = [
    "exact_3set_pack",
    "rand_3set_pack",
    "exact_3d_match",
    "rand_3d_match",
    "default_trials",
    "colorful_probability",
]

MAX_K = 7
MAX_ELEMENTS = 40
FAILURE_RATE = 1e-4


def _check_budget(n: int, k: int, max_k: int, max_elements: int) -> None:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > max_k or n > max_elements:
        raise BudgetExceeded(f"k={k}, |E|={n} exceeds the budget k<={max_k}, |E|<={max_elements}")


def exact_3set_pack(family: ThreeSetFamily, k: int, *, max_k: int = MAX_K,
                    max_elements: int = MAX_ELEMENTS) -> Optional[SetPacking]:
    """A packing of exactly ``k`` sets, or None when none exists."""
    _check_budget(family.n, k, max_k, max_elements)
    if k == 0:
        return SetPacking(())
    if len(family.sets) < k or family.n == 0:
        return None
    found = param_pack(family, k, 1.0, v=family.n - 1, strict=False)
    return found.packings[0] if len(found) else None


def exact_3d_match(family: TripartiteFamily, k: int, *, max_k: int = MAX_K,
                   max_elements: int = MAX_ELEMENTS) -> Optional[SetPacking]:
    """A matching of exactly ``k`` triples, or None when none exists."""
    _check_budget(family.n, k, max_k, max_elements)
    if k == 0:
        return SetPacking(())
    if len(family.sets) < k or family.sizes[0] == 0:
        return None
    found = param_match(family, k, 1.0, v=family.block(0)[-1], strict=False)
    return found.packings[0] if len(found) else None


def colorful_probability(palette: int, distinct: int) -> float:
    """Chance that ``distinct`` fixed elements receive pairwise different colors."""
    if distinct > palette:
        return 0.0
    return math.exp(math.lgamma(palette + 1) - math.lgamma(palette - distinct + 1)
                    - distinct * math.log(palette))


def default_trials(k: int, tripartite: bool = False, failure_rate: float = FAILURE_RATE) -> int:
    """Trials needed so a present solution is missed with probability at most ``failure_rate``."""
    if k == 0:
        return 1
    per_set = 2 if tripartite else 3
    p = colorful_probability(2 * per_set * k, per_set * k)
    return max(1, math.ceil(math.log(1 / failure_rate) / p))


def _color_search(groups: list[list[int]], color_masks: dict[int, int], k: int) -> Optional[list[int]]:
    """Pick ``k`` sets, at most one per group, with pairwise disjoint color masks."""
    # levels[i] maps a color mask used by i sets to one witness
    levels: list[dict[int, tuple[int, ...]]] = [{0: ()}] + [{} for _ in range(k)]
    for group in groups:
        for i in range(min(k, len(levels) - 1), 0, -1):
            prev = levels[i - 1]
            if not prev:
                continue
            cur = levels[i]
            for j in group:
                cm = color_masks.get(j)
                if cm is None:
                    continue
                for used, chosen in prev.items():
                    if used & cm == 0:
                        u = used | cm
                        if u not in cur:
                            cur[u] = chosen + (j,)
            if i == k and cur:
                return list(next(iter(cur.values())))
    return None


def _colorful_masks(sets, colors: np.ndarray) -> dict[int, int]:
    out = {}
    for j, s in enumerate(sets):
        cs = {int(colors[e]) for e in s}
        if len(cs) == len(s):
            m = 0
            for c in cs:
                m |= 1 << c
            out[j] = m
    return out


def rand_3set_pack(family: ThreeSetFamily, k: int, seed: int = 0, trials: int | None = None, *,
                   max_k: int = MAX_K, max_elements: int = MAX_ELEMENTS) -> Optional[SetPacking]:
    """Color-coding search with ``6k`` colors; a returned packing is always valid."""
    _check_budget(family.n, k, max_k, max_elements)
    if k == 0:
        return SetPacking(())
    if len(family.sets) < k:
        return None
    trials = default_trials(k) if trials is None else trials
    groups = [[j] for j in range(len(family.sets))]
    for t in range(trials):
        colors = np.random.default_rng(seed + t).integers(0, 6 * k, size=family.n)
        found = _color_search(groups, _colorful_masks(family.sets, colors), k)
        if found is not None:
            return SetPacking(tuple(sorted(found)))
    return None


def rand_3d_match(family: TripartiteFamily, k: int, seed: int = 0, trials: int | None = None, *,
                  max_k: int = MAX_K, max_elements: int = MAX_ELEMENTS) -> Optional[SetPacking]:
    """Color coding on the second and third blocks only, with ``4k`` colors.

    Triples are grouped by their first-block element and at most one triple
    per group is taken, which keeps the first block disjoint for free.
    """
    _check_budget(family.n, k, max_k, max_elements)
    if k == 0:
        return SetPacking(())
    if len(family.sets) < k:
        return None
    trials = default_trials(k, tripartite=True) if trials is None else trials
    by_first: dict[int, list[int]] = {}
    for j, s in enumerate(family.sets):
        by_first.setdefault(s[0], []).append(j)
    groups = [by_first[x] for x in sorted(by_first)]
    tails = [s[1:] for s in family.sets]
    for t in range(trials):
        colors = np.random.default_rng(seed + t).integers(0, 4 * k, size=family.n)
        found = _color_search(groups, _colorful_masks(tails, colors), k)
        if found is not None:
            return SetPacking(tuple(sorted(found)))
    return None
