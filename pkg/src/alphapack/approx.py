"""Local-search approximation for 3-set packing.

Starting from the empty packing, the search repeatedly applies the improving
move that removes the fewest chosen sets: first plain insertions, then swaps
that remove ``r <= swap_size`` sets and insert ``r + 1``. Because smaller swaps
always take priority, raising ``swap_size`` only extends the same trajectory.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .model import SetPacking, ThreeSetFamily, TripartiteFamily

__all__ = ["local_search_pack", "is_maximal", "is_swap_optimal"]


def _disjoint_choice(cands: Sequence[int], masks: Sequence[int], need: int, used: int = 0,
                     start: int = 0) -> list[int] | None:
    """First ``need`` pairwise disjoint candidates in lexicographic scan order."""
    if need == 0:
        return []
    for pos in range(start, len(cands) - need + 1):
        j = cands[pos]
        if masks[j] & used == 0:
            rest = _disjoint_choice(cands, masks, need - 1, used | masks[j], pos + 1)
            if rest is not None:
                return [j] + rest
    return None


def _find_move(masks: Sequence[int], chosen: list[int], swap_size: int):
    """Smallest improving move as ``(removed, inserted)``, or None."""
    union = 0
    for j in chosen:
        union |= masks[j]
    in_packing = set(chosen)
    owner = {}
    for j in chosen:
        for e in range(masks[j].bit_length()):
            if masks[j] >> e & 1:
                owner[e] = j
    conflicts: dict[int, frozenset[int]] = {}
    for j, m in enumerate(masks):
        if j in in_packing:
            continue
        hit = m & union
        if hit == 0:
            return (), [j]
        conflicts[j] = frozenset(owner[e] for e in range(hit.bit_length()) if hit >> e & 1)

    for r in range(1, swap_size + 1):
        for removed in combinations(chosen, r):
            rset = set(removed)
            cands = [j for j, cs in conflicts.items() if cs <= rset]
            if len(cands) < r + 1:
                continue
            pick = _disjoint_choice(cands, masks, r + 1)
            if pick is not None:
                return removed, pick
    return None


def local_search_pack(family: ThreeSetFamily | TripartiteFamily, swap_size: int = 3) -> SetPacking:
    """Maximal, ``swap_size``-swap-optimal packing; deterministic in input order."""
    if swap_size < 1:
        raise ValueError("swap_size must be at least 1")
    masks = family.masks()
    chosen: list[int] = []
    while True:
        move = _find_move(masks, chosen, swap_size)
        if move is None:
            return SetPacking(tuple(sorted(chosen)))
        removed, inserted = move
        chosen = sorted([j for j in chosen if j not in removed] + list(inserted))


def is_maximal(family, packing: SetPacking) -> bool:
    masks = family.masks()
    union = 0
    for j in packing.chosen:
        union |= masks[j]
    return all(m & union for j, m in enumerate(masks) if j not in packing.chosen)


def is_swap_optimal(family, packing: SetPacking, swap_size: int) -> bool:
    return _find_move(family.masks(), list(packing.chosen), swap_size) is None
