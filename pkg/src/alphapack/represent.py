"""Representative families and the partial-packing tables built from them.

A subfamily ``S_hat`` of ``S`` q-represents ``S`` with respect to a
sub-universe ``E'`` when every ``Y`` inside ``E'`` with ``|Y| <= q`` that avoids
some member of ``S`` also avoids some member of ``S_hat``. Only inclusion-maximal
``Y`` need checking: the q-subsets of ``E'`` and, for members leaving fewer than
``q`` free elements, the whole remainder ``E' minus X``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .model import (
    BudgetExceeded,
    SetPacking,
    ThreeSetFamily,
    TripartiteFamily,
    budget,
    elements_of,
    mask_of,
)

__all__ = [
    "RepFamily",
    "PackingCollection",
    "compute_representative",
    "verify_representation",
    "partial_size",
    "param_pack",
    "param_match",
]

MAX_BITS = 62


@dataclass(frozen=True)
class RepFamily:
    """Result of :func:`compute_representative`; sets are stored as bitmasks."""

    base: tuple[int, ...]
    universe: int
    slack: int
    chosen: tuple[int, ...]

    @property
    def members(self) -> list[int]:
        return [self.base[i] for i in self.chosen]

    def sets(self) -> list[tuple[int, ...]]:
        return [tuple(elements_of(m)) for m in self.members]


@dataclass(frozen=True)
class PackingCollection:
    """Equal-size packings (as indices into the family) with their unions."""

    packings: tuple[SetPacking, ...]
    unions: tuple[int, ...]
    size: int

    def __len__(self) -> int:
        return len(self.packings)


def _as_mask(s) -> int:
    return int(s) if isinstance(s, (int, np.integer)) else mask_of(s)


def _witness_masks(base: Sequence[int], universe: int, q: int) -> np.ndarray:
    """All inclusion-maximal test sets Y for ``base`` as an int64 array."""
    elems = elements_of(universe)
    count = math.comb(len(elems), q) if q <= len(elems) else 0
    if count * max(len(base), 1) > budget():
        raise BudgetExceeded(
            f"representation check needs {count} test sets for {len(base)} members"
        )
    ys = set()
    if q <= len(elems):
        for combo in combinations(elems, q):
            m = 0
            for e in combo:
                m |= 1 << e
            ys.add(m)
    for x in base:
        rest = universe & ~x
        if bin(rest).count("1") < q:
            ys.add(rest)
    return np.array(sorted(ys), dtype=np.int64)


def _avoid(ys: np.ndarray, x: int) -> np.ndarray:
    return (ys & np.int64(x)) == 0


def verify_representation(base: Sequence, chosen: Sequence, universe, q: int) -> bool:
    """Check the representation property of ``chosen`` against ``base``."""
    base = [_as_mask(s) for s in base]
    chosen = [_as_mask(s) for s in chosen]
    universe = _as_mask(universe)
    if not base:
        return True
    if not chosen:
        return False
    ys = _witness_masks(base, universe, q)
    needed = np.zeros(len(ys), dtype=bool)
    for x in base:
        needed |= _avoid(ys, x)
    covered = np.zeros(len(ys), dtype=bool)
    for x in chosen:
        covered |= _avoid(ys, x)
    return bool(np.all(covered[needed]))


def compute_representative(S: Iterable, E_prime, q: int) -> RepFamily:
    """Greedy elimination in input order.

    A member is dropped when every test set it avoids is avoided by at least
    one other surviving member. The result is verified before it is returned.
    """
    if q < 0:
        raise ValueError("slack must be non-negative")
    base = tuple(_as_mask(s) for s in S)
    universe = _as_mask(E_prime)
    if universe >> MAX_BITS or any(x >> MAX_BITS for x in base):
        raise ValueError(f"elements must be below {MAX_BITS}")
    if not base:
        return RepFamily(base, universe, q, ())

    ys = _witness_masks(base, universe, q)
    avoid = [_avoid(ys, x) for x in base]
    counts = np.zeros(len(ys), dtype=np.int64)
    for a in avoid:
        counts += a
    keep = [True] * len(base)
    for i, a in enumerate(avoid):
        if np.all(counts[a] >= 2):
            keep[i] = False
            counts -= a
    chosen = tuple(i for i, flag in enumerate(keep) if flag)
    rep = RepFamily(base, universe, q, chosen)
    if not verify_representation(base, rep.members, universe, q):  # pragma: no cover
        raise AssertionError("greedy elimination produced a non-representative family")
    return rep


def partial_size(beta_star: float, k: int) -> int:
    """Number of sets handled by the exact partial stage, ``ceil(beta_star * k)``."""
    if beta_star < 0:
        raise ValueError("beta_star must be non-negative")
    return max(0, min(k, math.ceil(beta_star * k - 1e-9)))


def _reduce(cands: dict[int, tuple[int, ...]], universe: int, q: int, strict: bool):
    """Representative subset of the candidate unions, keyed by union mask."""
    keys = list(cands)
    try:
        rep = compute_representative(keys, universe, q)
    except BudgetExceeded:
        if strict:
            raise
        # keeping every candidate is trivially representative
        return cands
    return {keys[i]: cands[keys[i]] for i in rep.chosen}


def _collection(level: dict[int, tuple[int, ...]], size: int) -> PackingCollection:
    unions = tuple(level)
    return PackingCollection(
        tuple(SetPacking(tuple(sorted(level[u]))) for u in unions), unions, size
    )


def param_pack(S: ThreeSetFamily, k: int, beta_star: float, c: float = 1.0, v: int = 0,
               *, strict: bool = True) -> PackingCollection:
    """Partial packings of ``m = partial_size(beta_star, k)`` sets with minima at most ``v``.

    The unions of the result (3k - 3m)-represent all such unions with respect
    to the elements above ``v``. ``c`` only affects predicted cost and is
    ignored here.
    """
    if not 0 <= v < S.n:
        raise ValueError(f"pivot {v} is not an element of 0..{S.n - 1}")
    m = partial_size(beta_star, k)
    full = (1 << S.n) - 1
    above = full & ~((1 << (v + 1)) - 1)
    masks = S.masks()
    usable = [i for i, s in enumerate(S.sets) if s[0] <= v]

    level: dict[int, tuple[int, ...]] = {0: ()}
    for i in range(1, m + 1):
        nxt: dict[int, tuple[int, ...]] = {}
        for union, chosen in level.items():
            for j in usable:
                if masks[j] & union == 0:
                    u = union | masks[j]
                    if u not in nxt:
                        nxt[u] = chosen + (j,)
        # later extensions may touch elements <= v, so only the last level
        # can be represented over the elements above the pivot
        universe = above if i == m else full
        level = _reduce(nxt, universe, 3 * k - 3 * i, strict)
        if not level:
            break
    return _collection(level, m)


def param_match(S: TripartiteFamily, k: int, beta_star: float, c: float = 1.0, v: int = 0,
                *, strict: bool = True) -> PackingCollection:
    """Partial matchings of ``m`` triples whose first-block elements are at most ``v``.

    First-block elements are processed in increasing order, so each extension
    uses a first-block element no earlier union touches; representation is
    therefore only needed over the second and third blocks, with slack
    ``2(k - i)`` at level ``i``.
    """
    if v not in S.block(0):
        raise ValueError(f"pivot {v} is not in the first block")
    m = partial_size(beta_star, k)
    masks = S.masks()
    rest = mask_of(list(S.block(1)) + list(S.block(2)))
    by_first: dict[int, list[int]] = {}
    for j, s in enumerate(S.sets):
        if s[0] <= v:
            by_first.setdefault(s[0], []).append(j)

    # tables[i] holds unions of i triples over the first-block elements seen so far
    tables: list[dict[int, tuple[int, ...]]] = [{0: ()}] + [{} for _ in range(m)]
    for x in sorted(by_first):
        for i in range(m, 0, -1):
            grown = dict(tables[i])
            for union, chosen in tables[i - 1].items():
                for j in by_first[x]:
                    if masks[j] & union == 0:
                        u = union | masks[j]
                        if u not in grown:
                            grown[u] = chosen + (j,)
            if len(grown) > len(tables[i]):
                tables[i] = _reduce_restricted(grown, rest, 2 * (k - i), strict)
    return _collection(tables[m], m)


def _reduce_restricted(cands: dict[int, tuple[int, ...]], universe: int, q: int, strict: bool):
    """As :func:`_reduce`, but on the part of each union inside ``universe``.

    Unions with equal restricted parts are interchangeable for representation,
    so the first of each is kept.
    """
    groups: dict[int, int] = {}
    for u in cands:
        groups.setdefault(u & universe, u)
    reduced = _reduce({r: () for r in groups}, universe, q, strict)
    return {groups[r]: cands[groups[r]] for r in reduced}
