"""Shared domain types: set families, graphs, packings and tradeoff parameters.

Elements are dense integers ``0..n-1``. Every container is an immutable
dataclass; constructors normalise their input (sorted tuples, duplicates
removed) but do not reject malformed data, so that :func:`validate_instance`
can report it.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

__all__ = [
    "BudgetExceeded",
    "Graph",
    "ThreeSetFamily",
    "TripartiteFamily",
    "P2Packing",
    "SetPacking",
    "TradeoffParams",
    "Instance",
    "budget",
    "required_size",
    "validate_instance",
    "mask_of",
    "elements_of",
]

ROUND_GUARD = 1e-9
DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


def budget(default: int = DEFAULT_BUDGET) -> int:
    """Enumeration budget, overridable through ``ALPHAPACK_BUDGET``."""
    raw = os.environ.get("ALPHAPACK_BUDGET")
    if raw:
        return int(float(raw))
    return default


def required_size(k: int, alpha: float) -> int:
    """Smallest integer size that is at least ``alpha * k``.

    >>> required_size(7, 0.8)
    6
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    return max(0, math.ceil(alpha * k - ROUND_GUARD))


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _normalise_sets(sets: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    seen = set()
    out = []
    for s in sets:
        t = tuple(sorted(int(e) for e in s))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class ThreeSetFamily:
    """A family of 3-element subsets of ``0..n-1``."""

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, sets: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "sets", _normalise_sets(sets))

    def masks(self) -> list[int]:
        return [mask_of(s) for s in self.sets]

    def restrict(self, keep: Sequence[int]) -> "ThreeSetFamily":
        """Sub-family of the given indices; order is preserved."""
        return ThreeSetFamily(self.n, [self.sets[i] for i in keep])


@dataclass(frozen=True)
class TripartiteFamily:
    """Triples over three contiguous blocks ``E1 | E2 | E3`` of ``0..n-1``.

    ``E1`` occupies the smallest labels, so the minimum of every triple is its
    ``E1`` element.
    """

    sizes: tuple[int, int, int]
    sets: tuple[tuple[int, ...], ...]

    def __init__(self, sizes: Sequence[int], sets: Iterable[Sequence[int]] = ()):
        sizes = tuple(int(x) for x in sizes)
        if len(sizes) != 3:
            raise ValueError("exactly three block sizes are required")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "sets", _normalise_sets(sets))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def block_of(self, e: int) -> int:
        n1, n2, _ = self.sizes
        if e < n1:
            return 0
        if e < n1 + n2:
            return 1
        return 2

    def block(self, i: int) -> range:
        start = sum(self.sizes[:i])
        return range(start, start + self.sizes[i])

    def masks(self) -> list[int]:
        return [mask_of(s) for s in self.sets]

    def restrict(self, keep: Sequence[int]) -> "TripartiteFamily":
        return TripartiteFamily(self.sizes, [self.sets[i] for i in keep])


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        seen = set()
        out = []
        for u, v in edges:
            e = (min(int(u), int(v)), max(int(u), int(v)))
            if e not in seen:
                seen.add(e)
                out.append(e)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(out))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def to_three_sets(self) -> ThreeSetFamily:
        """One 3-set per simple path on three nodes (triangles collapse)."""
        adj = self.adjacency()
        sets = []
        for m in range(self.n):
            nb = sorted(adj[m])
            for i, a in enumerate(nb):
                for b in nb[i + 1:]:
                    sets.append((a, m, b))
        return ThreeSetFamily(self.n, sets)

    def middle_for(self, triple: Sequence[int], adj: list[set[int]] | None = None) -> int | None:
        """First node of ``triple`` adjacent to both others, or None."""
        adj = adj if adj is not None else self.adjacency()
        for m in sorted(triple):
            others = [x for x in triple if x != m]
            if all(o in adj[m] for o in others):
                return m
        return None


@dataclass(frozen=True)
class P2Packing:
    """Node-disjoint paths, each stored as ``(endpoint, middle, endpoint)``."""

    paths: tuple[tuple[int, int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class SetPacking:
    """Indices of pairwise disjoint sets of a family."""

    chosen: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.chosen)


@dataclass(frozen=True)
class TradeoffParams:
    alpha: float
    epsilon: float = 0.0
    c: float = 1.0

    def __post_init__(self):
        if not 0.75 <= self.alpha <= 1:
            raise ValueError(f"alpha={self.alpha} outside [0.75, 1]")
        if self.epsilon < 0:
            raise ValueError("epsilon must be non-negative")
        if self.c < 1:
            raise ValueError("c must be at least 1")

    @property
    def beta_star(self) -> float:
        return (4 * self.alpha - 3 + 4 * self.epsilon) / (1 + 4 * self.epsilon)


Problem = Union[Graph, ThreeSetFamily, TripartiteFamily]
KINDS = {"p2": Graph, "3sp": ThreeSetFamily, "3dm": TripartiteFamily}


@dataclass(frozen=True)
class Instance:
    """A problem together with optional planted-solution metadata."""

    kind: str
    problem: Problem
    planted: tuple[tuple[int, ...], ...] | None = None
    seed: int | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown instance kind {self.kind!r}")
        if not isinstance(self.problem, KINDS[self.kind]):
            raise TypeError(f"{self.kind} instance needs a {KINDS[self.kind].__name__}")

    @property
    def planted_k(self) -> int | None:
        return None if self.planted is None else len(self.planted)


def validate_instance(instance: Instance | Problem) -> list[str]:
    """Return the list of violated invariants; empty when well formed."""
    problem = instance.problem if isinstance(instance, Instance) else instance
    report = []
    if problem.n < 0:
        report.append("negative universe size")
    if isinstance(problem, Graph):
        for u, v in problem.edges:
            if u == v:
                report.append(f"self-loop at {u}")
            if not (0 <= u < problem.n and 0 <= v < problem.n):
                report.append(f"edge ({u},{v}) has an endpoint outside 0..{problem.n - 1}")
        return report

    for s in problem.sets:
        if len(set(s)) != 3 or len(s) != 3:
            report.append(f"set {list(s)} has <3 distinct elements" if len(set(s)) < 3
                          else f"set {list(s)} has more than 3 elements")
            continue
        if any(not 0 <= e < problem.n for e in s):
            report.append(f"set {list(s)} has an element outside 0..{problem.n - 1}")
            continue
        if isinstance(problem, TripartiteFamily):
            if sorted(problem.block_of(e) for e in s) != [0, 1, 2]:
                report.append(f"set {list(s)} is not one-per-block")
    if isinstance(problem, TripartiteFamily) and any(x < 0 for x in problem.sizes):
        report.append("negative block size")
    return report


def check_valid(problem: Problem) -> None:
    report = validate_instance(problem)
    if report:
        raise ValueError("invalid instance: " + "; ".join(report[:3]))
