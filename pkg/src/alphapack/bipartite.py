"""Maximum P2-packing in a bipartite graph with every path middle on the left.

Each left node ``l`` is split into two copies joined by an edge, and both
copies inherit the right-side neighbours of ``l``. In the resulting graph a
maximum matching has size ``|L| + OPT`` and the path middles are exactly the
left nodes whose two copies are both matched to the right.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import P2Packing

__all__ = [
    "BipartiteGraph",
    "gadget",
    "max_cardinality_matching",
    "max_center_left_p2",
    "max_center_left_size",
]


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __init__(self, left: Iterable[int], right: Iterable[int], edges: Iterable[Sequence[int]]):
        left = tuple(sorted(set(left)))
        right = tuple(sorted(set(right)))
        lset, rset = set(left), set(right)
        if lset & rset:
            raise ValueError("left and right sides overlap")
        seen = set()
        out = []
        for a, b in edges:
            if a in rset and b in lset:
                a, b = b, a
            if a not in lset or b not in rset:
                raise ValueError(f"edge ({a},{b}) does not join left to right")
            if (a, b) not in seen:
                seen.add((a, b))
                out.append((a, b))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "edges", tuple(out))


def max_cardinality_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Edmonds' blossom algorithm; returns ``mate`` with -1 for unmatched vertices."""
    mate = [-1] * n
    # greedy start
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1 and u != v:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _search(n, adj, mate, root)
        if end != -1:
            v = end
            while v != -1:
                pv = parent[v]
                ppv = mate[pv]
                mate[v], mate[pv] = pv, v
                v = ppv
    return mate


def _search(n: int, adj: Sequence[Sequence[int]], mate: list[int], root: int) -> tuple[int, list[int]]:
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or mate[v] == u:
                continue
            if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                cur = lca(v, u)
                blossom = [False] * n
                mark(v, cur, u, blossom)
                mark(u, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[u] == -1:
                parent[u] = v
                if mate[u] == -1:
                    return u, parent
                used[mate[u]] = True
                queue.append(mate[u])
    return -1, parent


def gadget(B: BipartiteGraph, forced: Iterable[int] = (), keep: Iterable[int] | None = None):
    """Build the two-copies graph as an adjacency list.

    Left node ``B.left[i]`` becomes vertices ``2i`` and ``2i+1``; right node
    ``B.right[j]`` becomes ``2|L| + j``. Left nodes in ``forced`` lose their
    internal edge, and left nodes outside ``keep`` are dropped entirely.
    """
    nl = len(B.left)
    lpos = {l: i for i, l in enumerate(B.left)}
    rpos = {r: 2 * nl + j for j, r in enumerate(B.right)}
    forced = set(forced)
    keep = set(B.left) if keep is None else set(keep) | forced
    adj: list[list[int]] = [[] for _ in range(2 * nl + len(B.right))]
    for l in B.left:
        if l in keep and l not in forced:
            a = 2 * lpos[l]
            adj[a].append(a + 1)
            adj[a + 1].append(a)
    for l, r in B.edges:
        if l not in keep:
            continue
        a, v = 2 * lpos[l], rpos[r]
        for c in (a, a + 1):
            adj[c].append(v)
            adj[v].append(c)
    return adj


def _matching_size(mate: list[int]) -> int:
    return sum(1 for v, u in enumerate(mate) if u > v)


def _centers(B: BipartiteGraph, mate: list[int]) -> list[int]:
    nl = len(B.left)
    return [l for i, l in enumerate(B.left)
            if mate[2 * i] >= 2 * nl and mate[2 * i + 1] >= 2 * nl]


def max_center_left_size(B: BipartiteGraph) -> int:
    """Size of a maximum packing, without reconstructing the paths."""
    adj = gadget(B)
    return len(_centers(B, max_cardinality_matching(len(adj), adj)))


def _best_with(B: BipartiteGraph, forced: list[int], pool: list[int]) -> int:
    """Most centers from ``pool`` compatible with all of ``forced`` being centers, or -1."""
    # every vertex coverable by some matching is covered by a maximum one, so
    # check coverability of the forced copies first and then read off the maximum
    adj = gadget(B, forced=forced, keep=forced)
    mate = max_cardinality_matching(len(adj), adj)
    if _matching_size(mate) < 2 * len(forced):
        return -1
    adj = gadget(B, forced=forced, keep=list(forced) + list(pool))
    mate = max_cardinality_matching(len(adj), adj)
    return _matching_size(mate) - 2 * len(forced) - len(pool)


def max_center_left_p2(B: BipartiteGraph) -> P2Packing:
    """Maximum packing of r-l-r paths with middles in ``L``.

    Among maximum packings the sorted list of middles is lexicographically
    smallest; endpoints are whatever the final matching picks.
    """
    opt = max_center_left_size(B)
    if opt == 0:
        return P2Packing(())
    chosen: list[int] = []
    for _ in range(opt):
        last = chosen[-1] if chosen else None
        for l in B.left:
            if last is not None and l <= last:
                continue
            pool = [x for x in B.left if x > l]
            if _best_with(B, chosen + [l], pool) == opt - len(chosen) - 1:
                chosen.append(l)
                break
        else:  # pragma: no cover - contradicts the optimum computed above
            raise AssertionError("lexicographic reconstruction failed")

    adj = gadget(B, forced=chosen, keep=chosen)
    mate = max_cardinality_matching(len(adj), adj)
    nl = len(B.left)
    lpos = {l: i for i, l in enumerate(B.left)}
    paths = []
    for l in chosen:
        i = lpos[l]
        x, y = sorted(B.right[mate[2 * i + c] - 2 * nl] for c in (0, 1))
        paths.append((x, l, y))
    return P2Packing(tuple(paths))
