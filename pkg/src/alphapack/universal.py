"""Approximate lopsided universal sets.

An ``(n, k, p, alpha)``-universal set is a family of subsets of ``0..n-1``
such that for every ``X`` of size ``p`` and every ``Y`` of size ``k - p``
disjoint from ``X`` some member ``F`` satisfies ``|X & F| >= alpha * p`` and
``Y & F == 0``. Members are stored as integer bitmasks.

Three constructions compose into the pipeline used by :func:`build_universal`:

* :func:`construct_base` draws random members and checks them exhaustively;
* :func:`lift_by_hashing` pulls a family on a ``k**2`` universe back through a
  k-perfect function family;
* :func:`compose_by_partition` glues narrow families over consecutive blocks.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .model import ROUND_GUARD, BudgetExceeded, budget, elements_of

__all__ = [
    "UniversalFamily",
    "PerfectFunctionFamily",
    "RetryCapExceeded",
    "threshold",
    "base_size_bound",
    "asymptotic_size_bound",
    "verify_universal",
    "construct_base",
    "build_perfect_family",
    "verify_perfect",
    "lift_by_hashing",
    "consecutive_partitions",
    "composition_tuples",
    "block_width",
    "compose_by_partition",
    "build_universal",
]

MAX_BITS = 62
RETRY_CAP = 25
STRATEGIES = ("base", "hash-lift", "partition", "pipeline")


class RetryCapExceeded(RuntimeError):
    """Randomised construction failed verification on every scheduled seed."""


@dataclass(frozen=True)
class UniversalFamily:
    n: int
    k: int
    p: int
    alpha: float
    members: tuple[int, ...]
    provenance: tuple[str, ...] = ("base-random",)
    verified: bool = False
    seed: int | None = None

    def __post_init__(self):
        if not 0 <= self.p <= self.k:
            raise ValueError(f"need 0 <= p <= k, got p={self.p}, k={self.k}")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        if self.n > MAX_BITS:
            raise ValueError(f"universe of size {self.n} exceeds {MAX_BITS} elements")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def params(self) -> tuple[int, int, int, float]:
        return (self.n, self.k, self.p, self.alpha)

    def sets(self) -> list[list[int]]:
        return [elements_of(m) for m in self.members]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "alpha": self.alpha,
            "members": self.sets(),
            "provenance": list(self.provenance),
            "verified": self.verified,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class PerfectFunctionFamily:
    """Functions ``0..n-1 -> 0..range_size-1``; some function is injective on every k-set."""

    n: int
    k: int
    range_size: int
    functions: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.functions)


def threshold(p: int, alpha: float) -> int:
    return max(0, math.ceil(alpha * p - ROUND_GUARD))


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


def _log_binom(a: float, b: float) -> float:
    return math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)


def base_size_bound(n: int, k: int, p: int, alpha: float) -> int:
    """Number of random members drawn by :func:`construct_base`.

    ``k^k / (a^a (k-a)^(k-a)) / C(p, a) * (k+1) ln n`` where ``a`` is the
    number of ``X`` elements a member must capture, ``0^0 = 1``, and at least
    one member is drawn.
    """
    if n <= 1:
        return 1
    a = threshold(p, alpha)
    log_t = (_xlogx(k) - _xlogx(a) - _xlogx(k - a) - _log_binom(p, a)
             + math.log((k + 1) * math.log(n)))
    return max(1, math.ceil(math.exp(log_t) - ROUND_GUARD))


def asymptotic_size_bound(n: int, k: int, p: int, alpha: float) -> float:
    """``C(k, ap) / C(p, ap) * log n`` without the sub-exponential factor (reported only)."""
    a = alpha * p
    return math.exp(_log_binom(k, a) - _log_binom(p, a)) * max(1.0, math.log2(max(n, 2)))


def _subset_masks(n: int, size: int) -> np.ndarray:
    """All ``size``-subsets of ``0..n-1`` as uint64 masks in lexicographic order."""
    if size < 0 or size > n:
        return np.zeros(0, dtype=np.uint64)
    combos = list(itertools.combinations(range(n), size))
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    if size == 0:
        return np.zeros(1, dtype=np.uint64)
    idx = np.array(combos, dtype=np.int64)
    return np.bitwise_or.reduce(weights[idx], axis=1)


def _uncovered(targets: np.ndarray, cover: np.ndarray, chunk: int = 128) -> np.ndarray:
    """Targets ``Y`` for which no mask in ``cover`` is disjoint from ``Y``."""
    remaining = targets
    for start in range(0, cover.size, chunk):
        if remaining.size == 0:
            break
        block = cover[start:start + chunk]
        hit = ((remaining[:, None] & block[None, :]) == 0).any(axis=1)
        remaining = remaining[~hit]
    return remaining


def verify_universal(family: UniversalFamily, limit: int | None = None
                     ) -> tuple[bool, tuple[list[int], list[int]] | None]:
    """Exhaustively check the universality condition.

    Returns ``(True, None)`` or ``(False, (X, Y))`` with the lexicographically
    first violating pair. Raises :class:`BudgetExceeded` when the number of
    ``(X, Y)`` pairs exceeds ``limit``.
    """
    n, k, p = family.n, family.k, family.p
    q = k - p
    if p > n or q > n - p:
        return True, None
    pairs = math.comb(n, p) * math.comb(n - p, q)
    if pairs > (budget() if limit is None else limit):
        raise BudgetExceeded(f"{pairs} (X, Y) pairs exceed the verification budget")
    need = threshold(p, family.alpha)
    members = np.fromiter(family.members, dtype=np.uint64, count=len(family.members))
    ys_all = _subset_masks(n, q)
    for x in itertools.combinations(range(n), p):
        xm = np.uint64(sum(1 << e for e in x))
        good = members[np.bitwise_count(members & xm) >= need]
        ys = ys_all[(ys_all & xm) == 0]
        left = ys if good.size == 0 else _uncovered(ys, good)
        if left.size:
            return False, (list(x), elements_of(int(left[0])))
    return True, None


def _is_verified(family: UniversalFamily, limit: int | None) -> bool | None:
    try:
        ok, _ = verify_universal(family, limit)
    except BudgetExceeded:
        return None
    return ok


def _draw_members(n: int, count: int, prob: float, rng: np.random.Generator) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    out: dict[int, None] = {}
    step = max(1, 2_000_000 // max(n, 1))
    for start in range(0, count, step):
        rows = min(step, count - start)
        bits = rng.random((rows, n)) < prob
        masks = (bits.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
        out.update(dict.fromkeys(masks.tolist()))
    return tuple(out)


@functools.lru_cache(maxsize=512)
def construct_base(n: int, k: int, p: int, alpha: float, seed: int = 0,
                   verify_limit: int | None = None, retries: int = RETRY_CAP) -> UniversalFamily:
    """Random construction checked by exhaustive verification.

    Each attempt draws :func:`base_size_bound` members, including every
    element independently with probability ``ceil(alpha * p) / k``; duplicates are
    dropped. A failed check re-draws with seed ``seed + 1``, ``seed + 2``, ...
    When the verification would exceed ``verify_limit`` the first draw is
    returned with ``verified=False``.
    """
    if not 0 <= p <= k:
        raise ValueError(f"need 0 <= p <= k, got p={p}, k={k}")
    count = base_size_bound(n, k, p, alpha)
    if count * max(n, 1) > budget():
        raise BudgetExceeded(f"{count} random members over {n} elements exceed the budget")
    prob = threshold(p, alpha) / k if k else 0.0
    for attempt in range(retries):
        rng = np.random.default_rng(seed + attempt)
        members = _draw_members(n, count, prob, rng)
        fam = UniversalFamily(n, k, p, alpha, members, ("base-random",), False, seed + attempt)
        ok = _is_verified(fam, verify_limit)
        if ok is None:
            return fam
        if ok:
            return UniversalFamily(n, k, p, alpha, members, ("base-random",), True, seed + attempt)
    raise RetryCapExceeded(f"no verified ({n},{k},{p},{alpha}) family after {retries} draws")


def verify_perfect(family: PerfectFunctionFamily) -> bool:
    if family.k > family.n:
        return True
    funcs = [np.array(f, dtype=np.int64) for f in family.functions]
    for s in itertools.combinations(range(family.n), family.k):
        idx = list(s)
        if not any(len(set(f[idx].tolist())) == family.k for f in funcs):
            return False
    return True


@functools.lru_cache(maxsize=256)
def build_perfect_family(n: int, k: int, seed: int = 0, max_draws: int = 10_000) -> PerfectFunctionFamily:
    """k-perfect functions into a range of size ``k**2``.

    When ``n <= k**2`` the identity already is injective everywhere and is
    returned alone. Otherwise random functions are drawn until every k-subset
    has an injective one (tracked exhaustively).
    """
    if n <= k * k or k <= 1:
        if n <= k * k:
            return PerfectFunctionFamily(n, k, max(n, 1) if k else 1, (tuple(range(n)),))
        return PerfectFunctionFamily(n, k, 1, (tuple([0] * n),))
    subsets = math.comb(n, k)
    if subsets * k > budget():
        raise BudgetExceeded(f"{subsets} {k}-subsets exceed the budget")
    m = k * k
    uncovered = np.array(list(itertools.combinations(range(n), k)), dtype=np.int64)
    rng = np.random.default_rng(seed)
    functions = []
    for _ in range(max_draws):
        if uncovered.size == 0:
            break
        f = rng.integers(0, m, size=n)
        vals = np.sort(f[uncovered], axis=1)
        injective = (np.diff(vals, axis=1) != 0).all(axis=1)
        if injective.any():
            functions.append(tuple(int(v) for v in f))
            uncovered = uncovered[~injective]
    if uncovered.size:
        raise RetryCapExceeded(f"no {k}-perfect family on {n} elements after {max_draws} draws")
    return PerfectFunctionFamily(n, k, m, tuple(functions))


def lift_by_hashing(inner: UniversalFamily, perfect: PerfectFunctionFamily, n: int,
                    verify_limit: int | None = None) -> UniversalFamily:
    """Union over functions ``f`` of the preimages ``f^-1(F)`` of inner members."""
    if inner.k == 0:
        fam = UniversalFamily(n, 0, 0, inner.alpha, (0,), ("hash-lift",) + inner.provenance)
        return _with_verification(fam, verify_limit)
    if perfect.n != n or perfect.k != inner.k or perfect.range_size != inner.n:
        raise ValueError(
            f"parameter mismatch: inner universe {inner.n} (k={inner.k}) vs perfect family "
            f"{perfect.n}->{perfect.range_size} (k={perfect.k}), target n={n}")
    inner_masks = np.fromiter(inner.members, dtype=np.uint64, count=len(inner.members))
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    out: dict[int, None] = {}
    for f in perfect.functions:
        fa = np.array(f, dtype=np.uint64)
        bits = (inner_masks[:, None] >> fa[None, :]) & np.uint64(1)
        pre = (bits * weights[None, :]).sum(axis=1, dtype=np.uint64)
        out.update(dict.fromkeys(pre.tolist()))
    fam = UniversalFamily(n, inner.k, inner.p, inner.alpha, tuple(out),
                          ("hash-lift",) + inner.provenance, False, inner.seed)
    return _with_verification(fam, verify_limit)


def _with_verification(fam: UniversalFamily, verify_limit: int | None) -> UniversalFamily:
    ok = _is_verified(fam, verify_limit)
    if ok is False:
        raise AssertionError(f"construction produced a non-universal family {fam.params}")
    return UniversalFamily(fam.n, fam.k, fam.p, fam.alpha, fam.members, fam.provenance,
                           bool(ok), fam.seed)


def block_width(k: int) -> int:
    """``floor(log2(k)^2)`` clamped to ``1..k``."""
    if k <= 1:
        return 1
    return min(k, max(1, math.floor(math.log2(k) ** 2)))


def consecutive_partitions(n: int, t: int) -> Iterator[list[range]]:
    """All splits of ``0..n-1`` into ``t`` contiguous, possibly empty blocks."""
    for cuts in itertools.combinations_with_replacement(range(n + 1), t - 1):
        bounds = (0,) + cuts + (n,)
        yield [range(bounds[i], bounds[i + 1]) for i in range(t)]


def composition_tuples(p: int, s: int, t: int) -> Iterator[tuple[int, ...]]:
    """t-tuples of integers in ``0..s`` summing to ``p``."""
    if t == 0:
        if p == 0:
            yield ()
        return
    for first in range(min(s, p) + 1):
        for rest in composition_tuples(p - first, s, t - 1):
            yield (first,) + rest


def compose_by_partition(builder: Callable[[int, int, int], UniversalFamily], n: int, k: int,
                         p: int, alpha: float, verify_limit: int | None = None) -> UniversalFamily:
    """Blockwise composition over every consecutive partition and tuple of quotas.

    ``builder(n, s, q)`` must return an ``(n, s, q, alpha)``-universal family.
    """
    if k == 0:
        fam = builder(n, 0, 0)
        return UniversalFamily(n, 0, 0, alpha, fam.members, ("partition-compose",) + fam.provenance,
                               fam.verified, fam.seed)
    s = block_width(k)
    t = -(-k // s)
    inner = {q: builder(n, s, q) for q in range(min(s, p) + 1)}
    tuples = list(composition_tuples(p, s, t))

    restricted: dict[tuple[int, int, int], list[int]] = {}

    def cut(q: int, block: range) -> list[int]:
        key = (q, block.start, block.stop)
        if key not in restricted:
            bm = ((1 << block.stop) - 1) ^ ((1 << block.start) - 1)
            restricted[key] = list(dict.fromkeys(m & bm for m in inner[q].members))
        return restricted[key]

    limit = budget()
    estimate = 0
    for blocks in consecutive_partitions(n, t):
        for tup in tuples:
            estimate += math.prod(len(cut(q, b)) for q, b in zip(tup, blocks))
            if estimate > limit:
                raise BudgetExceeded(f"composition would enumerate more than {limit} members")

    out: dict[int, None] = {}
    for blocks in consecutive_partitions(n, t):
        for tup in tuples:
            acc = [0]
            for q, b in zip(tup, blocks):
                acc = [a | m for a in acc for m in cut(q, b)]
            out.update(dict.fromkeys(acc))
    prov = ("partition-compose",) + inner[min(s, p)].provenance
    fam = UniversalFamily(n, k, p, alpha, tuple(out), prov, False, inner[0].seed)
    return _with_verification(fam, verify_limit)


def build_universal(n: int, k: int, p: int, alpha: float, strategy: str = "pipeline",
                    seed: int = 0, verify_limit: int | None = None) -> UniversalFamily:
    """Build an ``(n, k, p, alpha)``-universal set.

    ``strategy`` is one of ``base``, ``hash-lift``, ``partition`` or
    ``pipeline`` (base -> hash-lift -> partition -> hash-lift). Hash lifts
    target a range of ``min(n, k**2)`` elements; when ``n <= k**2`` the lift
    uses the identity. Families are verified whenever the check fits in
    ``verify_limit``; otherwise ``verified`` is False.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if not 0 <= p <= k:
        raise ValueError(f"need 0 <= p <= k, got p={p}, k={k}")

    def base(n_: int, k_: int, p_: int) -> UniversalFamily:
        return construct_base(n_, k_, p_, alpha, seed, verify_limit)

    def hashed(n_: int, k_: int, p_: int, inner_builder=base) -> UniversalFamily:
        m = min(n_, k_ * k_) if k_ else n_
        inner = inner_builder(m, k_, p_)
        perfect = build_perfect_family(n_, k_, seed)
        return lift_by_hashing(inner, perfect, n_, verify_limit)

    if strategy == "base":
        return base(n, k, p)
    if strategy == "hash-lift":
        return hashed(n, k, p)
    if strategy == "partition":
        return compose_by_partition(base, n, k, p, alpha, verify_limit)

    def composed(n_: int, k_: int, p_: int) -> UniversalFamily:
        return compose_by_partition(hashed, n_, k_, p_, alpha, verify_limit)

    fam = hashed(n, k, p, composed)
    return UniversalFamily(fam.n, fam.k, fam.p, fam.alpha, fam.members,
                           ("pipeline",) + fam.provenance, fam.verified, seed)
