import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alphapack.model import BudgetExceeded, mask_of
from alphapack.universal import (
    UniversalFamily,
    base_size_bound,
    block_width,
    build_perfect_family,
    build_universal,
    composition_tuples,
    compose_by_partition,
    consecutive_partitions,
    construct_base,
    lift_by_hashing,
    threshold,
    verify_perfect,
    verify_universal,
)


def fam(n, k, p, alpha, sets):
    return UniversalFamily(n, k, p, alpha, tuple(mask_of(s) for s in sets))


def brute_universal(f: UniversalFamily) -> bool:
    """Direct transcription of the definition over element sets."""
    need = threshold(f.p, f.alpha)
    members = [set(m) for m in f.sets()]
    for X in itertools.combinations(range(f.n), f.p):
        rest = [e for e in range(f.n) if e not in X]
        for Y in itertools.combinations(rest, f.k - f.p):
            if not any(len(F & set(X)) >= need and not F & set(Y) for F in members):
                return False
    return True


def test_singletons_are_universal():
    assert verify_universal(fam(5, 2, 1, 1.0, [[i] for i in range(5)])) == (True, None)


def test_whole_set_when_y_empty():
    assert verify_universal(fam(4, 4, 4, 1.0, [[0, 1, 2, 3]]))[0]


def test_first_counterexample():
    ok, bad = verify_universal(fam(4, 2, 1, 1.0, [[0, 1], [2, 3]]))
    assert not ok
    assert bad == ([0], [1])


def test_verify_budget():
    with pytest.raises(BudgetExceeded):
        verify_universal(fam(20, 10, 5, 1.0, [[0]]), limit=1000)


@pytest.mark.parametrize("params", [(6, 2, 2, 1.0), (8, 4, 2, 0.5), (7, 3, 3, 2 / 3), (12, 5, 2, 2 / 3)])
def test_construct_base_verified(params):
    f = construct_base(*params, seed=0)
    assert f.verified
    assert verify_universal(f)[0]
    assert len(f) <= base_size_bound(*params)


def test_construct_base_single_element():
    f = construct_base(1, 1, 1, 1.0, seed=0)
    assert mask_of([0]) in f.members


def test_size_bound_value():
    # k^k/(a^a (k-a)^(k-a)) / C(p,a) * (k+1) ln n at n=8, k=4, p=2, a=1
    want = 256 / 27 / 2 * 5 * np.log(8)
    assert base_size_bound(8, 4, 2, 0.5) == int(np.ceil(want))


def test_construct_base_deterministic():
    construct_base.cache_clear()
    a = construct_base(8, 4, 2, 0.5, seed=3)
    construct_base.cache_clear()
    b = construct_base(8, 4, 2, 0.5, seed=3)
    assert a.members == b.members


def test_perfect_family_identity():
    pf = build_perfect_family(4, 2, seed=0)
    assert pf.functions == ((0, 1, 2, 3),)
    assert verify_perfect(pf)


@pytest.mark.parametrize("n, k", [(6, 2), (10, 3), (12, 3), (1, 1)])
def test_perfect_family_verified(n, k):
    assert verify_perfect(build_perfect_family(n, k, seed=0))


def test_lift_with_identity_keeps_members():
    inner = construct_base(4, 2, 1, 1.0, seed=0)
    lifted = lift_by_hashing(inner, build_perfect_family(4, 2, 0), 4)
    assert set(lifted.members) == set(inner.members)


def test_lift_vacuous():
    inner = UniversalFamily(1, 0, 0, 1.0, ())
    assert lift_by_hashing(inner, build_perfect_family(5, 0, 0), 5).members == (0,)


def test_lift_mismatch():
    inner = construct_base(4, 2, 1, 1.0, seed=0)
    with pytest.raises(ValueError):
        lift_by_hashing(inner, build_perfect_family(9, 3, 0), 9)


@pytest.mark.parametrize("n, k, p, alpha", [(10, 3, 2, 1.0), (12, 3, 3, 2 / 3), (11, 3, 1, 1.0)])
def test_lift_real_hash(n, k, p, alpha):
    inner = construct_base(k * k, k, p, alpha, seed=0)
    lifted = lift_by_hashing(inner, build_perfect_family(n, k, 0), n)
    assert lifted.verified and verify_universal(lifted)[0]


def test_block_width():
    assert [block_width(k) for k in (1, 2, 3, 4, 5, 8)] == [1, 1, 2, 4, 5, 8]


def test_partitions_cover():
    parts = list(consecutive_partitions(4, 2))
    assert len(parts) == 5
    for blocks in parts:
        assert [e for b in blocks for e in b] == [0, 1, 2, 3]


def test_composition_tuples():
    assert sorted(composition_tuples(2, 1, 3)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_compose_6_4_2():
    builder = lambda n, k, p: construct_base(n, k, p, 1.0, 0)
    f = compose_by_partition(builder, 6, 4, 2, 1.0)
    assert f.verified and verify_universal(f)[0]


def test_compose_single_block_equals_builder():
    builder = lambda n, k, p: construct_base(n, k, p, 1.0, 0)
    f = compose_by_partition(builder, 6, 1, 1, 1.0)
    assert set(f.members) == set(builder(6, 1, 1).members)


def test_build_universal_pipeline_example():
    f = build_universal(12, 6, 2, 0.5, "pipeline", seed=0)
    assert f.verified and f.provenance[0] == "pipeline"


def test_alpha_one_is_classical():
    f = build_universal(7, 3, 2, 1.0, "pipeline", seed=1)
    members = [set(m) for m in f.sets()]
    for X in itertools.combinations(range(7), 2):
        for Y in itertools.combinations([e for e in range(7) if e not in X], 1):
            assert any(set(X) <= F and not F & set(Y) for F in members)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        build_universal(5, 2, 1, 1.0, "magic")


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), st.data())
def test_vectorised_check_matches_definition(n, data):
    k = data.draw(st.integers(0, n))
    p = data.draw(st.integers(0, k))
    alpha = data.draw(st.sampled_from([0.5, 2 / 3, 1.0]))
    members = data.draw(st.lists(st.integers(0, 2 ** n - 1), max_size=12))
    f = UniversalFamily(n, k, p, alpha, tuple(members))
    assert verify_universal(f)[0] == brute_universal(f)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 8), st.data())
def test_supersets_and_smaller_alpha_stay_universal(n, data):
    k = data.draw(st.integers(1, min(n, 4)))
    p = data.draw(st.integers(0, k))
    f = construct_base(n, k, p, 1.0, seed=0)
    extra = data.draw(st.lists(st.integers(0, 2 ** n - 1), max_size=5))
    bigger = UniversalFamily(n, k, p, 1.0, f.members + tuple(extra))
    assert verify_universal(bigger)[0]
    assert verify_universal(UniversalFamily(n, k, p, 0.5, f.members))[0]
