import pytest
from hypothesis import given, strategies as st

from alphapack.io import instance_from_json, instance_to_json
from alphapack.model import (
    Graph,
    Instance,
    P2Packing,
    ThreeSetFamily,
    TradeoffParams,
    TripartiteFamily,
    elements_of,
    mask_of,
    required_size,
    validate_instance,
)
from alphapack.oracles import plant_instance


@pytest.mark.parametrize("k, alpha, want", [(10, 0.8, 8), (7, 0.8, 6), (5, 1.0, 5), (0, 0.9, 0),
                                            (4, 0.75, 3), (20, 0.85, 17)])
def test_required_size(k, alpha, want):
    assert required_size(k, alpha) == want


@pytest.mark.parametrize("k, alpha", [(-1, 0.5), (3, 0.0), (3, 1.2)])
def test_required_size_rejects(k, alpha):
    with pytest.raises(ValueError):
        required_size(k, alpha)


def test_sets_are_normalised():
    fam = ThreeSetFamily(5, [[2, 0, 1], [0, 1, 2], [4, 3, 2]])
    assert fam.sets == ((0, 1, 2), (2, 3, 4))


def test_graph_dedupes_edges():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))


def test_validate_valid_family():
    assert validate_instance(ThreeSetFamily(4, [[0, 1, 2], [1, 2, 3]])) == []


def test_validate_repeated_element():
    report = validate_instance(ThreeSetFamily(3, [[0, 0, 1]]))
    assert any("<3 distinct elements" in r for r in report)


def test_validate_not_one_per_block():
    report = validate_instance(TripartiteFamily((2, 2, 2), [[0, 1, 4]]))
    assert any("not one-per-block" in r for r in report)


def test_validate_graph_problems():
    report = validate_instance(Graph(3, [(0, 0), (1, 5)]))
    assert any("self-loop" in r for r in report)
    assert any("outside" in r for r in report)


def test_tripartite_blocks():
    fam = TripartiteFamily((2, 3, 1), [])
    assert fam.n == 6
    assert list(fam.block(1)) == [2, 3, 4]
    assert [fam.block_of(e) for e in range(6)] == [0, 0, 1, 1, 1, 2]


def test_to_three_sets_collapses_triangle():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.to_three_sets().sets == ((0, 1, 2),)
    assert tri.middle_for((0, 1, 2)) == 0


def test_middle_for_path():
    g = Graph(3, [(0, 2), (1, 2)])
    assert g.middle_for((0, 1, 2)) == 2
    assert Graph(3, [(0, 1)]).middle_for((0, 1, 2)) is None


@pytest.mark.parametrize("alpha, eps, want", [(0.8, 0.0, 0.2), (1.0, 0.0, 1.0), (0.75, 0.0, 0.0),
                                              (0.8, 0.25, 0.6)])
def test_beta_star(alpha, eps, want):
    assert TradeoffParams(alpha, eps).beta_star == pytest.approx(want)


@pytest.mark.parametrize("kwargs", [dict(alpha=0.7), dict(alpha=0.8, epsilon=-1), dict(alpha=0.8, c=0.5)])
def test_tradeoff_params_validation(kwargs):
    with pytest.raises(ValueError):
        TradeoffParams(**kwargs)


def test_instance_kind_checked():
    with pytest.raises(TypeError):
        Instance("p2", ThreeSetFamily(3, []))
    with pytest.raises(ValueError):
        Instance("bogus", Graph(1))


def test_packing_len():
    assert len(P2Packing(((0, 1, 2),))) == 1


@given(st.sets(st.integers(0, 61)))
def test_mask_roundtrip(elems):
    assert elements_of(mask_of(elems)) == sorted(elems)


@given(st.sampled_from(["p2", "3sp", "3dm"]), st.integers(0, 4), st.integers(0, 10), st.integers(0, 50))
def test_json_roundtrip(kind, k, noise, seed):
    inst = plant_instance(kind, k, noise, seed)
    back = instance_from_json(instance_to_json(inst))
    assert back == inst
