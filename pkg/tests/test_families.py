from collections import Counter

import pytest

from noncritical import (
    Hypothesis,
    classify_hypothesis,
    gen_fig4,
    gen_fig5,
    gen_fig6,
    gen_fig7,
    gen_random_conditioned,
    gen_tournament,
    generate,
    is_strongly_connected,
)
from noncritical.errors import BadSize
from noncritical.families import arc_labels, family_spec

from conftest import brute_noncritical, strong_by_matrix

LEGAL = {
    "fig4": range(4, 41, 2),
    "fig5": range(6, 41),
    "fig6": range(5, 42, 2),
    "fig7": range(5, 41),
    "tournament": range(4, 41),
}


def _min_pair_sum(D):
    deg = D.degrees()
    return min(deg[u] + deg[v] for u, v in D.arcs)


def test_fig4_small():
    D = gen_fig4(4)
    assert D.n == 4
    assert set(arc_labels(D, family_spec("fig4", 4))) == {("a1", "b1"), ("a2", "b2"), ("b1", "a2"), ("b2", "a1")}
    assert brute_noncritical(4, D.arcs) == frozenset()
    assert set(gen_fig4(6).degrees()) == {3}
    assert _min_pair_sum(gen_fig4(10)) == 10


def test_fig5_degrees_at_seven():
    D, spec = generate("fig5", 7)
    deg = D.degrees()
    names = spec.label_map
    assert deg[names["x1"]] == deg[names["x4"]] == 2
    for v in ("a1", "a3", "x2", "x3"):
        assert deg[names[v]] == 5
    assert deg[names["a2"]] == 4
    assert brute_noncritical(7, D.arcs) == frozenset()


def test_fig7_small():
    D, spec = generate("fig7", 6)
    deg = D.degrees()
    assert deg[spec.label_map["x"]] == 2 and deg[spec.label_map["a1"]] == 5
    assert classify_hypothesis(D).min_adjacent_degree_sum == 7
    assert strong_by_matrix(6, D.arcs, keep=range(5))


def test_fig7_removing_inner_a_cuts_off_x():
    D, spec = generate("fig7", 9)
    x = spec.label_map["x"]
    for i in range(1, 8):
        rest = [v for v in range(9) if v != i]
        assert not strong_by_matrix(9, D.arcs, keep=rest)
    assert strong_by_matrix(9, D.arcs, keep=range(8))
    assert x == 8


def test_tournament_arcs():
    D = gen_tournament(5)
    assert D.arc_count == 10
    pairs = Counter(frozenset(a) for a in D.arcs)
    assert len(pairs) == 10 and set(pairs.values()) == {1}
    assert brute_noncritical(4, gen_tournament(4).arcs) == {0, 3}


@pytest.mark.parametrize("family", sorted(LEGAL))
def test_degree_tables_and_tightness(family):
    for n in LEGAL[family]:
        D, spec = generate(family, n)
        assert is_strongly_connected(D)
        assert strong_by_matrix(n, D.arcs, keep=range(n))
        deg = Counter(D.degrees())
        cls = classify_hypothesis(D)
        oracle = brute_noncritical(n, D.arcs)
        if family == "fig4":
            assert deg == Counter({n // 2: n})
        elif family == "fig5":
            assert deg == Counter({2: 2, n - 2: 4}) + Counter({n - 3: n - 6})
        elif family == "fig6":
            assert deg == Counter({(n + 1) // 2: n - 1, n - 1: 1})
            assert cls.min_degree == (n + 1) // 2
        elif family == "fig7":
            assert deg == Counter({2: 1, n - 1: 2, n - 2: n - 3})
        if family in ("fig4", "fig5"):
            assert cls.label is Hypothesis.NONE and cls.min_adjacent_degree_sum == n
            assert oracle == frozenset()
        elif family in ("fig6", "fig7"):
            assert cls.label is Hypothesis.THM1 and cls.min_adjacent_degree_sum == n + 1
            assert oracle == {spec.label_map["x"]}
        else:
            assert len(oracle) == 2


@pytest.mark.parametrize("family, n", [("fig4", 5), ("fig4", 2), ("fig5", 5), ("fig6", 6), ("fig6", 3), ("fig7", 4), ("tournament", 2)])
def test_bad_sizes(family, n):
    with pytest.raises(BadSize):
        generate(family, n)


def test_unknown_family():
    with pytest.raises(ValueError):
        generate("fig9", 6)


def test_random_conditioned_contract():
    D = gen_random_conditioned(8, Hypothesis.THM1, 42)
    assert D == gen_random_conditioned(8, "Thm1", 42)
    assert is_strongly_connected(D)
    assert classify_hypothesis(D).min_adjacent_degree_sum >= 9
    with pytest.raises(BadSize):
        gen_random_conditioned(3, Hypothesis.THM1, 1)


@pytest.mark.parametrize("target", [Hypothesis.THM1, Hypothesis.COR2])
def test_random_conditioned_meets_target(target):
    for seed in range(300):
        n = 4 + seed % 20
        D = gen_random_conditioned(n, target, seed)
        assert strong_by_matrix(n, D.arcs, keep=range(n))
        assert classify_hypothesis(D).label >= target
