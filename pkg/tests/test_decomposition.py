import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noncritical import (
    MpssCertificate,
    Violation,
    build_digraph,
    complete_digraph,
    directed_cycle,
    enumerate_mpss,
    gen_fig7,
    grow_mpss,
    grow_mpss_from_set,
    shortest_handle,
    verify_lemma1,
)
from noncritical.decomposition import growth_steps, simple_paths
from noncritical.errors import (
    DegenerateWhole,
    EmptySet,
    NotStronglyConnected,
    PathEnumerationBudgetExceeded,
    SeedNotProper,
    SeedNotStronglyConnected,
    TooLarge,
)
from noncritical.validate import _Graph, check_mpss

from conftest import bfs_distances, brute_mpss, strong_by_matrix, strong_digraphs


def test_shortest_handle_examples():
    assert shortest_handle(directed_cycle(4), {0}).interior == (1, 2, 3)
    h = shortest_handle(complete_digraph(4), {0, 1})
    assert h.interior == (2,)
    assert h.entry_arc == (0, 2) and h.exit_arc == (2, 0)
    h = shortest_handle(gen_fig7(6), range(5))
    assert (h.entry_arc, h.interior, h.exit_arc) == ((4, 5), (5,), (5, 0))


def test_grow_examples():
    cert = grow_mpss(directed_cycle(4), 0)
    assert cert.S == {0} and set(cert.complement) == {1, 2, 3}
    cert = grow_mpss(complete_digraph(4), 0)
    assert len(cert.S) == 3 and len(cert.complement) == 1
    cert = grow_mpss(gen_fig7(6), 0)
    assert cert.S == set(range(5))
    assert cert.omega_in == cert.omega_out == 5


def test_grow_from_case_b_cycle(e2):
    steps = list(growth_steps(e2, {0, 1, 2}))
    # handle p1 -> y -> p2 goes in first
    assert steps == [frozenset({0, 1, 2}), frozenset({0, 1, 2, 3})]
    cert = grow_mpss_from_set(e2, {0, 1, 2})
    assert cert.S == {0, 1, 2, 3} and cert.complement == (4,)


def test_grow_e1_leaves_two_vertex_complement(e1):
    assert list(growth_steps(e1, {0})) == [frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})]
    cert = grow_mpss_from_set(e1, {0})
    assert cert.S == {0, 1, 2}
    assert (cert.omega_in, cert.omega_out, cert.complement) == (3, 4, (3, 4))


def test_triangle_seed_in_complete_four():
    cert = grow_mpss_from_set(complete_digraph(4), {0, 1, 2})
    assert cert.complement == (3,)


def test_grow_errors():
    with pytest.raises(DegenerateWhole):
        grow_mpss(build_digraph(1, []), 0)
    with pytest.raises(NotStronglyConnected):
        grow_mpss(build_digraph(3, [(0, 1), (1, 2)]), 0)
    with pytest.raises(SeedNotStronglyConnected):
        grow_mpss_from_set(directed_cycle(4), {0, 1})
    with pytest.raises(SeedNotProper):
        grow_mpss_from_set(directed_cycle(4), range(4))
    with pytest.raises(EmptySet):
        grow_mpss_from_set(directed_cycle(4), [])


def test_verify_four_cycle():
    cert = verify_lemma1(directed_cycle(4), {0})
    assert isinstance(cert, MpssCertificate)
    assert (cert.omega_in, cert.omega_out, cert.handle.interior) == (1, 3, (1, 2, 3))


def test_verify_condition_one_failure():
    result = verify_lemma1(complete_digraph(4), {0, 1})
    assert isinstance(result, Violation)
    assert result.condition == 1
    assert result.arcs == ((0, 2), (0, 3))


def test_verify_condition_two_failure():
    D = build_digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
    result = verify_lemma1(D, {0})
    assert result.condition == 2
    assert {a[0] for a in result.arcs} == {1, 2}


def test_verify_condition_three_two_paths():
    D = build_digraph(5, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 0)])
    result = verify_lemma1(D, {0})
    assert result.condition == 3
    assert result.paths == ((1, 2, 4), (1, 3, 4))


def test_verify_condition_three_missing_vertex():
    D = build_digraph(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 1)])
    result = verify_lemma1(D, {0})
    assert result.condition == 3
    assert result.paths == ((1, 2),)


def test_verify_fig7():
    cert = verify_lemma1(gen_fig7(6), range(5))
    assert cert.omega_in == cert.omega_out == 5


def test_path_budget():
    D = complete_digraph(8)
    with pytest.raises(PathEnumerationBudgetExceeded):
        simple_paths(D, 0, 7, limit=10**6, budget=100)
    assert len(simple_paths(D, 0, 7, limit=3)) == 3


def test_enumerate_examples(e1):
    assert enumerate_mpss(directed_cycle(4)) == [frozenset({v}) for v in range(4)]
    assert set(enumerate_mpss(complete_digraph(4))) == {frozenset(range(4)) - {v} for v in range(4)}
    found = set(enumerate_mpss(e1))
    assert found == brute_mpss(5, e1.arcs)
    assert frozenset({0, 1, 2}) in found
    with pytest.raises(TooLarge):
        enumerate_mpss(complete_digraph(17))


@settings(max_examples=150, deadline=None)
@given(strong_digraphs(min_n=2, max_n=9), st.data())
def test_growth_is_certified_from_every_seed(D, data):
    seed = data.draw(st.integers(0, D.n - 1))
    cert = grow_mpss(D, seed)
    assert seed in cert.S
    assert not cert.S & set(cert.handle.interior)
    assert set(cert.handle.interior) | cert.S == set(range(D.n))
    assert check_mpss(_Graph(D.n, D.arcs), cert.to_dict()) == []


@settings(max_examples=150, deadline=None)
@given(strong_digraphs(min_n=2, max_n=9), st.data())
def test_each_growth_step_enlarges_and_stays_strong(D, data):
    seed = data.draw(st.integers(0, D.n - 1))
    steps = list(growth_steps(D, {seed}))
    for before, after in zip(steps, steps[1:]):
        assert before < after
    for step in steps:
        assert strong_by_matrix(D.n, D.arcs, step)


@settings(max_examples=150, deadline=None)
@given(strong_digraphs(min_n=3, max_n=7), st.data())
def test_shortest_handle_length_matches_bfs(D, data):
    strong_sets = [
        {v for v in range(D.n) if mask >> v & 1}
        for mask in range(1, (1 << D.n) - 1)
        if strong_by_matrix(D.n, D.arcs, {v for v in range(D.n) if mask >> v & 1})
    ]
    S = data.draw(st.sampled_from(strong_sets))
    handle = shortest_handle(D, S)
    comp = set(range(D.n)) - S
    heads = {v for u, v in D.arcs if u in S and v in comp}
    tails = {u for u, v in D.arcs if v in S and u in comp}
    best = min(
        bfs_distances(D.n, D.arcs, h, skip=S).get(t, 10**9) + 1 for h in heads for t in tails
    )
    assert len(handle.interior) == best


@settings(max_examples=200, deadline=None)
@given(strong_digraphs(min_n=2, max_n=6))
def test_lemma1_biconditional_against_brute_force(D):
    maximal = brute_mpss(D.n, D.arcs)
    assert set(enumerate_mpss(D)) == maximal
    for mask in range(1, (1 << D.n) - 1):
        S = {v for v in range(D.n) if mask >> v & 1}
        if not strong_by_matrix(D.n, D.arcs, S):
            continue
        certified = isinstance(verify_lemma1(D, S), MpssCertificate)
        assert certified == (frozenset(S) in maximal)
