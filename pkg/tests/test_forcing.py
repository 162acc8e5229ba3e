import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexforcing.errors import NoPerfectMatching, NotCatacondensed
from hexforcing.forcing import (
    cycle_from_vertices,
    definitional_counterexample,
    enumerate_nice_cycles,
    frame_constraints,
    is_complete_forcing_set_cata,
    is_complete_forcing_set_def,
    is_complete_forcing_set_nice,
    min_complete_forcing,
    minimum_hitting_set,
    uncovered_frame,
)
from hexforcing.hexgrid import HexSystem
from hexforcing.matchings import enumerate_perfect_matchings, has_pm_without

from conftest import ANTHRACENE, CORONENE, NAPHTHALENE, P22, PHENANTHRENE, SINGLE
from oracles import (
    brute_is_cfs,
    brute_min_cfs_size,
    brute_perfect_matchings,
    frames_of,
    nice_cycle_census,
    random_catacondensed,
    random_polyhex,
)


def test_nice_cycles_match_symmetric_difference_census(small_system):
    hs = small_system
    pms = brute_perfect_matchings(hs.vertices, hs.edges)
    expected = nice_cycle_census(pms)
    got = {c.edges for c in enumerate_nice_cycles(hs)}
    assert got == expected


@pytest.mark.parametrize(
    "hs, count", [(SINGLE, 1), (NAPHTHALENE, 3), (ANTHRACENE, 6), (PHENANTHRENE, 6), (P22, 11)]
)
def test_nice_cycle_counts(hs, count):
    assert len(enumerate_nice_cycles(hs)) == count


def test_frames_split_the_cycle():
    for c in enumerate_nice_cycles(P22):
        assert c.frame_a | c.frame_b == c.edges
        assert not c.frame_a & c.frame_b
        assert min(c.edges) in c.frame_a
        assert set(c.frames) == set(frames_of(c.edges))


def test_cycle_from_vertices_rejects_odd():
    with pytest.raises(ValueError):
        cycle_from_vertices([(0, 0), (1, 1), (2, 0)])


def test_no_perfect_matching_raises():
    hs = HexSystem([(0, 0), (2, 0), (1, 3)])
    with pytest.raises(NoPerfectMatching):
        enumerate_nice_cycles(hs)
    with pytest.raises(NoPerfectMatching):
        is_complete_forcing_set_nice(hs, [])


def test_single_hexagon_all_subsets_by_brute_force():
    pms = brute_perfect_matchings(SINGLE.vertices, SINGLE.edges)
    for k in range(7):
        for s in itertools.combinations(SINGLE.edges, k):
            expected = brute_is_cfs(pms, s)
            assert is_complete_forcing_set_nice(SINGLE, s) == expected
            assert is_complete_forcing_set_def(SINGLE, s) == expected


@pytest.mark.parametrize("hs", [NAPHTHALENE, ANTHRACENE, PHENANTHRENE, P22])
def test_nice_and_definitional_agree_on_random_subsets(hs):
    rng = random.Random(7)
    pms = brute_perfect_matchings(hs.vertices, hs.edges)
    for _ in range(120):
        s = [e for e in hs.edges if rng.random() < 0.45]
        expected = brute_is_cfs(pms, s)
        assert is_complete_forcing_set_nice(hs, s) == expected
        assert is_complete_forcing_set_def(hs, s) == expected


def test_counterexample_is_a_real_failure():
    s = frozenset(NAPHTHALENE.edges[:3])
    m = definitional_counterexample(NAPHTHALENE, s)
    assert m is not None
    others = [o for o in enumerate_perfect_matchings(NAPHTHALENE) if m & s <= o]
    assert len(others) >= 2


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6), st.data())
def test_enumerate_and_search_routes_agree(n, seed, data):
    hs = random_polyhex(random.Random(seed), n)
    if not has_pm_without(hs):
        return
    s = data.draw(st.lists(st.sampled_from(hs.edges), unique=True))
    a = uncovered_frame(hs, s, method="enumerate")
    b = uncovered_frame(hs, s, method="search")
    assert (a is None) == (b is None)
    for found in (a, b):
        if found is not None:
            cycle, frame = found
            assert frame in cycle.frames
            assert not frame & frozenset(s)
            assert has_pm_without(hs, removed=cycle.vertices)


def test_unknown_method():
    with pytest.raises(ValueError):
        uncovered_frame(SINGLE, [], method="psychic")


@pytest.mark.parametrize("hs", [SINGLE, NAPHTHALENE, ANTHRACENE, PHENANTHRENE, P22])
def test_min_complete_forcing_against_exhaustive_search(hs):
    pms = brute_perfect_matchings(hs.vertices, hs.edges)
    expected = brute_min_cfs_size(hs.edges, nice_cycle_census(pms))
    k, witness = min_complete_forcing(hs)
    assert k == expected == len(witness)
    assert brute_is_cfs(pms, witness)


def test_witness_is_lexicographically_least():
    k, witness = min_complete_forcing(NAPHTHALENE)
    idx = NAPHTHALENE.edge_index
    best = None
    for combo in itertools.combinations(NAPHTHALENE.edges, k):
        if is_complete_forcing_set_nice(NAPHTHALENE, combo):
            best = combo
            break
    assert sorted(idx[e] for e in witness) == sorted(idx[e] for e in best)


def test_min_complete_forcing_is_deterministic():
    assert min_complete_forcing(P22) == min_complete_forcing(HexSystem(reversed(P22.centers)))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=12), st.integers(1, 10))
def test_minimum_hitting_set_against_brute_force(masks, width):
    masks = [m & ((1 << width) - 1) or 1 for m in masks]
    got = minimum_hitting_set(masks)
    assert all(got & m for m in masks)
    best = min(
        k for k in range(width + 1)
        for combo in itertools.combinations(range(width), k)
        if all(m & sum(1 << i for i in combo) for m in masks)
    )
    assert got.bit_count() == best


def test_hitting_set_rejects_empty_constraint():
    with pytest.raises(ValueError):
        minimum_hitting_set([0, 1])
    assert minimum_hitting_set([]) == 0


def test_frame_constraints_are_distinct_masks():
    cons = frame_constraints(P22)
    assert len(cons) == len(set(cons))
    assert len(cons) == 2 * len(enumerate_nice_cycles(P22))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6), st.data())
def test_catacondensed_test_agrees(n, seed, data):
    hs = random_catacondensed(random.Random(seed), n)
    s = data.draw(st.lists(st.sampled_from(hs.edges), unique=True))
    assert is_complete_forcing_set_cata(hs, s) == is_complete_forcing_set_nice(hs, s)


def test_cata_test_refuses_pericondensed():
    with pytest.raises(NotCatacondensed):
        is_complete_forcing_set_cata(CORONENE, [])
