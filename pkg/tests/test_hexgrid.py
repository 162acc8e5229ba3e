import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexforcing.errors import (
    Disconnected,
    EmptySystem,
    HexError,
    HexSyntaxError,
    ParityViolation,
    UnknownEdge,
    UnknownHexagon,
)
from hexforcing.hexgrid import (
    EXTERIOR,
    Color,
    Direction,
    Edge,
    HexCenter,
    HexSystem,
    Role,
    Vertex,
    dual_graph,
    format_cuts,
    format_edges,
    parse,
    parse_cuts,
    parse_edges,
    peripheral_cycle,
    serialize,
)

from conftest import CORONENE, NAPHTHALENE, P22, SINGLE
from oracles import random_polyhex


def test_single_hexagon_counts():
    assert (len(SINGLE.vertices), len(SINGLE.edges)) == (6, 6)
    assert SINGLE.peripheral_edges == frozenset(SINGLE.edges)
    assert sum(v.is_black for v in SINGLE.vertices) == 3


def test_vertex_colors_alternate_along_edges():
    for e in CORONENE.edges:
        assert e.u.color != e.v.color
        assert e.black.color is Color.BLACK and e.white.color is Color.WHITE


def test_edge_directions_and_roles():
    c = HexCenter(0, 0)
    dirs = {r: SINGLE.hexagon_edge(c, r).direction for r in Role}
    assert dirs[Role.L] is dirs[Role.R] is Direction.VERT
    assert dirs[Role.TL] is dirs[Role.BR] is Direction.POS
    assert dirs[Role.TR] is dirs[Role.BL] is Direction.NEG
    for r in Role:
        assert SINGLE.role_of(c, SINGLE.hexagon_edge(c, r)) is r


def test_frames_are_perfect_matchings_of_the_hexagon():
    for c in P22.centers:
        a, b = P22.hexagon_frames(c)
        assert a | b == P22.boundary(c) and not a & b
        for f in (a, b):
            assert len({v for e in f for v in e}) == 6


def test_shared_edge_between_neighbours():
    assert NAPHTHALENE.hexagon_edge((0, 0), Role.R) == NAPHTHALENE.hexagon_edge((2, 0), Role.L)
    assert len(NAPHTHALENE.inner_edges) == 1


@pytest.mark.parametrize(
    "centers, exc",
    [
        ([], EmptySystem),
        ([(1, 0)], ParityViolation),
        ([(0, 1)], ParityViolation),
        ([(0, 0), (4, 0)], Disconnected),
        ([(-1, 3), (3, 3), (0, 6), (2, 6), (0, 0), (2, 0)], HexError),
    ],
)
def test_rejects_bad_center_sets(centers, exc):
    with pytest.raises(exc):
        HexSystem(centers)


def test_unknown_hexagon_and_edge():
    with pytest.raises(UnknownHexagon):
        SINGLE.boundary((2, 0))
    with pytest.raises(UnknownEdge):
        SINGLE.check_edges([((5, 5), (5, 7))])


def test_equality_ignores_order():
    assert HexSystem([(2, 0), (0, 0)]) == NAPHTHALENE
    assert hash(HexSystem([(2, 0), (0, 0)])) == hash(NAPHTHALENE)


def test_dual_graph_p22():
    d = dual_graph(P22)
    inner = [x for x in d.edges if x[1] != EXTERIOR]
    assert len(inner) == 5
    assert len(d.edges) == len(P22.edges)
    g = d.to_networkx()
    assert g.number_of_edges() == len(P22.edges)
    assert g.degree(EXTERIOR) == len(P22.peripheral_edges)


def test_peripheral_cycle_is_a_closed_walk():
    cyc = peripheral_cycle(CORONENE)
    assert set(cyc) == CORONENE.peripheral_edges
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert {a.u, a.v} & {b.u, b.v}


@st.composite
def polyhexes(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 10**6))
    return random_polyhex(random.Random(seed), n)


@settings(max_examples=60, deadline=None)
@given(polyhexes())
def test_euler_relation_and_planarity(hs):
    assert len(hs.edges) == len(hs.vertices) + hs.n - 1
    assert nx.is_connected(hs.graph)
    assert nx.is_bipartite(hs.graph)
    assert len(hs.inner_edges) + len(hs.peripheral_edges) == len(hs.edges)
    assert 6 * hs.n == 2 * len(hs.inner_edges) + len(hs.peripheral_edges)


@settings(max_examples=60, deadline=None)
@given(polyhexes())
def test_serialize_roundtrip(hs):
    text = serialize(hs)
    assert parse(text) == hs
    assert serialize(parse(text)) == text


@settings(max_examples=40, deadline=None)
@given(polyhexes(), st.data())
def test_edge_and_cut_formats_roundtrip(hs, data):
    picks = data.draw(st.lists(st.sampled_from(hs.edges), unique=True))
    assert parse_edges(format_edges(picks)) == frozenset(picks)
    blocks = [frozenset(picks[:2]), frozenset(picks[2:])]
    blocks = [b for b in blocks if b]
    assert parse_cuts(format_cuts(blocks)) == blocks


def test_parse_comments_and_errors():
    hs = parse("# two rings\nHEXSYS 1\n0 0  # first\n\n2 0\n")
    assert hs == NAPHTHALENE
    with pytest.raises(HexSyntaxError):
        parse("")
    with pytest.raises(HexSyntaxError, match="header"):
        parse("HEX 2\n0 0\n")
    with pytest.raises(HexSyntaxError, match="line 3"):
        parse("HEXSYS 1\n0 0\n0 0\n")
    with pytest.raises(HexSyntaxError):
        parse("HEXSYS 1\n0 x\n")
    with pytest.raises(HexSyntaxError):
        parse_edges("0 0 3 3\n")
    with pytest.raises(HexSyntaxError):
        parse_edges("0 1 0\n")


def test_edge_canonical_order():
    e = Edge.of((1, 1), (0, 2))
    assert e.u == Vertex(0, 2) and e == Edge.of((0, 2), (1, 1))
    assert e.midpoint == (0.5, 1.5)
