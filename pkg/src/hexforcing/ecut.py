"""Elementary edge cuts (e-cuts) and complete forcing sets built from them."""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .errors import NotAnECut, UncoveredNiceCycle
from .forcing import (
    ENUMERATION_LIMIT,
    _nice_cycles,
    _require_pm,
    cycle_from_vertices,
    facial_cycles_nice,
)
from .hexgrid import EXTERIOR, Direction, Edge, HexSystem, Vertex
from .matchings import has_pm_without


@dataclass(frozen=True)
class EdgeCutSet:
    edges: frozenset[Edge]
    black_bank: frozenset[Vertex]
    white_bank: frozenset[Vertex]


def _components_without(hs: HexSystem, removed: frozenset[Edge]) -> dict[Vertex, int]:
    label: dict[Vertex, int] = {}
    adj = hs.adjacency
    k = -1
    for start in hs.vertices:
        if start in label:
            continue
        k += 1
        label[start] = k
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in label and Edge.of(v, w) not in removed:
                    label[w] = k
                    queue.append(w)
    return label


def ecut_banks(hs: HexSystem, d: Iterable) -> EdgeCutSet | None:
    """Banks of ``d`` if it is an e-cut, else ``None``.

    Straight from the definition: ``hs - d`` must have exactly two components,
    with every edge of ``d`` black in one of them and white in the other.
    """
    d = hs.check_edges(d)
    if not d:
        return None
    label = _components_without(hs, d)
    if len(set(label.values())) != 2:
        return None
    black_sides = {label[e.black] for e in d}
    white_sides = {label[e.white] for e in d}
    if len(black_sides) != 1 or len(white_sides) != 1 or black_sides == white_sides:
        return None
    (bk,) = black_sides
    return EdgeCutSet(
        edges=d,
        black_bank=frozenset(v for v, k in label.items() if k == bk),
        white_bank=frozenset(v for v, k in label.items() if k != bk),
    )


def is_ecut(hs: HexSystem, d: Iterable) -> bool:
    return ecut_banks(hs, d) is not None


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def is_ecut_dual(hs: HexSystem, d: Iterable) -> bool:
    """Dual-side test: the crossing dual edges form one cycle, and the cut
    edges all show the same color on the same side of that cycle.

    Sides are read off locally at each crossing from the lattice geometry
    (sign of a cross product), so no component search is involved.
    """
    d = hs.check_edges(d)
    if not d:
        return False
    ends: dict[Edge, tuple] = {}
    incident: dict[object, list[Edge]] = {}
    for e in d:
        fs = hs.faces_of_edge[e]
        a, b = fs[0], (fs[1] if len(fs) == 2 else EXTERIOR)
        ends[e] = (a, b)
        incident.setdefault(a, []).append(e)
        incident.setdefault(b, []).append(e)
    if any(len(es) != 2 for es in incident.values()):
        return False

    # walk the cycle; it must use every edge of d
    start = min(d)
    node = ends[start][0]
    edge = start
    walk = []
    while True:
        a, b = ends[edge]
        nxt = b if a == node else a
        walk.append((node, nxt, edge))
        node = nxt
        e1, e2 = incident[node]
        edge = e2 if e1 == edge else e1
        if edge == start:
            break
    if len(walk) != len(d):
        return False

    left_colors = set()
    for x, y, e in walk:
        mx, my = e.midpoint
        if x == EXTERIOR:
            dx, dy = y[0] - mx, y[1] - my
        elif y == EXTERIOR:
            dx, dy = mx - x[0], my - x[1]
        else:
            dx, dy = y[0] - x[0], y[1] - x[1]
        left = e.u if _cross(dx, dy, e.u.x - mx, e.u.y - my) > 0 else e.v
        left_colors.add(left.color)
    return len(left_colors) == 1


def _validate(hs: HexSystem, cuts: Sequence[Iterable]) -> list[frozenset[Edge]]:
    out = []
    for i, c in enumerate(cuts):
        c = hs.check_edges(c)
        if not is_ecut(hs, c):
            raise NotAnECut(i)
        out.append(c)
    return out


def _covers(hs: HexSystem, union: frozenset[Edge]) -> bool:
    if not hs.peripheral_edges & union:
        return False
    return all(hs.boundary(c) & union for c in hs.centers)


def is_ecut_cover(hs: HexSystem, cuts: Sequence[Iterable]) -> bool:
    """Every hexagon boundary and the peripheral cycle meet some cut."""
    valid = _validate(hs, cuts)
    union = frozenset().union(*valid) if valid else frozenset()
    return _covers(hs, union)


def nice_cycle_avoiding(hs: HexSystem, avoid: frozenset[Edge]):
    """Some nice cycle of ``hs`` sharing no edge with ``avoid``, or None."""
    if hs.n <= ENUMERATION_LIMIT:
        for c in _nice_cycles(hs):
            if not c.edges & avoid:
                return c
        return None
    g = hs.graph.copy()
    g.remove_edges_from(avoid)
    for cyc in nx.simple_cycles(g):
        if len(cyc) >= 4 and has_pm_without(hs, removed=cyc):
            return cycle_from_vertices(cyc)
    return None


def cfs_from_ecuts(hs: HexSystem, cuts: Sequence[Iterable]) -> frozenset[Edge]:
    """Union of ``cuts`` once every nice cycle is shown to cross one of them.

    Raises:
        NotAnECut: a listed cut fails :func:`is_ecut`.
        UncoveredNiceCycle: some nice cycle avoids all cuts.
    """
    _require_pm(hs)
    valid = _validate(hs, cuts)
    union = frozenset().union(*valid) if valid else frozenset()
    if not _covers(hs, union) and facial_cycles_nice(hs):
        warnings.warn(
            "system is normal but the cuts are not an e-cut cover; "
            "some facial cycle will be left uncovered",
            stacklevel=2,
        )
    witness = nice_cycle_avoiding(hs, union)
    if witness is not None:
        raise UncoveredNiceCycle(witness)
    return union


def _hexagon_chains(hs: HexSystem, edges: frozenset[Edge]) -> list[frozenset[Edge]]:
    g = nx.Graph()
    for e in edges:
        fs = hs.faces_of_edge[e]
        g.add_nodes_from(fs)
        if len(fs) == 2:
            g.add_edge(*fs)
    pieces = []
    for comp in nx.connected_components(g):
        pieces.append(frozenset(e for e in edges if hs.faces_of_edge[e][0] in comp))
    pieces.sort(key=min)
    return pieces


def direction_cuts(hs: HexSystem, direction: Direction) -> list[frozenset[Edge]]:
    """Split one direction class into its straight cuts."""
    return _hexagon_chains(hs, hs.direction_class(direction))


def split_into_cuts(hs: HexSystem, s: Iterable) -> list[frozenset[Edge]]:
    """Split an edge set meeting each hexagon in 0 or 2 edges into dual cycles.

    Raises ValueError when some hexagon holds another number of edges of ``s``.
    """
    s = hs.check_edges(s)
    for c in hs.centers:
        k = len(hs.boundary(c) & s)
        if k not in (0, 2):
            raise ValueError(f"hexagon {tuple(c)} meets the set in {k} edges")
    return _hexagon_chains(hs, s)


def parallel_class_bound(hs: HexSystem) -> tuple[Direction, frozenset[Edge]]:
    """Smallest direction class, checked as a complete forcing set via its cuts."""
    _require_pm(hs)
    best = min(Direction, key=lambda d: len(hs.direction_class(d)))
    cls = cfs_from_ecuts(hs, direction_cuts(hs, best))
    return best, cls
