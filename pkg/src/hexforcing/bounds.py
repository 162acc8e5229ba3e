"""Fixed edges, normal components and lower bounds on the complete forcing number."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
from networkx.utils import UnionFind

from .ecut import parallel_class_bound
from .errors import HexError, IsolatedVertex, NotNormal
from .forcing import _require_pm, facial_cycles_nice, min_complete_forcing
from .hexgrid import Edge, HexCenter, HexSystem, hexagon_vertices
from .matchings import has_pm_without, matching_number


@dataclass(frozen=True)
class FixedEdgeReport:
    fixed_double: frozenset[Edge]
    fixed_single: frozenset[Edge]
    free: frozenset[Edge]

    @property
    def fixed(self) -> frozenset[Edge]:
        return self.fixed_double | self.fixed_single


def fixed_edges(hs: HexSystem) -> FixedEdgeReport:
    """Classify edges by two matchability tests each, no enumeration."""
    _require_pm(hs)
    double, single, free = set(), set(), set()
    for e in hs.edges:
        if not has_pm_without(hs, banned=(e,)):
            double.add(e)
        elif not has_pm_without(hs, removed=(e.u, e.v)):
            single.add(e)
        else:
            free.add(e)
    return FixedEdgeReport(frozenset(double), frozenset(single), frozenset(free))


def is_normal(hs: HexSystem) -> bool:
    return not fixed_edges(hs).fixed


def is_normal_by_faces(hs: HexSystem) -> bool:
    """Normality through facial cycles; agrees with :func:`is_normal`."""
    _require_pm(hs)
    return facial_cycles_nice(hs)


def normal_components(hs: HexSystem) -> list[HexSystem]:
    """Components of the free-edge subgraph, each rebuilt as a system.

    A system whose edges are all fixed has no normal components.
    """
    free = fixed_edges(hs).free
    g = nx.Graph()
    g.add_edges_from(free)
    out = []
    for comp in nx.connected_components(g):
        centers = [
            c for c in hs.centers if hs.boundary(c) <= free and hexagon_vertices(c)[0] in comp
        ]
        comp_edges = {e for e in free if e.u in comp}
        if not centers:
            raise HexError("free-edge component without hexagons")
        sub = HexSystem(centers)
        if set(sub.edges) != comp_edges:
            raise HexError("free-edge component is not a hexagonal system")
        out.append(sub)
    out.sort(key=lambda s: s.centers[0])
    return out


def cf_by_decomposition(hs: HexSystem) -> int:
    return sum(min_complete_forcing(c)[0] for c in normal_components(hs))


def lower_bound_hexagons(hs: HexSystem) -> int:
    if not is_normal(hs):
        raise NotNormal("the hexagon-count bound needs a normal system")
    return hs.n + 1


# -- edge-class partition -------------------------------------------------
@dataclass(frozen=True)
class EdgeClassPartition:
    """Classes E_1..E_k and, per class, the hexagons owning a frame in it."""

    classes: tuple[frozenset[Edge], ...]
    hexagon_sets: tuple[tuple[HexCenter, ...], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_of(self, edge: Edge) -> int:
        for i, c in enumerate(self.classes):
            if edge in c:
                return i
        raise KeyError(edge)


@dataclass(frozen=True)
class DualSubgraph:
    vertices: tuple[HexCenter, ...]
    edges: tuple[tuple[HexCenter, HexCenter, Edge], ...]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for a, b, e in self.edges:
            g.add_edge(a, b, crossed=e)
        return g


def edge_class_partition(hs: HexSystem) -> EdgeClassPartition:
    uf = UnionFind(hs.edges)
    for c in hs.centers:
        for frame in hs.hexagon_frames(c):
            uf.union(*frame)
    groups = [frozenset(g) for g in uf.to_sets()]
    groups.sort(key=lambda g: hs.edge_index[min(g)])
    hex_sets = []
    for g in groups:
        hex_sets.append(tuple(
            c for c in hs.centers if any(f <= g for f in hs.hexagon_frames(c))
        ))
    return EdgeClassPartition(tuple(groups), tuple(hex_sets))


def dual_subgraphs(hs: HexSystem, p: EdgeClassPartition) -> list[DualSubgraph]:
    """One dual subgraph per class, keeping only dual edges that cross the class.

    Restricting to crossings of E_i (rather than taking everything induced
    on the hexagon set) is what makes every edge lie in E_i*.
    """
    out = []
    for cls, hexes in zip(p.classes, p.hexagon_sets):
        edges = tuple(
            (*hs.faces_of_edge[e], e) for e in hs.sort_edges(cls) if e in hs.inner_edges
        )
        out.append(DualSubgraph(hexes, edges))
    return out


def lower_bound_matching(hs: HexSystem) -> int:
    if not is_normal(hs):
        raise NotNormal("the matching-number bound needs a normal system")
    p = edge_class_partition(hs)
    nu = sum(matching_number(d.to_networkx()) for d in dual_subgraphs(hs, p))
    return 2 * hs.n - nu


def edge_cover_number(g: nx.Graph) -> int:
    isolated = [v for v in g if g.degree(v) == 0]
    if isolated:
        raise IsolatedVertex(f"{len(isolated)} isolated vertices have no edge cover")
    return g.number_of_nodes() - matching_number(g)


# -- report -----------------------------------------------------------------
def bounds_report(hs: HexSystem) -> dict:
    """Everything the ``bounds`` command prints, as plain values.

    Lower bounds are summed over normal components, which keeps them valid
    for systems with fixed edges as well.
    """
    p = edge_class_partition(hs)
    duals = dual_subgraphs(hs, p)
    comps = normal_components(hs)
    direction, cls = parallel_class_bound(hs)
    return {
        "n": hs.n,
        "normal": len(comps) == 1 and comps[0] == hs,
        "components": len(comps),
        "k": p.k,
        "classes": [
            {"size": len(c), "hexagons": len(h), "nu": matching_number(d.to_networkx())}
            for c, h, d in zip(p.classes, p.hexagon_sets, duals)
        ],
        "lower_bound_hexagons": sum(lower_bound_hexagons(c) for c in comps),
        "lower_bound_matching": sum(lower_bound_matching(c) for c in comps),
        "parallel_direction": direction.value,
        "upper_bound_parallel": len(cls),
    }
