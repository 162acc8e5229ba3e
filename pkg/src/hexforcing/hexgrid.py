"""Integer lattice model of hexagonal systems.

Hexagon centers live on ``(cx, cy)`` with ``cy % 3 == 0`` and
``cx % 2 == (cy // 3) % 2``.  A center owns six vertices::

        T (cx, cy+2)
    TL          TR          TL=(cx-1, cy+1)  TR=(cx+1, cy+1)
    BL          BR          BL=(cx-1, cy-1)  BR=(cx+1, cy-1)
        B (cx, cy-2)

Every vertex has ``y % 3`` in ``{1, 2}``; ``y % 3 == 1`` is black.  Edges are
stored as lexicographically ordered vertex pairs, so all set-valued results
can be sorted into one canonical order.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import networkx as nx

from .errors import (
    Disconnected,
    EmptySystem,
    HexError,
    HexSyntaxError,
    ParityViolation,
    UnknownEdge,
    UnknownHexagon,
)


class Color(str, enum.Enum):
    BLACK = "black"
    WHITE = "white"


class Direction(str, enum.Enum):
    VERT = "VERT"
    POS = "POS"
    NEG = "NEG"


class Role(str, enum.Enum):
    L = "L"
    TL = "TL"
    TR = "TR"
    R = "R"
    BR = "BR"
    BL = "BL"


class HexCenter(NamedTuple):
    cx: int
    cy: int

    @property
    def on_lattice(self) -> bool:
        return self.cy % 3 == 0 and self.cx % 2 == (self.cy // 3) % 2


class Vertex(NamedTuple):
    x: int
    y: int

    @property
    def color(self) -> Color:
        return Color.BLACK if self.y % 3 == 1 else Color.WHITE

    @property
    def is_black(self) -> bool:
        return self.y % 3 == 1


_DIRECTIONS = {(0, 2): Direction.VERT, (1, 1): Direction.POS, (1, -1): Direction.NEG}


class Edge(NamedTuple):
    """Canonical edge: ``u < v`` lexicographically."""

    u: Vertex
    v: Vertex

    @classmethod
    def of(cls, a, b) -> "Edge":
        a, b = Vertex(*a), Vertex(*b)
        return cls(a, b) if a < b else cls(b, a)

    @property
    def direction(self) -> Direction:
        return _DIRECTIONS[(self.v.x - self.u.x, self.v.y - self.u.y)]

    @property
    def black(self) -> Vertex:
        return self.u if self.u.is_black else self.v

    @property
    def white(self) -> Vertex:
        return self.v if self.u.is_black else self.u

    @property
    def midpoint(self) -> tuple[float, float]:
        return ((self.u.x + self.v.x) / 2, (self.u.y + self.v.y) / 2)


# vertex offsets by corner name
_CORNERS = {
    "T": (0, 2),
    "TL": (-1, 1),
    "BL": (-1, -1),
    "B": (0, -2),
    "BR": (1, -1),
    "TR": (1, 1),
}
_ROLE_CORNERS = {
    Role.L: ("TL", "BL"),
    Role.R: ("TR", "BR"),
    Role.TL: ("T", "TL"),
    Role.TR: ("T", "TR"),
    Role.BL: ("B", "BL"),
    Role.BR: ("B", "BR"),
}
# center offset of the hexagon across each edge role
NEIGHBOR_OFFSET = {
    Role.L: (-2, 0),
    Role.R: (2, 0),
    Role.TL: (-1, 3),
    Role.TR: (1, 3),
    Role.BL: (-1, -3),
    Role.BR: (1, -3),
}
OPPOSITE_ROLE = {
    Role.L: Role.R,
    Role.R: Role.L,
    Role.TL: Role.BR,
    Role.BR: Role.TL,
    Role.TR: Role.BL,
    Role.BL: Role.TR,
}


def hexagon_vertices(center) -> tuple[Vertex, ...]:
    """The six corners of a hexagon, counter-clockwise from the top."""
    cx, cy = center
    order = ("T", "TL", "BL", "B", "BR", "TR")
    return tuple(Vertex(cx + _CORNERS[k][0], cy + _CORNERS[k][1]) for k in order)


def role_edge(center, role: Role) -> Edge:
    cx, cy = center
    a, b = (_CORNERS[k] for k in _ROLE_CORNERS[Role(role)])
    return Edge.of((cx + a[0], cy + a[1]), (cx + b[0], cy + b[1]))


class HexSystem:
    """Immutable hexagonal system built from a set of hexagon centers.

    Equality and hashing go through the center set, so two systems built from
    the same centers in any order are interchangeable.
    """

    def __init__(self, centers: Iterable):
        cs = sorted({HexCenter(*c) for c in centers})
        if not cs:
            raise EmptySystem("a hexagonal system needs at least one hexagon")
        for c in cs:
            if not c.on_lattice:
                raise ParityViolation(c)
        center_set = frozenset(cs)

        roles: dict[HexCenter, dict[Role, Edge]] = {}
        faces: dict[Edge, list[HexCenter]] = {}
        for c in cs:
            per = {r: role_edge(c, r) for r in Role}
            roles[c] = per
            for e in per.values():
                faces.setdefault(e, []).append(c)

        # hexagon adjacency must be connected
        seen = {cs[0]}
        queue = deque([cs[0]])
        while queue:
            c = queue.popleft()
            for dx, dy in NEIGHBOR_OFFSET.values():
                nb = HexCenter(c.cx + dx, c.cy + dy)
                if nb in center_set and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        if len(seen) != len(cs):
            raise Disconnected(
                f"{len(cs) - len(seen)} of {len(cs)} hexagons are not reachable from {tuple(cs[0])}"
            )

        vertices = sorted({v for c in cs for v in hexagon_vertices(c)})
        edges = sorted(faces)
        if len(edges) != len(vertices) + len(cs) - 1:
            raise HexError("center set encloses a hole; coronoids are not supported")

        adj: dict[Vertex, list[Vertex]] = {v: [] for v in vertices}
        for e in edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)

        self._center_set = center_set
        self.centers: tuple[HexCenter, ...] = tuple(cs)
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.edge_index = {e: i for i, e in enumerate(edges)}
        self.faces_of_edge = {e: tuple(fs) for e, fs in faces.items()}
        self.adjacency = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._roles = roles

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, HexSystem) and self._center_set == other._center_set

    def __hash__(self):
        return hash(self._center_set)

    def __repr__(self):
        return f"HexSystem(n={self.n}, |V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __contains__(self, center) -> bool:
        return HexCenter(*center) in self._center_set

    @property
    def n(self) -> int:
        return len(self.centers)

    # -- local structure --------------------------------------------------
    def _check(self, center) -> HexCenter:
        c = HexCenter(*center)
        if c not in self._center_set:
            raise UnknownHexagon(f"{tuple(c)} is not a hexagon of this system")
        return c

    def hexagon_edge(self, center, role: Role) -> Edge:
        return self._roles[self._check(center)][Role(role)]

    def hexagon_edges(self, center) -> dict[Role, Edge]:
        return dict(self._roles[self._check(center)])

    def boundary(self, center) -> frozenset[Edge]:
        return frozenset(self._roles[self._check(center)].values())

    def hexagon_frames(self, center) -> tuple[frozenset[Edge], frozenset[Edge]]:
        """Both perfect matchings of the hexagon; the first holds the R edge."""
        r = self._roles[self._check(center)]
        return (
            frozenset((r[Role.TL], r[Role.BL], r[Role.R])),
            frozenset((r[Role.L], r[Role.BR], r[Role.TR])),
        )

    def role_of(self, center, edge: Edge) -> Role:
        for role, e in self._roles[self._check(center)].items():
            if e == edge:
                return role
        raise UnknownEdge(f"{edge} is not on hexagon {tuple(center)}")

    def neighbors(self, center) -> list[HexCenter]:
        c = self._check(center)
        out = []
        for dx, dy in NEIGHBOR_OFFSET.values():
            nb = HexCenter(c.cx + dx, c.cy + dy)
            if nb in self._center_set:
                out.append(nb)
        return sorted(out)

    def is_peripheral(self, edge: Edge) -> bool:
        try:
            return len(self.faces_of_edge[edge]) == 1
        except KeyError:
            raise UnknownEdge(f"{edge} is not an edge of this system") from None

    @cached_property
    def peripheral_edges(self) -> frozenset[Edge]:
        return frozenset(e for e in self.edges if len(self.faces_of_edge[e]) == 1)

    @cached_property
    def inner_edges(self) -> frozenset[Edge]:
        return frozenset(e for e in self.edges if len(self.faces_of_edge[e]) == 2)

    def direction_class(self, direction: Direction) -> frozenset[Edge]:
        d = Direction(direction)
        return frozenset(e for e in self.edges if e.direction is d)

    @cached_property
    def is_catacondensed(self) -> bool:
        count: dict[Vertex, int] = {}
        for c in self.centers:
            for v in hexagon_vertices(c):
                count[v] = count.get(v, 0) + 1
        return max(count.values()) < 3

    @cached_property
    def graph(self) -> nx.Graph:
        """The vertex/edge graph; treat as read-only."""
        g = nx.Graph()
        for v in self.vertices:
            g.add_node(v, color=v.color.value)
        g.add_edges_from(self.edges)
        return g

    def check_edges(self, edges: Iterable) -> frozenset[Edge]:
        """Canonicalise an edge collection and verify membership."""
        out = set()
        for e in edges:
            e = Edge.of(*e)
            if e not in self.edge_index:
                raise UnknownEdge(f"{tuple(e.u)}-{tuple(e.v)} is not an edge of this system")
            out.add(e)
        return frozenset(out)

    def sort_edges(self, edges: Iterable[Edge]) -> list[Edge]:
        return sorted(edges, key=self.edge_index.__getitem__)


def build_hexsystem(centers: Iterable) -> HexSystem:
    return HexSystem(centers)


def hexagon_edge(hs: HexSystem, h, role: Role) -> Edge:
    return hs.hexagon_edge(h, role)


def hexagon_frames(hs: HexSystem, h) -> tuple[frozenset[Edge], frozenset[Edge]]:
    return hs.hexagon_frames(h)


# -- dual graph -----------------------------------------------------------
EXTERIOR = "exterior"


@dataclass(frozen=True)
class DualGraph:
    """Dual multigraph: one node per hexagon plus :data:`EXTERIOR`.

    ``edges`` holds ``(a, b, crossed)`` triples in canonical order of the
    crossed edge; ``b`` is :data:`EXTERIOR` for peripheral edges.
    """

    vertices: tuple
    edges: tuple

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for a, b, e in self.edges:
            g.add_edge(a, b, key=e, crossed=e)
        return g


def dual_graph(hs: HexSystem) -> DualGraph:
    edges = []
    for e in hs.edges:
        fs = hs.faces_of_edge[e]
        edges.append((fs[0], fs[1] if len(fs) == 2 else EXTERIOR, e))
    return DualGraph(vertices=hs.centers + (EXTERIOR,), edges=tuple(edges))


def peripheral_cycle(hs: HexSystem) -> list[Edge]:
    """Peripheral edges in walking order, starting from the least one."""
    per = hs.peripheral_edges
    incident: dict[Vertex, list[Edge]] = {}
    for e in per:
        incident.setdefault(e.u, []).append(e)
        incident.setdefault(e.v, []).append(e)
    start = min(per)
    cycle = [start]
    cur, prev = start.v, start
    while True:
        a, b = incident[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        cur = nxt.v if nxt.u == cur else nxt.u
        prev = nxt
    return cycle


def is_catacondensed(hs: HexSystem) -> bool:
    return hs.is_catacondensed


# -- text formats ---------------------------------------------------------
HEADER = "HEXSYS 1"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def serialize(hs: HexSystem) -> str:
    lines = [HEADER] + [f"{c.cx} {c.cy}" for c in hs.centers]
    return "\n".join(lines) + "\n"


def parse(text: str) -> HexSystem:
    lines = _content_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise HexSyntaxError("empty input, expected header 'HEXSYS 1'") from None
    if first.split() != HEADER.split():
        raise HexSyntaxError(f"expected header 'HEXSYS 1', got {first!r}", lineno)
    centers = []
    seen = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise HexSyntaxError(f"expected 'cx cy', got {line!r}", lineno)
        try:
            c = HexCenter(int(parts[0]), int(parts[1]))
        except ValueError:
            raise HexSyntaxError(f"non-integer coordinate in {line!r}", lineno) from None
        if c in seen:
            raise HexSyntaxError(f"duplicate center {tuple(c)}", lineno)
        seen.add(c)
        centers.append(c)
    return HexSystem(centers)


def format_edges(edges: Iterable[Edge]) -> str:
    return "".join(f"{e.u.x} {e.u.y} {e.v.x} {e.v.y}\n" for e in sorted(edges))


def _parse_edge_line(line: str, lineno: int) -> Edge:
    parts = line.split()
    if len(parts) != 4:
        raise HexSyntaxError(f"expected 'x1 y1 x2 y2', got {line!r}", lineno)
    try:
        x1, y1, x2, y2 = map(int, parts)
    except ValueError:
        raise HexSyntaxError(f"non-integer coordinate in {line!r}", lineno) from None
    if (abs(x2 - x1), abs(y2 - y1)) not in {(0, 2), (1, 1)}:
        raise HexSyntaxError(f"{line!r} is not a lattice edge", lineno)
    return Edge.of((x1, y1), (x2, y2))


def parse_edges(text: str) -> frozenset[Edge]:
    return frozenset(_parse_edge_line(line, n) for n, line in _content_lines(text))


def format_cuts(cuts: Iterable[Iterable[Edge]]) -> str:
    return "\n".join(format_edges(c) for c in cuts)


def parse_cuts(text: str) -> list[frozenset[Edge]]:
    """Blank-line separated blocks, one cut per block."""
    blocks: list[list[Edge]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not raw.strip():
            if blocks[-1]:
                blocks.append([])
            continue
        if line:
            blocks[-1].append(_parse_edge_line(line, lineno))
    return [frozenset(b) for b in blocks if b]
