"""Parallelogram, hexagon and rectangle families with explicit forcing sets.

Hexagons are addressed as ``h(i, j)``: row ``i`` counted from the bottom,
column ``j`` from the left, both 1-based.  Every construction below is a
union of straight or zigzag cuts; :func:`certify` checks it and compares
its size against the lower bounds in :mod:`hexforcing.bounds`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bounds import lower_bound_hexagons, lower_bound_matching, normal_components
from .ecut import split_into_cuts
from .errors import InvalidSpec
from .forcing import is_complete_forcing_set_nice
from .hexgrid import Direction, Edge, HexCenter, HexSystem, Role, role_edge


class Family(str, enum.Enum):
    PARALLELOGRAM = "parallelogram"
    HEXAGON = "hexagon"
    OBLATE_RECT = "oblate"
    PROLATE_RECT = "prolate"


@dataclass(frozen=True)
class FamilySpec:
    """A family member. ``q`` is ignored for hexagons."""

    family: Family
    p: int
    q: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.HEXAGON:
            object.__setattr__(self, "q", 1)
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidSpec(f"{name} must be a positive integer, got {v!r}")
        if self.family in (Family.OBLATE_RECT, Family.PROLATE_RECT):
            if self.p % 2 == 0:
                raise InvalidSpec(f"{self.family.value} needs odd p, got {self.p}")
            if self.family is Family.PROLATE_RECT and self.p > 1 and self.q < 2:
                # even rows would be empty and the rows would fall apart
                raise InvalidSpec("prolate rectangles with p > 1 need q >= 2")

    def __str__(self):
        if self.family is Family.HEXAGON:
            return f"hexagon({self.p})"
        return f"{self.family.value}({self.p},{self.q})"


def _row_layout(spec: FamilySpec) -> list[tuple[int, int]]:
    """``(first cx, width)`` for each row, bottom to top."""
    p, q = spec.p, spec.q
    f = spec.family
    if f is Family.PARALLELOGRAM:
        # each row starts one half-step left of the row below
        return [(-(i - 1), q) for i in range(1, p + 1)]
    if f is Family.HEXAGON:
        rows = []
        for i in range(1, 2 * p):
            if i <= p:
                rows.append((-(i - 1), p + i - 1))
            else:
                rows.append((i - (2 * p - 1), 3 * p - 1 - i))
        return rows
    if f is Family.OBLATE_RECT:
        return [(0, q) if i % 2 else (-1, q + 1) for i in range(1, p + 1)]
    # prolate: shorter even rows sit in the notches of the odd rows
    return [(0, q) if i % 2 else (1, q - 1) for i in range(1, p + 1)]


def generate(spec: FamilySpec) -> tuple[HexSystem, dict[tuple[int, int], HexCenter]]:
    """Build the system and the ``(i, j) -> center`` index map."""
    index = {}
    for i, (x0, width) in enumerate(_row_layout(spec), start=1):
        for j in range(1, width + 1):
            index[(i, j)] = HexCenter(x0 + 2 * (j - 1), 3 * (i - 1))
    return HexSystem(index.values()), index


def formula_cf(spec: FamilySpec) -> int:
    """Closed-form complete forcing number."""
    p, q = spec.p, spec.q
    f = spec.family
    if f is Family.PARALLELOGRAM:
        return p * q + 1
    if f is Family.HEXAGON:
        n = 3 * p * p - 3 * p + 1
        return n + 1 if p % 3 in (0, 1) else n + 2
    if f is Family.OBLATE_RECT:
        n = q * (p + 1) // 2 + (q + 1) * (p - 1) // 2
        return n + 1 if q % 3 == 1 else n + (p + 1) // 2
    return (p + 1) // 2 * (q + 1)


class _Rows:
    """Row/column edge lookups on one generated system."""

    def __init__(self, spec: FamilySpec):
        self.hs, self.index = generate(spec)
        self.width: dict[int, int] = {}
        for i, j in self.index:
            self.width[i] = max(self.width.get(i, 0), j)

    def e(self, i, j, role: Role) -> Edge:
        try:
            center = self.index[(i, j)]
        except KeyError:
            raise InvalidSpec(f"construction refers to missing hexagon h({i},{j})") from None
        return role_edge(center, role)

    def row(self, i) -> list[HexCenter]:
        return [self.index[(i, j)] for j in range(1, self.width.get(i, 0) + 1)]

    def common(self, a, b) -> set[Edge]:
        top = set()
        for c in self.row(a):
            top |= self.hs.boundary(c)
        out = set()
        for c in self.row(b):
            out |= self.hs.boundary(c) & top
        return out

    def verticals(self, i) -> set[Edge]:
        out = set()
        for c in self.row(i):
            out |= {e for e in self.hs.boundary(c) if e.direction is Direction.VERT}
        return out

    def inner_verticals(self, i) -> set[Edge]:
        return self.verticals(i) & self.hs.inner_edges


def _upto(hi: int):
    """``0..hi`` inclusive; empty when ``hi`` is negative."""
    return range(0, hi + 1)


def _single_row(r: _Rows, row: int, q: int) -> set[Edge]:
    """Forcing set of one chain row: its inner verticals plus two slanted ends."""
    return r.inner_verticals(row) | {r.e(row, 1, Role.BR), r.e(row, q, Role.TL)}


def _parallelogram(r: _Rows, p: int, q: int) -> set[Edge]:
    s: set[Edge] = set()
    if p % 3 == 0:
        for i in _upto((p - 3) // 3):
            s |= r.common(3 * i + 1, 3 * i + 2)
            s |= {r.e(3 * i + 1, q, Role.BR), r.e(3 * i + 2, 1, Role.TL)}
            s |= r.inner_verticals(3 * i + 3)
        # closes the last zigzag through the exterior face
        s.add(r.e(p, q, Role.TL))
    elif p % 3 == 1:
        for i in _upto((p - 1) // 3):
            s |= _single_row(r, 3 * i + 1, q)
        for i in _upto((p - 4) // 3):
            s |= r.common(3 * i + 2, 3 * i + 3)
    else:
        for i in _upto((p - 2) // 3):
            s |= r.common(3 * i + 1, 3 * i + 2)
            s |= {r.e(3 * i + 1, q, Role.BR), r.e(3 * i + 2, 1, Role.TL)}
        for i in _upto((p - 5) // 3):
            s |= r.inner_verticals(3 * i + 3)
    return s


def _hexagon(r: _Rows, p: int) -> set[Edge]:
    if p == 1:
        return _parallelogram(r, 1, 1)
    s: set[Edge] = set()
    if p % 3 == 0:
        for i in _upto((p - 3) // 3):
            s |= r.common(3 * i + 1, 3 * i + 2)
            s |= r.inner_verticals(3 * i + 3)
            s |= {r.e(3 * i + 3, 1, Role.BR), r.e(3 * i + 3, p + 3 * i + 2, Role.BL)}
            s |= r.common(p + 3 * i + 1, p + 3 * i + 2)
        s |= {r.e(p + 1, 1, Role.TL), r.e(p + 1, 2 * p - 2, Role.TR)}
        for i in _upto((p - 6) // 3):
            s |= r.inner_verticals(p + 3 * i + 3)
            s |= {r.e(p + 3 * i + 3, 1, Role.TR), r.e(p + 3 * i + 3, 2 * p - 3 * i - 4, Role.TL)}
    elif p % 3 == 1:
        for i in _upto((p - 4) // 3):
            s |= r.common(3 * i + 1, 3 * i + 2)
            s |= r.inner_verticals(3 * i + 3)
            s |= {r.e(3 * i + 3, 1, Role.BR), r.e(3 * i + 3, p + 3 * i + 2, Role.BL)}
            s |= r.inner_verticals(p + 3 * i + 1)
            s |= {r.e(p + 3 * i + 1, 1, Role.TR), r.e(p + 3 * i + 1, 2 * p - 3 * i - 2, Role.TL)}
            s |= r.common(p + 3 * i + 2, p + 3 * i + 3)
        s |= r.verticals(p)
    else:
        for i in _upto((p - 5) // 3):
            s |= r.common(3 * i + 1, 3 * i + 2)
            s |= r.inner_verticals(3 * i + 3)
            s |= {r.e(3 * i + 3, 1, Role.BR), r.e(3 * i + 3, p + 3 * i + 2, Role.BL)}
            s |= r.inner_verticals(p + 3 * i + 2)
            s |= {r.e(p + 3 * i + 2, 1, Role.TR), r.e(p + 3 * i + 2, 2 * p - 3 * i - 3, Role.TL)}
            s |= r.common(p + 3 * i + 3, p + 3 * i + 4)
        s |= r.common(p - 1, p)
        s |= {r.e(p, 1, Role.BL), r.e(p, 2 * p - 1, Role.BR)}
        s |= r.verticals(p + 1)
    return s


def _oblate(r: _Rows, p: int, q: int) -> set[Edge]:
    if p == 1:
        return _parallelogram(r, 1, q)
    s: set[Edge] = set()
    half = (p - 1) // 2
    if q % 3 == 1:
        for j in _upto((q - 1) // 3):
            s |= {r.e(1, 3 * j + 1, Role.L), r.e(p, 3 * j + 1, Role.R)}
            for i in range(1, half + 1):
                s |= {
                    r.e(2 * i, 3 * j + 1, Role.BR),
                    r.e(2 * i, 3 * j + 2, Role.L),
                    r.e(2 * i, 3 * j + 2, Role.TL),
                }
        for j in range(1, (q - 1) // 3 + 1):
            for i in range(1, half + 1):
                s |= {r.e(2 * i, 3 * j, Role.BL), r.e(2 * i, 3 * j, Role.TR)}
            for i in range(1, half + 2):
                s.add(r.e(2 * i - 1, 3 * j - 1, Role.R))
        return s
    for i in range(1, half + 1):
        s |= r.common(2 * i, 2 * i + 1)
        s |= {r.e(2 * i, 1, Role.TL), r.e(2 * i, q + 1, Role.TR)}
    s |= r.verticals(1)
    return s


def _prolate(r: _Rows, p: int, q: int) -> set[Edge]:
    # odd rows are the chains left after removing fixed edges
    s: set[Edge] = set()
    for i in range(1, p + 1, 2):
        s |= _single_row(r, i, q)
    return s


def construct_cfs(spec: FamilySpec) -> frozenset[Edge]:
    """Explicit complete forcing set of size :func:`formula_cf`."""
    r = _Rows(spec)
    f = spec.family
    if f is Family.PARALLELOGRAM:
        s = _parallelogram(r, spec.p, spec.q)
    elif f is Family.HEXAGON:
        s = _hexagon(r, spec.p)
    elif f is Family.OBLATE_RECT:
        s = _oblate(r, spec.p, spec.q)
    else:
        s = _prolate(r, spec.p, spec.q)
    return frozenset(s)


def construction_cuts(spec: FamilySpec) -> list[frozenset[Edge]]:
    """The construction split into its cuts.

    Prolate rectangles are split per chain row, since the construction only
    cuts the normal components, not the whole system.
    """
    hs, _ = generate(spec)
    s = construct_cfs(spec)
    if spec.family is not Family.PROLATE_RECT:
        return split_into_cuts(hs, s)
    cuts = []
    for comp in normal_components(hs):
        cuts += split_into_cuts(comp, s & set(comp.edges))
    return cuts


# -- certificates ------------------------------------------------------------
OPTIMAL = "OPTIMAL"
NOT_PROVEN = "NOT_PROVEN"
INCOMPLETE = "INCOMPLETE"


@dataclass(frozen=True)
class Certificate:
    spec: FamilySpec
    n: int
    size: int
    formula: int
    complete: bool
    lower_bound_hexagons: int
    lower_bound_matching: int
    bound_used: str
    witness: frozenset[Edge] = field(repr=False, compare=False)

    @property
    def bound(self) -> int:
        if self.bound_used == "hexagons":
            return self.lower_bound_hexagons
        return self.lower_bound_matching

    @property
    def verdict(self) -> str:
        if not self.complete:
            return INCOMPLETE
        return OPTIMAL if self.size == self.bound else NOT_PROVEN


def _bound_kind(spec: FamilySpec) -> str:
    if spec.family is Family.HEXAGON and spec.p % 3 == 2:
        return "matching"
    if spec.family is Family.OBLATE_RECT and spec.p > 1 and spec.q % 3 != 1:
        return "matching"
    return "hexagons"


def certify(spec: FamilySpec) -> Certificate:
    """Upper bound from the construction, lower bound from a counting argument.

    Both bounds are summed over normal components, so systems with fixed
    edges (prolate rectangles) are handled component by component.
    """
    hs, _ = generate(spec)
    s = construct_cfs(spec)
    comps = normal_components(hs)
    return Certificate(
        spec=spec,
        n=hs.n,
        size=len(s),
        formula=formula_cf(spec),
        complete=is_complete_forcing_set_nice(hs, s),
        lower_bound_hexagons=sum(lower_bound_hexagons(c) for c in comps),
        lower_bound_matching=sum(lower_bound_matching(c) for c in comps),
        bound_used=_bound_kind(spec),
        witness=s,
    )
