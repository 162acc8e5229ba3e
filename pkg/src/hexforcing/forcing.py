"""Nice cycles, complete forcing set verification and exact minimisation.

Two independent verifiers live here.  :func:`is_complete_forcing_set_nice`
checks that every frame of every nice cycle meets the candidate set, while
:func:`is_complete_forcing_set_def` goes back to the definition and checks
that each perfect matching is the unique one extending its restriction.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx

from .errors import NoPerfectMatching, NotCatacondensed
from .hexgrid import Edge, HexSystem, Vertex
from .matchings import enumerate_perfect_matchings, has_pm_without, is_forcing_set

# above this many hexagons the frame check searches instead of enumerating
ENUMERATION_LIMIT = 10


@dataclass(frozen=True)
class NiceCycle:
    """An even cycle whose vertex complement has a perfect matching.

    ``frame_a`` is the frame holding the canonically least cycle edge.
    """

    vertices: tuple[Vertex, ...]
    edges: frozenset[Edge]
    frame_a: frozenset[Edge]
    frame_b: frozenset[Edge]

    @property
    def frames(self) -> tuple[frozenset[Edge], frozenset[Edge]]:
        return (self.frame_a, self.frame_b)

    def __len__(self):
        return len(self.vertices)


def cycle_from_vertices(seq) -> NiceCycle:
    """Normalise a closed vertex walk into a :class:`NiceCycle` record.

    Niceness itself is not checked here.
    """
    seq = [Vertex(*v) for v in seq]
    if len(seq) < 4 or len(seq) % 2:
        raise ValueError("a frame needs an even cycle of length >= 4")
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    steps = [Edge.of(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))]
    even = frozenset(steps[0::2])
    odd = frozenset(steps[1::2])
    least = min(steps)
    a, b = (even, odd) if least in even else (odd, even)
    return NiceCycle(tuple(seq), frozenset(steps), a, b)


def _require_pm(hs: HexSystem):
    if not has_pm_without(hs):
        raise NoPerfectMatching(f"{hs!r} has no perfect matching")


def is_nice(hs: HexSystem, cycle_vertices: Iterable[Vertex]) -> bool:
    return has_pm_without(hs, removed=cycle_vertices)


def facial_cycles_nice(hs: HexSystem) -> bool:
    """Every hexagon boundary and the peripheral cycle is nice."""
    def ends(es):
        return {v for e in es for v in (e.u, e.v)}

    if not has_pm_without(hs, removed=ends(hs.peripheral_edges)):
        return False
    return all(has_pm_without(hs, removed=ends(hs.boundary(c))) for c in hs.centers)


@lru_cache(maxsize=64)
def _nice_cycles(hs: HexSystem) -> tuple[NiceCycle, ...]:
    out = []
    for cyc in nx.simple_cycles(hs.graph):
        if len(cyc) >= 4 and has_pm_without(hs, removed=cyc):
            out.append(cycle_from_vertices(cyc))
    idx = hs.edge_index
    out.sort(key=lambda c: (len(c.edges), sorted(idx[e] for e in c.edges)))
    return tuple(out)


def enumerate_nice_cycles(hs: HexSystem) -> list[NiceCycle]:
    _require_pm(hs)
    return list(_nice_cycles(hs))


def _search_uncovered(hs: HexSystem, s: frozenset[Edge]):
    """Find a nice cycle with a frame missing ``s`` without full enumeration.

    Orient every edge outside ``s`` black->white and every edge white->black.
    A directed cycle of length >= 4 is then an even cycle whose black->white
    frame avoids ``s``; it is a witness exactly when it is nice.
    """
    d = nx.DiGraph()
    d.add_nodes_from(hs.vertices)
    for e in hs.edges:
        b, w = e.black, e.white
        d.add_edge(w, b)
        if e not in s:
            d.add_edge(b, w)
    for cyc in nx.simple_cycles(d):
        if len(cyc) < 4 or not has_pm_without(hs, removed=cyc):
            continue
        cycle = cycle_from_vertices(cyc)
        n = len(cyc)
        frame = frozenset(
            Edge.of(cyc[k], cyc[(k + 1) % n]) for k in range(n) if cyc[k].is_black
        )
        return cycle, frame
    return None


def uncovered_frame(hs: HexSystem, s: Iterable, method: str = "auto"):
    """Return ``(cycle, frame)`` for some nice cycle whose frame misses ``s``.

    ``None`` means every frame of every nice cycle meets ``s``.  ``method`` is
    ``"enumerate"`` (scan all nice cycles), ``"search"`` (directed cycle
    search, see :func:`_search_uncovered`) or ``"auto"``.
    """
    _require_pm(hs)
    s = hs.check_edges(s)
    if method == "auto":
        method = "enumerate" if hs.n <= ENUMERATION_LIMIT else "search"
    if method == "search":
        return _search_uncovered(hs, s)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    for c in _nice_cycles(hs):
        for frame in c.frames:
            if not frame & s:
                return c, frame
    return None


def is_complete_forcing_set_nice(hs: HexSystem, s: Iterable, method: str = "auto") -> bool:
    return uncovered_frame(hs, s, method) is None


def definitional_counterexample(hs: HexSystem, s: Iterable):
    """A perfect matching whose restriction to ``s`` fails to force it, or None."""
    _require_pm(hs)
    s = hs.check_edges(s)
    for m in enumerate_perfect_matchings(hs):
        if not is_forcing_set(hs, m, s & m):
            return m
    return None


def is_complete_forcing_set_def(hs: HexSystem, s: Iterable) -> bool:
    return definitional_counterexample(hs, s) is None


def is_complete_forcing_set_cata(hs: HexSystem, s: Iterable) -> bool:
    """Hexagon-frame test; only valid for catacondensed systems."""
    if not hs.is_catacondensed:
        raise NotCatacondensed("some vertex lies on three hexagons")
    s = hs.check_edges(s)
    return all(f & s for c in hs.centers for f in hs.hexagon_frames(c))


# -- exact minimum -----------------------------------------------------------
def _packing_bound(cons: list[int]) -> int:
    """Number of pairwise disjoint constraints picked greedily, smallest first."""
    used = 0
    count = 0
    for c in sorted(cons, key=int.bit_count):
        if not c & used:
            used |= c
            count += 1
    return count


def _drop_supersets(cons: Iterable[int]) -> list[int]:
    uniq = sorted(set(cons), key=lambda c: (c.bit_count(), c))
    kept: list[int] = []
    for c in uniq:
        if not any(k & c == k for k in kept):
            kept.append(c)
    return kept


def _greedy(cons: list[int]) -> int:
    chosen = 0
    left = list(cons)
    while left:
        counts: dict[int, int] = {}
        for c in left:
            x = c
            while x:
                low = x & -x
                counts[low] = counts.get(low, 0) + 1
                x ^= low
        bit = max(counts, key=lambda b: (counts[b], -b))
        chosen |= bit
        left = [c for c in left if not c & bit]
    return chosen


def _optimum_size(cons: list[int]) -> int:
    best = _greedy(cons).bit_count()

    def dfs(chosen: int, count: int, excluded: int):
        nonlocal best
        live = []
        for c in cons:
            if not c & chosen:
                a = c & ~excluded
                if not a:
                    return
                live.append(a)
        if not live:
            best = min(best, count)
            return
        if count + _packing_bound(live) >= best:
            return
        pivot = min(live, key=lambda c: (c.bit_count(), c))
        x = pivot
        while x:
            low = x & -x
            dfs(chosen | low, count + 1, excluded)
            excluded |= low
            x ^= low

    dfs(0, 0, 0)
    return best


def _lex_least(cons: list[int], k: int) -> int | None:
    """Lexicographically least hitting set of size ``k`` (by sorted indices)."""

    def rec(start: int, chosen: int, count: int):
        live = [c for c in cons if not c & chosen]
        if not live:
            return chosen
        if count == k:
            return None
        limit = min(c.bit_length() - 1 for c in live)
        candidates = 0
        for c in live:
            candidates |= c
        for e in range(start, limit + 1):
            bit = 1 << e
            if not candidates & bit:
                continue
            rest = []
            high = ~((bit << 1) - 1)
            for c in live:
                if not c & bit:
                    a = c & high
                    if not a:
                        break
                    rest.append(a)
            else:
                if count + 1 + _packing_bound(rest) > k:
                    continue
                got = rec(e + 1, chosen | bit, count + 1)
                if got is not None:
                    return got
        return None

    return rec(0, 0, 0)


def minimum_hitting_set(constraints: Iterable[int]) -> int:
    """Bitmask of the lexicographically least minimum hitting set."""
    cons = _drop_supersets(constraints)
    if not cons:
        return 0
    if any(c == 0 for c in cons):
        raise ValueError("empty constraint cannot be hit")
    k = _optimum_size(cons)
    mask = _lex_least(cons, k)
    assert mask is not None and mask.bit_count() == k
    return mask


def frame_constraints(hs: HexSystem) -> list[int]:
    idx = hs.edge_index
    masks = set()
    for c in enumerate_nice_cycles(hs):
        for f in c.frames:
            m = 0
            for e in f:
                m |= 1 << idx[e]
            masks.add(m)
    return sorted(masks)


def min_complete_forcing(hs: HexSystem) -> tuple[int, frozenset[Edge]]:
    """Complete forcing number and the lexicographically least optimal witness."""
    mask = minimum_hitting_set(frame_constraints(hs))
    witness = frozenset(e for i, e in enumerate(hs.edges) if mask >> i & 1)
    return len(witness), witness
