"""Perfect matchings: existence, enumeration, maximum matching, forcing sets."""
from __future__ import annotations

from typing import Iterable, Iterator

import networkx as nx

from .errors import NotAMatching, NotASubset
from .hexgrid import Edge, HexSystem, Vertex

Matching = frozenset


def has_perfect_matching(g: nx.Graph) -> bool:
    """True iff ``g`` has a perfect matching; the empty graph has one."""
    n = g.number_of_nodes()
    if n % 2:
        return False
    if n == 0:
        return True
    if nx.is_bipartite(g):
        for comp in nx.connected_components(g):
            if len(comp) % 2:
                return False
            sub = g.subgraph(comp)
            top, _ = nx.bipartite.sets(sub)
            if len(nx.bipartite.hopcroft_karp_matching(sub, top)) != len(comp):
                return False
        return True
    return 2 * len(nx.max_weight_matching(g, maxcardinality=True)) == n


def max_matching(g: nx.Graph) -> Matching:
    """A maximum-cardinality matching as a frozenset of node pairs.

    Works on general (non-bipartite) graphs; pairs are returned in the order
    networkx reports them.
    """
    return frozenset(nx.max_weight_matching(g, maxcardinality=True))


def matching_number(g: nx.Graph) -> int:
    return len(max_matching(g))


# -- HS-specific fast paths ---------------------------------------------
def has_pm_without(hs: HexSystem, removed: Iterable[Vertex] = (), banned: Iterable[Edge] = ()) -> bool:
    """Whether ``hs`` minus vertices ``removed`` and edges ``banned`` has a perfect matching.

    Simple augmenting-path search on the black/white bipartition; the
    subgraphs here are small enough that this beats building networkx views.
    """
    gone = set(removed)
    banned = set(banned)
    blacks = [v for v in hs.vertices if v not in gone and v.is_black]
    whites = sum(1 for v in hs.vertices if v not in gone and not v.is_black)
    if len(blacks) != whites:
        return False
    adj = hs.adjacency
    if banned:
        nbrs = {
            b: [w for w in adj[b] if w not in gone and Edge.of(b, w) not in banned]
            for b in blacks
        }
    else:
        nbrs = {b: [w for w in adj[b] if w not in gone] for b in blacks}
    mate: dict[Vertex, Vertex] = {}  # white -> black
    partner: dict[Vertex, Vertex] = {}  # black -> white

    unmatched = []
    for b in blacks:
        for w in nbrs[b]:
            if w not in mate:
                mate[w] = b
                partner[b] = w
                break
        else:
            unmatched.append(b)

    for root in unmatched:
        # iterative DFS for an augmenting path from ``root``
        parent: dict[Vertex, Vertex] = {}
        stack = [root]
        found = None
        while stack and found is None:
            b = stack.pop()
            for w in nbrs[b]:
                if w in parent:
                    continue
                parent[w] = b
                nb = mate.get(w)
                if nb is None:
                    found = w
                    break
                stack.append(nb)
        if found is None:
            return False
        w = found
        while w is not None:
            b = parent[w]
            prev = partner.get(b)
            mate[w] = b
            partner[b] = w
            w = prev
    return True


def _iter_matchings(hs: HexSystem, removed=frozenset()) -> Iterator[list[Edge]]:
    """Backtracking over the lowest uncovered vertex in canonical order."""
    order = [v for v in hs.vertices if v not in removed]
    adj = hs.adjacency
    covered = set(removed)
    current: list[Edge] = []

    def rec(i):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            yield list(current)
            return
        v = order[i]
        covered.add(v)
        for w in adj[v]:
            if w not in covered:
                covered.add(w)
                current.append(Edge.of(v, w))
                yield from rec(i + 1)
                current.pop()
                covered.discard(w)
        covered.discard(v)

    yield from rec(0)


def enumerate_perfect_matchings(hs: HexSystem) -> list[frozenset[Edge]]:
    found = [sorted(m) for m in _iter_matchings(hs)]
    found.sort()
    return [frozenset(m) for m in found]


def count_perfect_matchings(hs: HexSystem, removed=frozenset(), limit: int | None = None) -> int:
    count = 0
    for _ in _iter_matchings(hs, frozenset(removed)):
        count += 1
        if limit is not None and count >= limit:
            break
    return count


def is_perfect_matching(hs: HexSystem, m: Iterable[Edge]) -> bool:
    m = set(m)
    if not all(e in hs.edge_index for e in m):
        return False
    covered = set()
    for e in m:
        if e.u in covered or e.v in covered:
            return False
        covered.update((e.u, e.v))
    return len(covered) == len(hs.vertices)


def is_forcing_set(hs: HexSystem, m: Iterable[Edge], f: Iterable[Edge]) -> bool:
    """Whether ``m`` is the only perfect matching of ``hs`` containing ``f``."""
    m = frozenset(Edge.of(*e) for e in m)
    f = frozenset(Edge.of(*e) for e in f)
    if not is_perfect_matching(hs, m):
        raise NotAMatching("m is not a perfect matching of the system")
    if not f <= m:
        raise NotASubset("f must be a subset of m")
    removed = frozenset(v for e in f for v in (e.u, e.v))
    return count_perfect_matchings(hs, removed, limit=2) == 1
