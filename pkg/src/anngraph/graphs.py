"""Annihilating-ideal and zero-divisor graphs, with exact invariants.

Graphs are small (a few hundred vertices at most) and dense enough that
bitset rows stored as Python ints beat adjacency lists for every query
made here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import IO, Sequence

import numpy as np

from .ideals import IdealLattice
from .ring import FiniteRing
from .search import (
    DEFAULT_NODE_BUDGET,
    ChromaticResult,
    _bits,
    _popcount,
    chromatic_number as _chromatic,
    max_clique,
)

INF = None  # infinite distance / acyclic girth, serialized as JSON null


class EmptyGraphError(ValueError):
    """Raised for invariants that are undefined on a graph with no vertices."""


@dataclass(frozen=True)
class SimpleGraph:
    adj: tuple[int, ...]
    labels: tuple[str, ...]
    kind: str = "plain"
    keys: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be unique")

    @classmethod
    def from_edges(cls, n: int, edges, labels: Sequence[str] | None = None, kind: str = "plain"):
        adj = [0] * n
        for u, v in edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        return cls(tuple(adj), labels, kind, tuple(range(n)))

    @property
    def order(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in _bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(_popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def vertex(self, label: str) -> int:
        return self.labels.index(label)


# ---------------------------------------------------------------------------
# builders


def build_ag(r: FiniteRing, lattice: IdealLattice) -> SimpleGraph:
    """Vertices: nonzero proper ideals with nonzero annihilator; ``I ~ J`` iff ``IJ = 0``."""
    verts = [k for k in lattice.proper_nonzero if lattice.is_annihilating(k)]
    pos = {k: i for i, k in enumerate(verts)}
    adj = [0] * len(verts)
    for i, k in enumerate(verts):
        killed = lattice.below[lattice.ann(k)]
        row = 0
        for j in _bits(killed):
            if j in pos and j != k:
                row |= 1 << pos[j]
        adj[i] = row
    labels = tuple(lattice.label(k) for k in verts)
    return SimpleGraph(tuple(adj), labels, "AG", tuple(verts))


def build_gamma(r: FiniteRing) -> SimpleGraph:
    """Vertices: nonzero zero divisors; ``x ~ y`` iff ``x != y`` and ``xy = 0``."""
    z = r.zero_divisor_mask.copy()
    z[0] = False
    verts = np.flatnonzero(z)
    block = r.mul_table[np.ix_(verts, verts)] == 0
    np.fill_diagonal(block, False)
    weights = [1 << i for i in range(len(verts))]
    adj = tuple(sum(w for w, hit in zip(weights, row) if hit) for row in block)
    labels = tuple(r.label(int(v)) for v in verts)
    return SimpleGraph(adj, labels, "GAMMA", tuple(int(v) for v in verts))


# ---------------------------------------------------------------------------
# distances


def _require_vertices(g: SimpleGraph) -> None:
    if g.order == 0:
        raise EmptyGraphError("invariant undefined on a graph with no vertices")


def bfs_levels(g: SimpleGraph, root: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.order
    dist[root] = 0
    seen = 1 << root
    frontier = 1 << root
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        for u in _bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_connected(g: SimpleGraph) -> bool:
    _require_vertices(g)
    return all(d is not None for d in bfs_levels(g, 0))


def diameter(g: SimpleGraph) -> int | None:
    """Largest distance between distinct vertices; ``None`` when disconnected, 0 for one vertex."""
    _require_vertices(g)
    best = 0
    for v in range(g.order):
        dist = bfs_levels(g, v)
        if any(d is None for d in dist):
            return INF
        best = max(best, max(dist))
    return best


def distance(g: SimpleGraph, u: int, v: int) -> int | None:
    return bfs_levels(g, u)[v]


def girth(g: SimpleGraph) -> int | None:
    _require_vertices(g)
    adj = g.adj
    for u in range(g.order):
        for v in _bits(adj[u]):
            if v > u and adj[u] & adj[v]:
                return 3
    for u in range(g.order):
        for w in range(u + 1, g.order):
            if _popcount(adj[u] & adj[w]) >= 2:
                return 4
    best = None
    for root in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in _bits(adj[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# ---------------------------------------------------------------------------
# shape


def bipartition(g: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """Two color classes (lowest vertex of each component in the first), or ``None``."""
    side = [-1] * g.order
    for start in range(g.order):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in _bits(g.adj[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    return [v for v in range(g.order) if side[v] == 0], [v for v in range(g.order) if side[v] == 1]


def is_bipartite(g: SimpleGraph) -> bool:
    return bipartition(g) is not None


def is_complete(g: SimpleGraph) -> bool:
    full = (1 << g.order) - 1
    return all(row == full & ~(1 << v) for v, row in enumerate(g.adj))


def complete_bipartition(g: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """Parts of a complete bipartite graph with both parts nonempty, else ``None``."""
    parts = bipartition(g)
    if parts is None or not parts[0] or not parts[1]:
        return None
    a, b = parts
    mask_a = sum(1 << v for v in a)
    mask_b = sum(1 << v for v in b)
    if all(g.adj[v] == mask_b for v in a) and all(g.adj[v] == mask_a for v in b):
        return parts
    return None


def is_complete_bipartite(g: SimpleGraph) -> bool:
    return complete_bipartition(g) is not None


@dataclass(frozen=True)
class StarShape:
    center: int
    leaves: tuple[int, ...]
    degenerate: bool = False


def star_shape(g: SimpleGraph) -> StarShape | None:
    """Star ``K_{1,m}``; a single vertex counts as a degenerate star.

    For ``K_2`` the center is the lower-numbered vertex.
    """
    if g.order == 1:
        return StarShape(0, (), degenerate=True)
    parts = complete_bipartition(g)
    if parts is None:
        return None
    a, b = parts
    if len(a) == 1 and (len(b) > 1 or a[0] < b[0]):
        return StarShape(a[0], tuple(b))
    if len(b) == 1:
        return StarShape(b[0], tuple(a))
    return None


def is_star(g: SimpleGraph) -> bool:
    return star_shape(g) is not None


def clique_number(g: SimpleGraph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    _require_vertices(g)
    return len(max_clique(g.adj, budget))


def chromatic_number(g: SimpleGraph, budget: int = DEFAULT_NODE_BUDGET) -> ChromaticResult:
    _require_vertices(g)
    return _chromatic(g.adj, budget)


# ---------------------------------------------------------------------------
# reports


@dataclass
class InvariantReport:
    vertices: int
    edges: int
    applicable: bool = True
    connected: bool | None = None
    diameter: int | None = None
    girth: int | None = None
    clique_number: int | None = None
    clique_witness: list[str] = field(default_factory=list)
    chromatic: dict | None = None
    is_complete: bool | None = None
    is_bipartite: bool | None = None
    is_complete_bipartite: bool | None = None
    is_star: bool | None = None
    star_degenerate: bool | None = None

    @property
    def chi(self) -> int | None:
        if self.chromatic is None or not self.chromatic["exact"]:
            return None
        return self.chromatic["value"]

    def as_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "applicable": self.applicable,
            "connected": self.connected,
            "diameter": self.diameter,
            "girth": self.girth,
            "clique_number": self.clique_number,
            "clique_witness": list(self.clique_witness),
            "chromatic": self.chromatic,
            "is_complete": self.is_complete,
            "is_bipartite": self.is_bipartite,
            "is_complete_bipartite": self.is_complete_bipartite,
            "is_star": self.is_star,
            "star_degenerate": self.star_degenerate,
        }


def invariant_report(
    g: SimpleGraph, budget: int = DEFAULT_NODE_BUDGET, coloring: bool = True
) -> InvariantReport:
    """All invariants of ``g``; an empty graph is reported as not applicable."""
    rep = InvariantReport(vertices=g.order, edges=g.edge_count())
    if g.order == 0:
        rep.applicable = False
        return rep
    rep.connected = is_connected(g)
    rep.diameter = diameter(g)
    rep.girth = girth(g)
    clique = max_clique(g.adj, budget)
    rep.clique_number = len(clique)
    rep.clique_witness = [g.labels[v] for v in clique]
    if coloring:
        rep.chromatic = _chromatic(g.adj, budget, clique=clique).as_dict()
    rep.is_complete = is_complete(g)
    rep.is_bipartite = is_bipartite(g)
    rep.is_complete_bipartite = is_complete_bipartite(g)
    star = star_shape(g)
    rep.is_star = star is not None
    rep.star_degenerate = bool(star and star.degenerate)
    return rep


# ---------------------------------------------------------------------------
# DOT


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {_quote(name)} {{"]
    for v, lab in enumerate(g.labels):
        lines.append(f"  n{v} [label={_quote(lab)}];")
    for u, v in g.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(g: SimpleGraph, sink: IO[str], name: str = "G") -> str:
    text = to_dot(g, name)
    sink.write(text)
    return text
