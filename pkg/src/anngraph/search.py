"""Exact maximum clique and chromatic number on bitset graphs.

Adjacency is a list of Python ints, one bitset row per vertex. Both
searches are deterministic: ties always go to the lowest vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


# ---------------------------------------------------------------------------
# maximum clique


def _color_bound(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; returns vertices with their color numbers.

    Vertices are emitted in nondecreasing color order, so the color of the
    last vertex bounds the clique size reachable from the whole prefix.
    """
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(adj: Sequence[int], budget: int = DEFAULT_NODE_BUDGET) -> list[int]:
    """Exact maximum clique by branch and bound with a coloring bound.

    Raises :class:`SearchBudgetExceeded` rather than return an approximation.
    """
    n = len(adj)
    if n == 0:
        return []
    best: list[int] = [0]
    nodes = 0

    def expand(current: list[int], cand: int) -> None:
        nonlocal best, nodes
        order, colors = _color_bound(adj, cand)
        for k in range(len(order) - 1, -1, -1):
            if len(current) + colors[k] <= len(best):
                return
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"clique search exceeded {budget} nodes")
            v = order[k]
            current.append(v)
            sub = cand & adj[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = sorted(current)
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return best


def clique_number(adj: Sequence[int], budget: int = DEFAULT_NODE_BUDGET) -> int:
    return len(max_clique(adj, budget))


def is_clique(adj: Sequence[int], vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(adj[u] >> v & 1 for i, u in enumerate(vs) for v in vs[i + 1 :])


# ---------------------------------------------------------------------------
# coloring


def is_proper_coloring(adj: Sequence[int], coloring: Sequence[int]) -> bool:
    return len(coloring) == len(adj) and all(
        coloring[u] != coloring[v] for u in range(len(adj)) for v in _bits(adj[u])
    )


def dsatur_greedy(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    colors = [-1] * n
    sat = [0] * n  # bitset of neighbour colors
    deg = [_popcount(a) for a in adj]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (_popcount(sat[u]), deg[u], -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in _bits(adj[v]):
            sat[u] |= 1 << c
    return colors


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    exact: bool
    lower: int
    upper: int
    coloring: tuple[int, ...]
    clique: tuple[int, ...]
    nodes: int

    def as_dict(self) -> dict:
        return {
            "value": self.value if self.exact else None,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
        }


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _k_coloring(
    adj: Sequence[int], k: int, seed: Sequence[int], budget: _Budget
) -> list[int] | None | bool:
    """Backtracking k-coloring in saturation-degree order.

    ``seed`` (a clique) is precolored 0, 1, 2, ... to break color symmetry.
    Returns a coloring, ``None`` if none exists, or ``False`` on budget
    exhaustion.
    """
    n = len(adj)
    colors = [-1] * n
    forbid = [0] * n
    deg = [_popcount(a) for a in adj]
    full = (1 << k) - 1
    for c, v in enumerate(seed):
        colors[v] = c
        for u in _bits(adj[v]):
            forbid[u] |= 1 << c
    remaining = n - len(seed)
    exhausted = False

    def pick() -> int:
        best, key = -1, None
        for u in range(n):
            if colors[u] < 0:
                kk = (_popcount(forbid[u] & full), deg[u])
                if key is None or kk > key:
                    best, key = u, kk
        return best

    def solve(left: int, used: int) -> bool:
        nonlocal exhausted
        if left == 0:
            return True
        if not budget.tick():
            exhausted = True
            return False
        v = pick()
        free = full & ~forbid[v]
        # a fresh color is interchangeable with any other fresh color
        fresh_limit = min(used + 1, k)
        for c in _bits(free):
            if c >= fresh_limit:
                break
            colors[v] = c
            touched = []
            dead = False
            for u in _bits(adj[v]):
                if colors[u] < 0 and not forbid[u] >> c & 1:
                    forbid[u] |= 1 << c
                    touched.append(u)
                    if forbid[u] & full == full:
                        dead = True
            if not dead and solve(left - 1, max(used, c + 1)):
                return True
            for u in touched:
                forbid[u] &= ~(1 << c)
            colors[v] = -1
            if exhausted:
                return False
        return False

    if solve(remaining, len(seed)):
        return colors
    return False if exhausted else None


def chromatic_number(
    adj: Sequence[int], budget: int = DEFAULT_NODE_BUDGET, clique: Sequence[int] | None = None
) -> ChromaticResult:
    """Exact chromatic number, or clique/greedy bounds flagged inexact on budget exhaustion.

    Tries k = clique number, clique number + 1, ... below the greedy upper
    bound; the first k that admits a coloring is the answer.
    """
    n = len(adj)
    if n == 0:
        return ChromaticResult(0, True, 0, 0, (), (), 0)
    cl = list(clique) if clique is not None else max_clique(adj, budget)
    greedy = dsatur_greedy(adj)
    upper = max(greedy) + 1
    best = list(greedy)
    lower = len(cl)
    meter = _Budget(budget)
    for k in range(lower, upper):
        got = _k_coloring(adj, k, cl, meter)
        if got is False:
            return ChromaticResult(upper, False, lower, upper, tuple(best), tuple(cl), meter.used)
        if got is None:
            lower = k + 1
            continue
        return ChromaticResult(k, True, k, k, tuple(got), tuple(cl), meter.used)
    return ChromaticResult(upper, True, upper, upper, tuple(best), tuple(cl), meter.used)
