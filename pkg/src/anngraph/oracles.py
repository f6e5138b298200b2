"""Brute-force reference computations used to cross-check the fast paths.

Nothing here shares code with the production search or enumeration; each
routine works from definitions by exhaustive enumeration and is only
meant for small inputs.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .ring import FiniteRing

_PRIMES = (2_147_483_629, 2_147_483_587)


def brute_force_ideals(r: FiniteRing, max_order: int = 64) -> set[frozenset[int]]:
    """Every additive subgroup closed under multiplication by all ring elements.

    Subgroups are grown one element at a time from ``{0}`` by repeated
    sumset closure, so every subgroup of the additive group is visited.
    """
    if r.order > max_order:
        raise ValueError(f"brute-force ideal oracle limited to order {max_order}")
    add = r.add_table
    mul = r.mul_table
    n = r.order

    def closure(base: frozenset[int], x: int) -> frozenset[int]:
        # repeated sumset S <- S + S until stable
        cur = np.array(sorted(base | {x}))
        while True:
            nxt = np.union1d(cur, add[np.ix_(cur, cur)].ravel())
            if len(nxt) == len(cur):
                return frozenset(int(v) for v in cur)
            cur = nxt

    zero = frozenset([0])
    seen = {zero}
    stack = [zero]
    while stack:
        h = stack.pop()
        for x in range(n):
            if x not in h:
                k = closure(h, x)
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
    out = set()
    for h in seen:
        inside = np.zeros(n, dtype=bool)
        inside[list(h)] = True
        if inside[mul[:, list(h)]].all():
            out.add(h)
    return out


def _subset_tables(adj: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Clique and independent-set indicators for every vertex subset."""
    n = len(adj)
    if n > 22:
        raise ValueError("subset oracle limited to 22 vertices")
    size = 1 << n
    clique = np.zeros(size, dtype=bool)
    indep = np.zeros(size, dtype=bool)
    clique[0] = indep[0] = True
    for v in range(n):
        lo, hi = 1 << v, 1 << (v + 1)
        rest = np.arange(lo, hi) - lo
        nbr = adj[v] & (lo - 1)
        non_nbr = ~adj[v] & (lo - 1)
        clique[lo:hi] = clique[rest] & ((rest & non_nbr) == 0)
        indep[lo:hi] = indep[rest] & ((rest & nbr) == 0)
    return clique, indep


def brute_clique_number(adj: Sequence[int]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    clique, _ = _subset_tables(adj)
    return int(_popcounts(n)[clique].max())


def _popcounts(n: int) -> np.ndarray:
    out = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        out[1 << v : 1 << (v + 1)] = out[: 1 << v] + 1
    return out


def brute_chromatic_number(adj: Sequence[int]) -> int:
    """Smallest k admitting a cover of V by k independent sets.

    Counts ordered k-tuples of independent sets covering V by
    inclusion-exclusion over subsets, modulo two large primes; a positive
    count means k colors suffice.
    """
    n = len(adj)
    if n == 0:
        return 0
    _, indep = _subset_tables(adj)
    # i(S) = number of independent subsets of S (zeta transform)
    counts = indep.astype(np.int64)
    for v in range(n):
        bit = 1 << v
        view = counts.reshape(-1, 2 * bit)
        view[:, bit:] += view[:, :bit]
    sign = np.where((n - _popcounts(n)) % 2 == 0, 1, -1).astype(np.int64)
    for k in range(1, n + 1):
        nonzero = False
        for p in _PRIMES:
            base = counts % p
            acc = np.ones_like(base)
            for _ in range(k):
                acc = (acc * base) % p
            total = int(((sign * acc) % p).sum() % p)
            nonzero = nonzero or total != 0
        if nonzero:
            return k
    return n


def brute_diameter(adj: Sequence[int]) -> int | None:
    """Diameter by Floyd-Warshall on a dense matrix."""
    n = len(adj)
    inf = n + 1
    d = np.full((n, n), inf, dtype=np.int64)
    for u in range(n):
        d[u, u] = 0
        for v in range(n):
            if adj[u] >> v & 1:
                d[u, v] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    m = int(d.max())
    return None if m >= inf else m
