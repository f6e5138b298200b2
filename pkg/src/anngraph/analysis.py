"""Lazily computed structure of one ring, shared by all theorem checkers."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import graphs
from .ideals import (
    DEFAULT_IDEAL_BUDGET,
    IdealLattice,
    annihilator_ideal,
    enumerate_ideals,
    jacobson_radical,
    mask_of,
    nilradical,
    principal_ideal,
    zr_is_ideal,
)
from .ring import FiniteRing, quotient
from .search import DEFAULT_NODE_BUDGET, ChromaticResult, chromatic_number, max_clique


class InvariantViolation(AssertionError):
    """An identity that must hold in every finite commutative ring failed."""


class RingAnalysis:
    def __init__(
        self,
        ring: FiniteRing,
        node_budget: int = DEFAULT_NODE_BUDGET,
        ideal_budget: int = DEFAULT_IDEAL_BUDGET,
    ):
        self.ring = ring
        self.name = ring.name
        self.node_budget = node_budget
        self.ideal_budget = ideal_budget

    @cached_property
    def lattice(self) -> IdealLattice:
        return enumerate_ideals(self.ring, budget=self.ideal_budget)

    @cached_property
    def ag(self) -> graphs.SimpleGraph:
        return graphs.build_ag(self.ring, self.lattice)

    @cached_property
    def gamma(self) -> graphs.SimpleGraph:
        return graphs.build_gamma(self.ring)

    # -- ring-level facts ---------------------------------------------------

    @cached_property
    def reduced(self) -> bool:
        return self.ring.is_reduced()

    @cached_property
    def zr_is_ideal(self) -> bool:
        return zr_is_ideal(self.ring)

    @cached_property
    def zr_position(self) -> int | None:
        """Lattice position of ``Z(R)`` when it is an ideal."""
        return self.lattice.index.get(mask_of(self.ring.zero_divisor_mask))

    @cached_property
    def min_primes(self) -> list[int]:
        return self.lattice.minimal_primes()

    @cached_property
    def maximal_ideals(self) -> list[int]:
        return self.lattice.maximal_ideals()

    @property
    def is_local(self) -> bool:
        return len(self.maximal_ideals) == 1

    @property
    def is_domain(self) -> bool:
        return self.ag.order == 0

    @cached_property
    def nilradical(self) -> int:
        return self.lattice.position(nilradical(self.ring))

    @cached_property
    def is_two_field_product(self) -> bool:
        """Reduced, two minimal primes meeting in (0), both quotients fields."""
        if not self.reduced or len(self.min_primes) != 2:
            return False
        p1, p2 = self.min_primes
        if self.lattice.intersect(p1, p2) != self.lattice.zero:
            return False
        return all(quotient(self.ring, self.lattice[p].members).is_field() for p in (p1, p2))

    @cached_property
    def nonannihilating_sums(self) -> list[tuple[int, int]]:
        """Pairs ``i < j`` of annihilating ideals whose sum is not annihilating."""
        L = self.lattice
        ann = [k for k in range(len(L)) if L.is_annihilating(k)]
        return [
            (i, j)
            for a, i in enumerate(ann)
            for j in ann[a + 1 :]
            if not L.is_annihilating(L.sum(i, j))
        ]

    # -- graph invariants -----------------------------------------------------

    @cached_property
    def ag_diameter(self) -> int | None:
        return graphs.diameter(self.ag)

    @cached_property
    def gamma_diameter(self) -> int | None:
        return graphs.diameter(self.gamma)

    @cached_property
    def ag_clique(self) -> list[int]:
        return max_clique(self.ag.adj, self.node_budget)

    @cached_property
    def gamma_clique(self) -> list[int]:
        return max_clique(self.gamma.adj, self.node_budget)

    @cached_property
    def ag_chromatic(self) -> ChromaticResult:
        return chromatic_number(self.ag.adj, self.node_budget, clique=self.ag_clique)

    @cached_property
    def gamma_chromatic(self) -> ChromaticResult:
        return chromatic_number(self.gamma.adj, self.node_budget, clique=self.gamma_clique)

    def ag_report(self, coloring: bool = True) -> graphs.InvariantReport:
        return graphs.invariant_report(self.ag, self.node_budget, coloring)

    def gamma_report(self, coloring: bool = True) -> graphs.InvariantReport:
        return graphs.invariant_report(self.gamma, self.node_budget, coloring)


def audit(ctx: RingAnalysis) -> None:
    """Assert the identities every finite commutative ring satisfies.

    Raises :class:`InvariantViolation` on the first failure.
    """
    r, L = ctx.ring, ctx.lattice
    units, zd = r.unit_mask, r.zero_divisor_mask
    nz = np.arange(r.order) != 0
    if not (units ^ zd)[nz].all():
        a = int(np.flatnonzero(~(units ^ zd) & nz)[0])
        raise InvariantViolation(f"{r.name}: {r.label(a)} is not exactly one of unit / zero divisor")
    if not (zd[r.nilpotent_mask] | ~nz[r.nilpotent_mask]).all():
        raise InvariantViolation(f"{r.name}: nilpotent element that is not a zero divisor")

    mask = (1 << r.order) - 1
    for p in ctx.min_primes:
        mask &= L[p].mask
    if mask != L[ctx.nilradical].mask:
        raise InvariantViolation(f"{r.name}: nilradical differs from the meet of minimal primes")
    if jacobson_radical(L).mask != L[ctx.nilradical].mask:
        raise InvariantViolation(f"{r.name}: Jacobson radical differs from the nilradical")
    if set(ctx.min_primes) != set(L.primes()) or set(L.primes()) != set(ctx.maximal_ideals):
        raise InvariantViolation(f"{r.name}: primes, minimal primes and maximal ideals differ")

    for k in range(len(L)):
        I = L[k]
        if r.order % len(I):
            raise InvariantViolation(f"{r.name}: |{L.label(k)}| does not divide |R|")
        ann = annihilator_ideal(I)
        if ann.mask not in L.index:
            raise InvariantViolation(f"{r.name}: Ann({L.label(k)}) is not an ideal")
        if k not in (L.zero, L.whole) and not L.is_annihilating(k):
            raise InvariantViolation(f"{r.name}: {L.label(k)} is not an annihilating ideal")
        if not L.contains(L.ann(L.ann(k)), k):
            raise InvariantViolation(f"{r.name}: {L.label(k)} not inside Ann(Ann(I))")
    if L.ann(L.zero) != L.whole or L.ann(L.whole) != L.zero:
        raise InvariantViolation(f"{r.name}: Ann((0)) != R or Ann(R) != (0)")

    # a in Z(R) iff the principal ideal Ra has a nonzero annihilator
    for a in range(1, r.order):
        k = L.index[principal_ideal(r, a).mask]
        if L.is_annihilating(k) != bool(zd[a]):
            raise InvariantViolation(f"{r.name}: Z(R) membership of {r.label(a)} disagrees with Ann(Ra)")
