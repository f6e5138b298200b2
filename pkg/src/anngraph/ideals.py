"""Ideals of a finite ring: enumeration, annihilators, primes and radicals.

An :class:`Ideal` is stored twice: as a Python ``int`` bitset over element
indices (identity, hashing, inclusion tests) and as a sorted index array
(table lookups).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .ring import FiniteRing

DEFAULT_IDEAL_BUDGET = 100_000


class IdealError(ValueError):
    pass


class IdealBudgetExceeded(IdealError):
    pass


def mask_of(inside: np.ndarray) -> int:
    return int.from_bytes(np.packbits(inside.astype(bool), bitorder="little").tobytes(), "little")


def members_of(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing
    mask: int
    members: np.ndarray = field(repr=False)

    @classmethod
    def from_inside(cls, ring: FiniteRing, inside: np.ndarray) -> "Ideal":
        return cls(ring, mask_of(inside), np.flatnonzero(inside))

    @classmethod
    def from_members(cls, ring: FiniteRing, members: Iterable[int]) -> "Ideal":
        inside = np.zeros(ring.order, dtype=bool)
        inside[np.fromiter((int(m) for m in members), dtype=np.int64)] = True
        return cls.from_inside(ring, inside)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ideal) and other.ring is self.ring and other.mask == self.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> int(a) & 1)

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def inside(self) -> np.ndarray:
        out = np.zeros(self.ring.order, dtype=bool)
        out[self.members] = True
        return out

    @property
    def is_zero(self) -> bool:
        return self.mask == 1

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.ring.order

    def sort_key(self) -> tuple:
        return (len(self.members), tuple(int(m) for m in self.members))

    def generators(self) -> tuple[int, ...]:
        """Greedy generating set, smallest element indices first; cosmetic only."""
        gens: list[int] = []
        inside = np.zeros(self.ring.order, dtype=bool)
        inside[0] = True
        for x in self.members:
            if not inside[x]:
                gens.append(int(x))
                _absorb(self.ring, inside, self.ring.mul_table[x])
        return tuple(gens)

    def label(self) -> str:
        gens = self.generators()
        if not gens:
            return "(0)"
        if self.is_whole and self.ring.one in gens and len(gens) == 1:
            return "R"
        return "(" + ", ".join(self.ring.label(g) for g in gens) + ")"


def _absorb(ring: FiniteRing, inside: np.ndarray, elems: np.ndarray) -> None:
    """Grow the additive subgroup marked by ``inside`` (in place) until it contains ``elems``."""
    members = np.flatnonzero(inside)
    pending = np.asarray(elems)
    pending = pending[~inside[pending]]
    while len(pending):
        g = int(pending[0])
        cosets = [members]
        x = g
        while not inside[x]:
            coset = ring.add_table[x, members]
            inside[coset] = True
            cosets.append(coset)
            x = int(ring.add_table[x, g])
        members = np.concatenate(cosets)
        pending = pending[~inside[pending]]


def _check_same_ring(i: Ideal, j: Ideal) -> None:
    if i.ring is not j.ring:
        raise IdealError("ideals belong to different rings")


def zero_ideal(r: FiniteRing) -> Ideal:
    return Ideal.from_members(r, [0])


def whole_ring(r: FiniteRing) -> Ideal:
    return Ideal.from_inside(r, np.ones(r.order, dtype=bool))


def principal_ideal(r: FiniteRing, a: int) -> Ideal:
    return Ideal.from_members(r, np.unique(r.mul_table[a]))


def ideal_from_generators(r: FiniteRing, elems: Iterable[int]) -> Ideal:
    elems = [int(e) for e in elems]
    if not elems:
        raise IdealError("at least one generator is required")
    inside = np.zeros(r.order, dtype=bool)
    inside[0] = True
    for e in elems:
        _absorb(r, inside, r.mul_table[e])
    return Ideal.from_inside(r, inside)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _check_same_ring(i, j)
    if j <= i:
        return i
    if i <= j:
        return j
    inside = i.inside
    _absorb(i.ring, inside, j.members)
    return Ideal.from_inside(i.ring, inside)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """Ideal generated by all products ``ab``; products already absorb ring multiples."""
    _check_same_ring(i, j)
    r = i.ring
    prods = np.unique(r.mul_table[np.ix_(i.members, j.members)])
    inside = np.zeros(r.order, dtype=bool)
    inside[0] = True
    _absorb(r, inside, prods)
    return Ideal.from_inside(r, inside)


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    _check_same_ring(i, j)
    return Ideal(i.ring, i.mask & j.mask, np.intersect1d(i.members, j.members))


def ideal_power(i: Ideal, k: int) -> Ideal:
    out = whole_ring(i.ring)
    for _ in range(k):
        out = ideal_product(out, i)
    return out


def annihilator_ideal(i: Ideal) -> Ideal:
    r = i.ring
    return Ideal.from_inside(r, (r.mul_table[:, i.members] == 0).all(axis=1))


@dataclass(frozen=True)
class AnnihilatorCertificate:
    ideal: Ideal
    annihilator: Ideal
    witness: int | None

    def verify(self) -> bool:
        if self.witness is None:
            return self.annihilator.is_zero
        r = self.ideal.ring
        return self.witness != 0 and bool((r.mul_table[self.witness, self.ideal.members] == 0).all())


def annihilator(i: Ideal) -> AnnihilatorCertificate:
    ann = annihilator_ideal(i)
    nz = ann.members[ann.members != 0]
    return AnnihilatorCertificate(i, ann, int(nz[0]) if len(nz) else None)


def is_prime_ideal(r: FiniteRing, i: Ideal) -> bool:
    if i.is_whole:
        raise IdealError("the whole ring is not a candidate prime")
    inside = i.inside
    hit = inside[r.mul_table]
    return not bool((hit & ~inside[:, None] & ~inside[None, :]).any())


def nilradical(r: FiniteRing) -> Ideal:
    return Ideal.from_inside(r, r.nilpotent_mask.copy())


def zero_divisor_set(r: FiniteRing) -> int:
    return mask_of(r.zero_divisor_mask)


def zr_is_ideal(r: FiniteRing) -> bool:
    z = r.zero_divisor_mask
    members = np.flatnonzero(z)
    sums = r.add_table[np.ix_(members, members)]
    prods = r.mul_table[:, members]
    return bool(z[sums].all() and z[prods].all())


class IdealLattice:
    """All ideals of a ring, sorted by (size, member tuple).

    Position 0 is ``(0)`` and the last position is ``R``. Sums, products and
    annihilators are looked up by position and cached.
    """

    def __init__(self, ring: FiniteRing, ideals: Sequence[Ideal]):
        self.ring = ring
        self.ideals = sorted(ideals, key=Ideal.sort_key)
        self.index = {I.mask: k for k, I in enumerate(self.ideals)}
        if len(self.index) != len(self.ideals):
            raise IdealError("duplicate ideal in lattice")
        self.zero = self.index[1]
        self.whole = len(self.ideals) - 1
        if not self.ideals[self.whole].is_whole:
            raise IdealError("lattice is missing R")
        k = len(self.ideals)
        masks = [I.mask for I in self.ideals]
        # below[i] has bit j set iff ideal j is contained in ideal i
        self.below = [
            sum(1 << j for j in range(k) if masks[j] & ~masks[i] == 0) for i in range(k)
        ]
        self._sum: dict[tuple[int, int], int] = {}
        self._prod: dict[tuple[int, int], int] = {}
        self._ann: list[int] | None = None
        self._labels: list[str] | None = None

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, k: int) -> Ideal:
        return self.ideals[k]

    def position(self, ideal: Ideal) -> int:
        return self.index[ideal.mask]

    @property
    def proper_nonzero(self) -> list[int]:
        return list(range(1, self.whole))

    def contains(self, big: int, small: int) -> bool:
        return bool(self.below[big] >> small & 1)

    def label(self, k: int) -> str:
        if self._labels is None:
            self._labels = [I.label() for I in self.ideals]
        return self._labels[k]

    def sum(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self._sum:
            self._sum[key] = self.index[ideal_sum(self.ideals[i], self.ideals[j]).mask]
        return self._sum[key]

    def product(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self._prod:
            self._prod[key] = self.index[ideal_product(self.ideals[i], self.ideals[j]).mask]
        return self._prod[key]

    def intersect(self, i: int, j: int) -> int:
        return self.index[self.ideals[i].mask & self.ideals[j].mask]

    def power(self, i: int, k: int) -> int:
        out = self.whole
        for _ in range(k):
            out = self.product(out, i)
        return out

    def ann(self, i: int) -> int:
        if self._ann is None:
            self._ann = [self.index[annihilator_ideal(I).mask] for I in self.ideals]
        return self._ann[i]

    def kills(self, i: int, j: int) -> bool:
        """``I_i * I_j = (0)``, decided without building the product."""
        return self.contains(self.ann(i), j)

    def is_annihilating(self, i: int) -> bool:
        return self.ann(i) != self.zero

    def is_nilpotent_ideal(self, i: int) -> bool:
        return self.ideals[i] <= nilradical(self.ring)

    def primes(self) -> list[int]:
        return [k for k in range(self.whole) if is_prime_ideal(self.ring, self.ideals[k])]

    def minimal_primes(self) -> list[int]:
        ps = self.primes()
        return [p for p in ps if not any(q != p and self.contains(p, q) for q in ps)]

    def maximal_ideals(self) -> list[int]:
        cand = range(self.whole)
        return [m for m in cand if not any(o != m and self.contains(o, m) for o in cand)]


def enumerate_ideals(r: FiniteRing, budget: int = DEFAULT_IDEAL_BUDGET) -> IdealLattice:
    """All ideals as finite sums of principal ideals (fixpoint over principal generators)."""
    principals: dict[int, Ideal] = {}
    for a in range(r.order):
        P = principal_ideal(r, a)
        principals.setdefault(P.mask, P)
    found: dict[int, Ideal] = {1: principals[1]}
    for P in sorted(principals.values(), key=Ideal.sort_key):
        for I in list(found.values()):
            S = ideal_sum(I, P)
            if S.mask not in found:
                found[S.mask] = S
                if len(found) > budget:
                    raise IdealBudgetExceeded(
                        f"{r.name}: more than {budget} ideals, refusing to truncate"
                    )
    return IdealLattice(r, list(found.values()))


def minimal_primes(lattice: IdealLattice) -> list[Ideal]:
    return [lattice[k] for k in lattice.minimal_primes()]


def jacobson_radical(lattice: IdealLattice) -> Ideal:
    mask = (1 << lattice.ring.order) - 1
    for m in lattice.maximal_ideals():
        mask &= lattice[m].mask
    return lattice[lattice.index[mask]]


def submodules_of(lattice: IdealLattice, i: Ideal) -> list[Ideal]:
    k = lattice.position(i)
    return [lattice[j] for j in range(len(lattice)) if lattice.contains(k, j)]


def count_submodules(lattice: IdealLattice, i: Ideal) -> int:
    return bin(lattice.below[lattice.position(i)]).count("1")


def is_annihilating(lattice: IdealLattice, i: Ideal) -> bool:
    return lattice.is_annihilating(lattice.position(i))
