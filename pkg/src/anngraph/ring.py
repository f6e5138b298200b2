"""Finite commutative rings with identity, fully materialized as lookup tables.

Three presentation kinds are supported: ``Z_m``, direct products of already
built rings, and basis-presented algebras over ``Z_m`` whose multiplication
is extended bilinearly from a relation table on the generators.

Elements are integers ``0..n-1``. Index 0 is always the zero element and the
ordering is fixed at construction; every bitset elsewhere in the package
relies on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Callable, Iterable, Sequence

import numpy as np

DEFAULT_SIZE_CAP = 4096
RANDOM_TRIPLES = 100_000
_EXHAUSTIVE_TRIPLES = 1 << 21


class RingError(ValueError):
    """Base class for ring construction problems."""


class CapExceeded(RingError):
    pass


class AxiomViolation(RingError):
    def __init__(self, axiom: str, triple: tuple[int, ...], ring_name: str = ""):
        self.axiom = axiom
        self.triple = triple
        super().__init__(f"{ring_name or 'ring'}: {axiom} fails on {triple}")


class PresentationError(RingError):
    pass


# ---------------------------------------------------------------------------
# presentations

# an expression c_0 + sum c_k * g_k, kept as (constant, ((symbol, coeff), ...))
Expr = tuple[int, tuple[tuple[str, int], ...]]

_TERM = re.compile(r"^(?:(?P<coef>\d+)\s*\*?\s*)?(?P<sym>[A-Za-z_][A-Za-z0-9_]*)$")


def parse_expr(text: str) -> Expr:
    """Parse ``"1 + 1*a"``, ``"2"``, ``"x+y+2"`` or ``"2x"`` into an :data:`Expr`.

    Coefficients of repeated symbols are summed; the result is not reduced
    modulo anything since the caller knows the additive orders.
    """
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise PresentationError(f"empty expression {text!r}")
    s = re.sub(r"\+-", "-", s).replace("-", "+-")
    const = 0
    coeffs: dict[str, int] = {}
    order: list[str] = []
    for raw in s.split("+"):
        if raw == "":
            if s.startswith("+"):
                continue
            raise PresentationError(f"malformed expression {text!r}")
        sign = 1
        if raw.startswith("-"):
            sign, raw = -1, raw[1:]
        if raw.isdigit():
            const += sign * int(raw)
            continue
        m = _TERM.match(raw)
        if not m:
            raise PresentationError(f"malformed term {raw!r} in {text!r}")
        sym = m.group("sym")
        c = int(m.group("coef")) if m.group("coef") else 1
        if sym not in coeffs:
            coeffs[sym] = 0
            order.append(sym)
        coeffs[sym] += sign * c
    return const, tuple((sym, coeffs[sym]) for sym in order if coeffs[sym])


def format_expr(expr: Expr) -> str:
    const, terms = expr
    parts = [f"{c}*{sym}" for sym, c in terms if c]
    if const or not parts:
        parts.insert(0, str(const))
    return " + ".join(parts)


@dataclass(frozen=True)
class RingPresentation:
    """Declarative description of a ring, as read from a ring-spec file.

    ``relations`` holds one entry ``(g_i, g_j, expr)`` per unordered
    generator pair, squares included, with ``g_i`` listed no later than
    ``g_j`` in ``generators``.
    """

    name: str
    kind: str
    modulus: int = 0
    components: tuple[str, ...] = ()
    generators: tuple[tuple[str, int], ...] = ()
    relations: tuple[tuple[str, str, Expr], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("zn", "product", "algebra"):
            raise PresentationError(f"{self.name}: unknown kind {self.kind!r}")
        if self.kind in ("zn", "algebra") and self.modulus < 2:
            raise PresentationError(f"{self.name}: modulus must be >= 2")
        if self.kind == "product" and len(self.components) < 2:
            raise PresentationError(f"{self.name}: a product needs >= 2 components")
        if self.kind == "algebra":
            self._check_algebra()

    def _check_algebra(self) -> None:
        syms = [s for s, _ in self.generators]
        if len(set(syms)) != len(syms):
            raise PresentationError(f"{self.name}: duplicate generator symbol")
        if "1" in syms:
            raise PresentationError(f"{self.name}: generator may not be named 1")
        for sym, ordk in self.generators:
            if ordk < 2:
                raise PresentationError(f"{self.name}: additive order of {sym} must be >= 2")
        pos = {s: k for k, s in enumerate(syms)}
        seen = set()
        for a, b, (_, terms) in self.relations:
            if a not in pos or b not in pos:
                raise PresentationError(f"{self.name}: relation {a}*{b} uses an unknown symbol")
            key = (min(pos[a], pos[b]), max(pos[a], pos[b]))
            if key in seen:
                raise PresentationError(f"{self.name}: relation {a}*{b} given twice")
            seen.add(key)
            for sym, _ in terms:
                if sym not in pos:
                    raise PresentationError(f"{self.name}: relation {a}*{b} uses unknown symbol {sym}")
        k = len(syms)
        if len(seen) != k * (k + 1) // 2:
            missing = [
                f"{syms[i]}*{syms[j]}"
                for i in range(k)
                for j in range(i, k)
                if (i, j) not in seen
            ]
            raise PresentationError(f"{self.name}: missing relations {', '.join(missing)}")

    @property
    def order(self) -> int | None:
        if self.kind == "zn":
            return self.modulus
        if self.kind == "algebra":
            return self.modulus * prod(o for _, o in self.generators)
        return None


def zn_presentation(name: str, m: int) -> RingPresentation:
    return RingPresentation(name, "zn", modulus=m)


def product_presentation(name: str, components: Sequence[str]) -> RingPresentation:
    return RingPresentation(name, "product", components=tuple(components))


def algebra_presentation(
    name: str,
    base: int,
    gens: Sequence[tuple[str, int]],
    relations: dict[tuple[str, str], str | int | Expr],
) -> RingPresentation:
    """Convenience builder: ``relations`` maps ``(g, h)`` to ``"1 + a"``-style text."""
    pos = {s: k for k, s in enumerate(s for s, _ in gens)}
    rels = []
    for (a, b), rhs in relations.items():
        if isinstance(rhs, int):
            expr: Expr = (rhs, ())
        elif isinstance(rhs, str):
            expr = parse_expr(rhs)
        else:
            expr = rhs
        if a in pos and b in pos and pos[a] > pos[b]:
            a, b = b, a
        rels.append((a, b, expr))
    rels.sort(key=lambda r: (pos.get(r[0], -1), pos.get(r[1], -1)))
    return RingPresentation(
        name, "algebra", modulus=base, generators=tuple(gens), relations=tuple(rels)
    )


# ---------------------------------------------------------------------------
# the materialized ring


class FiniteRing:
    """A finite commutative ring with identity backed by addition and multiplication tables.

    ``digits`` are the radices of the element encoding: ``(m,)`` for ``Z_m``,
    the component orders for a product, ``(m, ord_1, ..., ord_k)`` for an
    algebra. Element indices are the mixed-radix encoding of those digit
    vectors with the first digit most significant.
    """

    def __init__(
        self,
        name: str,
        add_table: np.ndarray,
        mul_table: np.ndarray,
        one: int,
        digits: Sequence[int],
        formatter: Callable[[tuple[int, ...]], str],
        presentation: RingPresentation | None = None,
        components: Sequence["FiniteRing"] = (),
        symbols: Sequence[str] = (),
    ):
        self.name = name
        self.order = int(add_table.shape[0])
        self.add_table = add_table
        self.mul_table = mul_table
        self.one = int(one)
        self.digits = tuple(int(d) for d in digits)
        self.presentation = presentation
        self.components = tuple(components)
        self.symbols = tuple(symbols)
        self._formatter = formatter
        self.neg_table = np.argmin(add_table, axis=1).astype(add_table.dtype)
        for t in (self.add_table, self.mul_table, self.neg_table):
            t.setflags(write=False)
        self.projection: np.ndarray | None = None
        self._nilpotent: np.ndarray | None = None
        self._units: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"

    # -- encoding ---------------------------------------------------------

    def encode(self, vec: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(int(v) % d for v, d in zip(vec, self.digits)), self.digits))

    def decode(self, a: int) -> tuple[int, ...]:
        return tuple(int(v) for v in np.unravel_index(int(a), self.digits))

    def label(self, a: int) -> str:
        return self._formatter(self.decode(a))

    def element(self, spec: int | str | Sequence) -> int:
        """Element index from a human description.

        ``Z_m`` accepts an integer; algebras accept expression text such as
        ``"x+y+2"``; products accept a tuple of per-component descriptions.
        """
        if self.components:
            if isinstance(spec, str):
                raise RingError("product elements are given as tuples")
            parts = [c.element(s) for c, s in zip(self.components, spec, strict=True)]
            return self.encode(parts)
        if self.symbols:
            if isinstance(spec, int):
                return self.encode([spec] + [0] * len(self.symbols))
            const, terms = parse_expr(str(spec))
            vec = [const] + [0] * len(self.symbols)
            pos = {s: k + 1 for k, s in enumerate(self.symbols)}
            for sym, c in terms:
                if sym not in pos:
                    raise RingError(f"{self.name}: unknown symbol {sym}")
                vec[pos[sym]] += c
            return self.encode(vec)
        if isinstance(spec, str):
            spec = int(spec)
        if len(self.digits) == 1:
            return int(spec) % self.order
        raise RingError(f"{self.name}: cannot interpret element {spec!r}")

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def power(self, a: int, k: int) -> int:
        out = self.one
        for _ in range(k):
            out = int(self.mul_table[out, a])
        return out

    # -- element predicates ------------------------------------------------

    @property
    def unit_mask(self) -> np.ndarray:
        if self._units is None:
            self._units = (self.mul_table == self.one).any(axis=1)
        return self._units

    @property
    def nilpotent_mask(self) -> np.ndarray:
        if self._nilpotent is None:
            cur = np.arange(self.order)
            # x^(2^k) with 2^k >= n suffices: a nilpotent has index <= n
            steps = max(1, int(np.ceil(np.log2(self.order))) + 1)
            for _ in range(steps):
                cur = self.mul_table[cur, cur]
            self._nilpotent = cur == 0
        return self._nilpotent

    @property
    def zero_divisor_mask(self) -> np.ndarray:
        """Elements ``a`` with some ``b != 0`` and ``ab = 0``; includes 0."""
        return (self.mul_table[:, 1:] == 0).any(axis=1) | (np.arange(self.order) == 0)

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask[a])

    def is_nilpotent(self, a: int) -> bool:
        return bool(self.nilpotent_mask[a])

    def is_zero_divisor(self, a: int) -> bool:
        return bool(self.zero_divisor_mask[a])

    def is_reduced(self) -> bool:
        return int(self.nilpotent_mask.sum()) == 1

    def is_field(self) -> bool:
        return self.order > 1 and int(self.unit_mask.sum()) == self.order - 1


def is_unit(r: FiniteRing, a: int) -> bool:
    return r.is_unit(a)


def is_nilpotent(r: FiniteRing, a: int) -> bool:
    return r.is_nilpotent(a)


def is_zero_divisor(r: FiniteRing, a: int) -> bool:
    return r.is_zero_divisor(a)


def is_reduced(r: FiniteRing) -> bool:
    return r.is_reduced()


# ---------------------------------------------------------------------------
# constructors


def _dtype_for(n: int):
    return np.uint16 if n <= np.iinfo(np.uint16).max else np.int32


def _check_cap(name: str, n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"{name}: order {n} exceeds size cap {cap}")


def make_zn(m: int, name: str | None = None, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    name = name or f"Z{m}"
    if m < 2:
        raise RingError(f"{name}: modulus must be >= 2")
    _check_cap(name, m, cap)
    x = np.arange(m, dtype=np.int64)
    dt = _dtype_for(m)
    add = ((x[:, None] + x[None, :]) % m).astype(dt)
    mul = ((x[:, None] * x[None, :]) % m).astype(dt)
    ring = FiniteRing(
        name, add, mul, 1 % m, (m,), lambda v: str(v[0]), presentation=zn_presentation(name, m)
    )
    return ring


def make_product(
    components: Sequence[FiniteRing], name: str | None = None, cap: int = DEFAULT_SIZE_CAP
) -> FiniteRing:
    """Direct product; element index is the mixed-radix encoding of component indices."""
    if len(components) < 2:
        raise RingError("a product needs at least two components")
    name = name or "x".join(c.name for c in components)
    dims = tuple(c.order for c in components)
    n = prod(dims)
    _check_cap(name, n, cap)
    dt = _dtype_for(n)
    strides = [prod(dims[k + 1 :]) for k in range(len(dims))]
    coords = np.unravel_index(np.arange(n), dims)
    add = np.empty((n, n), dtype=dt)
    mul = np.empty((n, n), dtype=dt)
    for a in range(n):
        sa = np.zeros(n, dtype=np.int64)
        sm = np.zeros(n, dtype=np.int64)
        for c, u, st in zip(components, coords, strides):
            sa += c.add_table[u[a], u].astype(np.int64) * st
            sm += c.mul_table[u[a], u].astype(np.int64) * st
        add[a] = sa
        mul[a] = sm
    one = sum(c.one * st for c, st in zip(components, strides))
    labels = [c.label for c in components]

    def fmt(v: tuple[int, ...]) -> str:
        return "(" + ",".join(lab(x) for lab, x in zip(labels, v)) + ")"

    ring = FiniteRing(
        name,
        add,
        mul,
        one,
        dims,
        fmt,
        presentation=product_presentation(name, [c.name for c in components]),
        components=components,
    )
    validate(ring)
    return ring


def _expr_vector(expr: Expr, syms: Sequence[str]) -> np.ndarray:
    const, terms = expr
    pos = {s: k + 1 for k, s in enumerate(syms)}
    v = np.zeros(len(syms) + 1, dtype=np.int64)
    v[0] = const
    for sym, c in terms:
        v[pos[sym]] += c
    return v


def make_algebra(p: RingPresentation, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Materialize a basis-presented algebra ``Z_m<1, g_1..g_k>``.

    The additive group is ``Z_m + Z_ord1 + ... + Z_ordk``; multiplication is
    the bilinear extension of the relation table with ``1`` as identity.
    Commutativity is built in; associativity is validated.
    """
    if p.kind != "algebra":
        raise PresentationError(f"{p.name}: not an algebra presentation")
    syms = [s for s, _ in p.generators]
    radix = np.array([p.modulus] + [o for _, o in p.generators], dtype=np.int64)
    d = len(radix)
    n = int(np.prod(radix))
    _check_cap(p.name, n, cap)
    for sym, o in p.generators:
        if p.modulus % o:
            raise PresentationError(
                f"{p.name}: additive order {o} of {sym} does not divide the characteristic {p.modulus}"
            )

    # structure constants: basis_i * basis_j = table[i, j] (coefficient vector)
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        table[0, i, i] = 1
        table[i, 0, i] = 1
    pos = {s: k + 1 for k, s in enumerate(syms)}
    for a, b, expr in p.relations:
        v = _expr_vector(expr, syms) % radix
        table[pos[a], pos[b]] = v
        table[pos[b], pos[a]] = v
    for i in range(1, d):
        for j in range(1, d):
            if np.any((radix[i] * table[i, j]) % radix):
                raise PresentationError(
                    f"{p.name}: order-compatibility fails, "
                    f"{radix[i]}*({syms[i - 1]}*{syms[j - 1]}) != 0"
                )

    digits = tuple(int(r) for r in radix)
    coords = np.stack(np.unravel_index(np.arange(n), digits), axis=1).astype(np.int64)
    strides = np.array([prod(digits[k + 1 :]) for k in range(d)], dtype=np.int64)

    def enc(vs: np.ndarray) -> np.ndarray:
        return (vs % radix) @ strides

    # translation by a basis element and multiplication by a basis element,
    # both as index maps; the tables are then built row by row
    translate = [enc(coords + np.eye(d, dtype=np.int64)[i]) for i in range(d)]
    scale = [enc(coords @ table[i]) for i in range(d)]

    dt = _dtype_for(n)
    add = np.empty((n, n), dtype=dt)
    mul = np.empty((n, n), dtype=dt)
    add[0] = np.arange(n)
    mul[0] = 0
    last = [int(np.flatnonzero(coords[a])[-1]) for a in range(1, n)]
    for a, i in enumerate(last, start=1):
        add[a] = translate[i][add[a - int(strides[i])]]
    for a, i in enumerate(last, start=1):
        mul[a] = add[mul[a - int(strides[i])], scale[i]]

    def fmt(v: tuple[int, ...]) -> str:
        parts = []
        for sym, c in zip(syms, v[1:]):
            if c == 1:
                parts.append(sym)
            elif c:
                parts.append(f"{c}{sym}")
        if v[0] or not parts:
            parts.append(str(v[0]))
        return "+".join(parts)

    ring = FiniteRing(
        p.name, add, mul, int(strides[0]), digits, fmt, presentation=p, symbols=syms
    )
    _check_basis_associativity(ring, table, radix)
    validate(ring)
    return ring


def _check_basis_associativity(ring: FiniteRing, table: np.ndarray, radix: np.ndarray) -> None:
    d = table.shape[0]
    # (b_i b_j) b_k versus b_i (b_j b_k), compared as coefficient vectors
    left = np.einsum("ijm,mkl->ijkl", table, table) % radix
    right = np.einsum("jkm,iml->ijkl", table, table) % radix
    bad = np.argwhere(np.any(left != right, axis=-1))
    if len(bad):
        i, j, k = (int(t) for t in bad[0])
        basis = [ring.encode(np.eye(d, dtype=int)[t]) for t in (i, j, k)]
        raise AxiomViolation("associativity", tuple(basis), ring.name)


def validate(ring: FiniteRing, seed: int = 0, random_triples: int = RANDOM_TRIPLES) -> None:
    """Check the commutative-ring-with-identity axioms, raising :class:`AxiomViolation`.

    Exhaustive over all triples when ``n**3`` is small, otherwise on a seeded
    random sample of triples.
    """
    n = ring.order
    add, mul = ring.add_table, ring.mul_table
    idx = np.arange(n)
    if not (add[0] == idx).all():
        raise AxiomViolation("additive identity", (0, int(np.flatnonzero(add[0] != idx)[0])), ring.name)
    bad = np.argwhere(add != add.T)
    if len(bad):
        raise AxiomViolation("additive commutativity", tuple(int(x) for x in bad[0]), ring.name)
    if not (add[idx, ring.neg_table] == 0).all():
        a = int(np.flatnonzero(add[idx, ring.neg_table] != 0)[0])
        raise AxiomViolation("additive inverse", (a,), ring.name)
    for row in add:
        if len(np.unique(row)) != n:
            raise AxiomViolation("addition is not a group operation", (int(row[0]),), ring.name)
    bad = np.argwhere(mul != mul.T)
    if len(bad):
        raise AxiomViolation("commutativity", tuple(int(x) for x in bad[0]), ring.name)
    if not (mul[ring.one] == idx).all():
        a = int(np.flatnonzero(mul[ring.one] != idx)[0])
        raise AxiomViolation("identity", (ring.one, a), ring.name)

    if n**3 <= _EXHAUSTIVE_TRIPLES:
        a, b, c = (x.ravel() for x in np.meshgrid(idx, idx, idx, indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, random_triples))
    _check_triples(ring, a, b, c)


def _check_triples(ring: FiniteRing, a, b, c) -> None:
    add, mul = ring.add_table, ring.mul_table
    lhs = mul[a, mul[b, c]]
    rhs = mul[mul[a, b], c]
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        k = bad[0]
        raise AxiomViolation("associativity", (int(a[k]), int(b[k]), int(c[k])), ring.name)
    lhs = mul[a, add[b, c]]
    rhs = add[mul[a, b], mul[a, c]]
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        k = bad[0]
        raise AxiomViolation("distributivity", (int(a[k]), int(b[k]), int(c[k])), ring.name)
    lhs = add[a, add[b, c]]
    rhs = add[add[a, b], c]
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        k = bad[0]
        raise AxiomViolation("additive associativity", (int(a[k]), int(b[k]), int(c[k])), ring.name)


def quotient(r: FiniteRing, members: Iterable[int], name: str | None = None) -> FiniteRing:
    """``r / I`` for an ideal given by its element indices.

    Each coset is represented by its least element index; the quotient's
    element order follows the representatives' order in ``r``.
    """
    mem = np.unique(np.fromiter((int(x) for x in members), dtype=np.int64))
    if len(mem) == r.order:
        raise RingError(f"{r.name}: quotient by the whole ring is the zero ring")
    if len(mem) == 0 or mem[0] != 0:
        raise RingError(f"{r.name}: quotient needs an ideal containing 0")
    rep_of = r.add_table[:, mem].min(axis=1).astype(np.int64)
    reps = np.unique(rep_of)
    new_index = np.full(r.order, -1, dtype=np.int64)
    new_index[reps] = np.arange(len(reps))
    proj = new_index[rep_of]
    k = len(reps)
    dt = _dtype_for(k)
    add = proj[r.add_table[np.ix_(reps, reps)].astype(np.int64)].astype(dt)
    mul = proj[r.mul_table[np.ix_(reps, reps)].astype(np.int64)].astype(dt)
    labels = [r.label(int(x)) for x in reps]
    ring = FiniteRing(
        name or f"{r.name}/I",
        add,
        mul,
        int(proj[r.one]),
        (k,),
        lambda v: labels[v[0]],
    )
    ring.projection = proj
    validate(ring)
    return ring


def build_rings(
    presentations: Iterable[RingPresentation], cap: int = DEFAULT_SIZE_CAP
) -> dict[str, FiniteRing]:
    """Build every presentation in order; products may only use earlier names."""
    out: dict[str, FiniteRing] = {}
    for p in presentations:
        if p.name in out:
            raise PresentationError(f"duplicate ring name {p.name!r}")
        out[p.name] = build_ring(p, out, cap=cap)
    return out


def build_ring(
    p: RingPresentation, known: dict[str, FiniteRing] | None = None, cap: int = DEFAULT_SIZE_CAP
) -> FiniteRing:
    known = known or {}
    if p.kind == "zn":
        return make_zn(p.modulus, name=p.name, cap=cap)
    if p.kind == "algebra":
        return make_algebra(p, cap=cap)
    missing = [c for c in p.components if c not in known]
    if missing:
        raise PresentationError(f"{p.name}: unknown component(s) {', '.join(missing)}")
    ring = make_product([known[c] for c in p.components], name=p.name, cap=cap)
    return ring
