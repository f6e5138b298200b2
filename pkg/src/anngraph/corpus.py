"""Deterministic ring corpora and the corpus-wide scans run over them."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Sequence

from .analysis import RingAnalysis
from .ring import (
    DEFAULT_SIZE_CAP,
    CapExceeded,
    FiniteRing,
    RingPresentation,
    algebra_presentation,
    build_ring,
    product_presentation,
    zn_presentation,
)
from .search import DEFAULT_NODE_BUDGET
from .theorems import AN_RELATIONS, Verdict, run_checks

FAMILIES = ("zn", "product", "algebra", "examples")


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def prime_powers(limit: int) -> list[int]:
    """Prime powers ``p^k <= limit`` (k >= 1), ascending."""
    out = []
    for p in range(2, limit + 1):
        if _is_prime(p):
            q = p
            while q <= limit:
                out.append(q)
                q *= p
    return sorted(out)


def _an() -> RingPresentation:
    return algebra_presentation("AN", 4, [("x", 2), ("y", 2), ("z", 2)], AN_RELATIONS)


def _algebra_family() -> list[RingPresentation]:
    return [
        _an(),
        algebra_presentation("Z2[y]/(y^2)", 2, [("y", 2)], {("y", "y"): 0}),
        algebra_presentation("Z4[x]/(x^2)", 4, [("x", 4)], {("x", "x"): 0}),
        algebra_presentation(
            "Z2[x,y]/(x^2,xy,y^2)", 2, [("x", 2), ("y", 2)],
            {("x", "x"): 0, ("x", "y"): 0, ("y", "y"): 0},
        ),
        algebra_presentation("F4", 2, [("a", 2)], {("a", "a"): "1 + a"}),
        algebra_presentation(
            "F8", 2, [("a", 2), ("b", 2)],
            {("a", "a"): "b", ("a", "b"): "1 + a", ("b", "b"): "a + b"},
        ),
        product_presentation("F4xZ4", ["F4", "Z4"]),
    ]


@dataclass
class CorpusEntry:
    name: str
    presentation: RingPresentation
    families: tuple[str, ...]


@dataclass
class RingCorpus:
    entries: list[CorpusEntry]
    support: dict[str, RingPresentation] = field(default_factory=dict)
    cap: int = DEFAULT_SIZE_CAP
    _built: dict[str, FiniteRing] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            raise ValueError("corpus ring names must be unique")

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def presentation(self, name: str) -> RingPresentation:
        for e in self.entries:
            if e.name == name:
                return e.presentation
        return self.support[name]

    def build(self, name: str) -> FiniteRing:
        if name not in self._built:
            p = self.presentation(name)
            known = {c: self.build(c) for c in p.components}
            self._built[name] = build_ring(p, known, cap=self.cap)
        return self._built[name]

    def rings(self) -> Iterable[tuple[CorpusEntry, FiniteRing]]:
        for e in self.entries:
            yield e, self.build(e.name)


def generate_corpus(
    max_order: int,
    families: Sequence[str] = FAMILIES,
    cap: int = DEFAULT_SIZE_CAP,
    max_factors: int = 4,
) -> RingCorpus:
    """Rings grouped by provenance; a ring reached by several families keeps every tag.

    Entries are ordered by (order, name) so scans are reproducible.
    """
    if max_order > cap:
        raise CapExceeded(f"max order {max_order} exceeds the size cap {cap}")
    unknown = [f for f in families if f not in FAMILIES]
    if unknown:
        raise ValueError(f"unknown corpus families: {', '.join(unknown)}")
    found: dict[str, tuple[RingPresentation, list[str]]] = {}
    support: dict[str, RingPresentation] = {}

    def add(p: RingPresentation, fam: str) -> None:
        if p.name in found:
            if fam not in found[p.name][1]:
                found[p.name][1].append(fam)
        else:
            found[p.name] = (p, [fam])

    def zn(m: int) -> RingPresentation:
        p = zn_presentation(f"Z{m}", m)
        support.setdefault(p.name, p)
        return p

    if "zn" in families:
        for m in range(4, max_order + 1):
            if not _is_prime(m):
                add(zn(m), "zn")
    if "product" in families:
        qs = prime_powers(max_order // 2)
        for k in range(2, max_factors + 1):
            for combo in combinations_with_replacement(qs, k):
                size = 1
                for q in combo:
                    size *= q
                if size > max_order:
                    continue
                comps = [zn(q).name for q in combo]
                add(product_presentation("x".join(comps), comps), "product")
    if "algebra" in families or "examples" in families:
        zn(4)
        alg = {p.name: p for p in _algebra_family()}
        support["F4"] = alg["F4"]
    if "algebra" in families:
        for p in alg.values():
            if _order(p, support) <= max_order:
                add(p, "algebra")
    if "examples" in families:
        for p in (alg["AN"], alg["Z2[y]/(y^2)"], zn(8), zn(27), zn(125)):
            add(p, "examples")

    entries = [CorpusEntry(n, p, tuple(f)) for n, (p, f) in found.items()]
    entries.sort(key=lambda e: (_order(e.presentation, support), e.name))
    return RingCorpus(entries, support, cap)


def _order(p: RingPresentation, support: dict[str, RingPresentation]) -> int:
    if p.order is not None:
        return p.order
    out = 1
    for c in p.components:
        out *= _order(support[c], support)
    return out


# ---------------------------------------------------------------------------
# scans


def _analyses(corpus: RingCorpus, node_budget: int) -> Iterable[tuple[CorpusEntry, RingAnalysis]]:
    for entry, ring in corpus.rings():
        yield entry, RingAnalysis(ring, node_budget=node_budget)


def scan_conjecture_0_1(corpus: RingCorpus, node_budget: int = DEFAULT_NODE_BUDGET) -> dict:
    """chi(AG) against cl(AG) on every ring with a nonempty AG.

    cl(AG) against cl(Gamma) is logged alongside as exploratory data; no
    relation between the two is asserted.
    """
    rows, counterexamples, inconclusive = [], [], []
    cl_relation = {"ag_below_gamma": 0, "equal": 0, "ag_above_gamma": 0}
    skipped = []
    for entry, ctx in _analyses(corpus, node_budget):
        if ctx.ag.order == 0:
            skipped.append(entry.name)
            continue
        res = ctx.ag_chromatic
        cl = len(ctx.ag_clique)
        gcl = len(ctx.gamma_clique)
        cl_relation["ag_below_gamma" if cl < gcl else "equal" if cl == gcl else "ag_above_gamma"] += 1
        row = {
            "ring": entry.name,
            "order": ctx.ring.order,
            "families": list(entry.families),
            "ag_vertices": ctx.ag.order,
            "ag_clique": cl,
            "ag_chi": res.value if res.exact else None,
            "exact": res.exact,
            "gamma_clique": gcl,
        }
        if not res.exact:
            row["status"] = "inconclusive"
            row["chi_bounds"] = [res.lower, res.upper]
            inconclusive.append(entry.name)
        elif res.value == cl:
            row["status"] = "consistent"
        else:
            row["status"] = "counterexample"
            row["clique"] = [ctx.ag.labels[v] for v in ctx.ag_clique]
            row["coloring"] = {ctx.ag.labels[v]: c for v, c in enumerate(res.coloring)}
            counterexamples.append(entry.name)
        rows.append(row)
    rows.sort(key=lambda r: r["ring"])
    return {
        "scan": "conjecture-0.1",
        "rings_scanned": len(rows),
        "rings_without_ag": sorted(skipped),
        "counterexamples": sorted(counterexamples),
        "inconclusive": sorted(inconclusive),
        "clique_relation_ag_vs_gamma": cl_relation,
        "rings": rows,
    }


def search_diam_gap(corpus: RingCorpus, node_budget: int = DEFAULT_NODE_BUDGET) -> dict:
    """Rings with diam Gamma = 2 and diam AG = 3."""
    hits = []
    scanned = 0
    for entry, ctx in _analyses(corpus, node_budget):
        if ctx.ag.order == 0:
            continue
        scanned += 1
        dg, da = ctx.gamma_diameter, ctx.ag_diameter
        if dg == 2 and da == 3:
            hits.append({
                "ring": entry.name,
                "order": ctx.ring.order,
                "gamma_diameter": dg,
                "ag_diameter": da,
                # a diameter-3 AG forces diam Gamma in {2, 3}
                "gamma_diameter_allowed": dg in (2, 3),
            })
    hits.sort(key=lambda h: h["ring"])
    return {"scan": "diam-gap", "rings_scanned": scanned, "hits": hits}


SCANS: dict[str, Callable[[RingCorpus, int], dict]] = {
    "conjecture-0.1": scan_conjecture_0_1,
    "diam-gap": search_diam_gap,
}


def verify_corpus(
    corpus: RingCorpus,
    theorem_ids: Iterable[str] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Verdict]:
    """Every selected checker on every corpus ring, sorted by (ring, theorem)."""
    ids = None if theorem_ids is None else list(theorem_ids)
    out: list[Verdict] = []
    for _, ctx in _analyses(corpus, node_budget):
        out.extend(run_checks(ctx, ids))
    out.sort(key=lambda v: (v.ring, v.theorem))
    return out


_ZN_NAME = re.compile(r"^Z(\d+)$")


def builtin_presentations(name: str) -> list[RingPresentation]:
    """Presentations for a built-in ring name, dependencies first.

    Accepts ``Z<m>``, the fixed algebra family (``AN``, ``F4``, ...) and
    ``x``-joined products of those, e.g. ``Z2xZ4`` or ``F4xZ3``.
    """
    alg = {p.name: p for p in _algebra_family()}
    if name == "F4xZ4":
        return [alg["F4"], zn_presentation("Z4", 4), alg["F4xZ4"]]
    if name in alg:
        return [alg[name]]
    m = _ZN_NAME.match(name)
    if m and int(m.group(1)) >= 2:
        return [zn_presentation(name, int(m.group(1)))]
    parts = name.split("x")
    if len(parts) >= 2 and all(parts):
        out: list[RingPresentation] = []
        for part in parts:
            for p in builtin_presentations(part):
                if p.name not in {q.name for q in out}:
                    out.append(p)
        return out + [product_presentation(name, parts)]
    raise KeyError(f"unknown built-in ring {name!r}")
