"""Acceptance criteria, one summary line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the per-criterion
PASS/FAIL lines are printed in the terminal summary. Two sub-checks are
marked ``xfail(strict=True)``: they are implemented exactly as stated and
fail because the stated values are wrong (see their reasons). Strictness
means the suite flags them if they ever start passing.
"""

from __future__ import annotations

import time
from collections import Counter, defaultdict

import pytest
from click.testing import CliRunner

from anngraph.analysis import RingAnalysis
from anngraph.cli import main
from anngraph.corpus import generate_corpus
from anngraph.graphs import build_gamma
from anngraph.ideals import enumerate_ideals, ideal_from_generators
from anngraph.oracles import (
    brute_chromatic_number,
    brute_clique_number,
    brute_diameter,
    brute_force_ideals,
)
from anngraph.ring import make_zn
from anngraph.search import chromatic_number, is_clique, max_clique
from anngraph.theorems import AN_CLIQUE, AN_IDEALS, CHECKERS, golden_ring

RESULTS: dict[str, dict[str, bool]] = defaultdict(dict)

WRONG_IDEAL_LIST = (
    "the ring has 16 nonzero proper ideals; the stated list of 15 omits (x+y, x+z), "
    "confirmed by brute-force subgroup enumeration"
)
THM_2_3_FALSE = (
    "F x L with L having one nonzero proper ideal (e.g. Z12) has AG = P4: chi 2 and "
    "bipartite, but not complete bipartite and not a star"
)


def record(criterion: str, part: str, ok: bool) -> None:
    RESULTS[criterion][part] = ok
    assert ok, f"criterion {criterion}: {part}"


def summary_lines() -> list[str]:
    lines = []
    for crit in sorted(RESULTS, key=int):
        parts = RESULTS[crit]
        failed = [p for p, ok in parts.items() if not ok]
        status = "PASS" if not failed else "FAIL"
        detail = f" (failed: {', '.join(failed)})" if failed else ""
        lines.append(f"criterion {crit}: {status} [{sum(parts.values())}/{len(parts)} checks]{detail}")
    return lines


# ---------------------------------------------------------------------------
# shared corpus run


@pytest.fixture(scope="module")
def full_run():
    """Every checker on the order <= 256 corpus, timed."""
    t0 = time.perf_counter()
    corpus = generate_corpus(256)
    per_ring = {}
    for entry, ring in corpus.rings():
        ctx = RingAnalysis(ring)
        per_ring[entry.name] = (entry, ctx, {t: CHECKERS[t](ctx) for t in sorted(CHECKERS)})
    return per_ring, time.perf_counter() - t0


def statuses(full_run, theorem: str) -> Counter:
    per_ring, _ = full_run
    return Counter(v[theorem].status for _, _, v in per_ring.values())


def failures(full_run, theorem: str) -> list[str]:
    per_ring, _ = full_run
    return sorted(n for n, (_, _, v) in per_ring.items() if v[theorem].status == "fail")


# ---------------------------------------------------------------------------
# 1. golden ring


@pytest.fixture(scope="module")
def an():
    t0 = time.perf_counter()
    r = golden_ring()
    ctx = RingAnalysis(r)
    _ = ctx.ag_chromatic, ctx.gamma_chromatic
    return r, ctx, time.perf_counter() - t0


def test_c1_order_and_runtime(an):
    r, _, secs = an
    record("1", "order 32", r.order == 32)
    record("1", "runtime < 5 s", secs < 5)


@pytest.mark.xfail(strict=True, reason=WRONG_IDEAL_LIST)
def test_c1_exactly_fifteen_listed_ideals(an):
    r, ctx, _ = an
    L = ctx.lattice
    listed = {L.position(ideal_from_generators(r, [r.element(g) for g in gens])) for gens in AN_IDEALS}
    ok = len(L.proper_nonzero) == 15 and listed == set(L.proper_nonzero)
    record("1", "exactly the 15 listed nonzero proper ideals", ok)


def test_c1_clique_and_chromatic_values(an):
    r, ctx, _ = an
    ag, gamma = ctx.ag, ctx.gamma
    L = ctx.lattice
    witness = [ag.keys.index(L.position(ideal_from_generators(r, [r.element(g) for g in gens]))) for gens in AN_CLIQUE]
    record("1", "witness {(2),(x),(y),(y+z)} is a clique", is_clique(ag.adj, witness))
    record("1", "cl(AG) = 4", len(ctx.ag_clique) == 4)
    record("1", "chi(AG) = 4", ctx.ag_chromatic.exact and ctx.ag_chromatic.value == 4)
    record("1", "cl(Gamma) = 4", len(ctx.gamma_clique) == 4)
    record("1", "chi(Gamma) = 5", ctx.gamma_chromatic.exact and ctx.gamma_chromatic.value == 5)


# ---------------------------------------------------------------------------
# 2. diameter theorems


def test_c2_diameter_theorems(full_run):
    per_ring, secs = full_run
    record("2", "corpus has zn, product and algebra families", {
        f for e, _, _ in per_ring.values() for f in e.families
    } >= {"zn", "product", "algebra"})
    for t in ("prop-1.1", "thm-1.4", "thm-1.9"):
        record("2", f"{t} zero failures", statuses(full_run, t)["fail"] == 0)
    record("2", "thm-1.4 checked on some rings", statuses(full_run, "thm-1.4")["pass"] > 0)
    record("2", "runtime < 10 min", secs < 600)


# ---------------------------------------------------------------------------
# 3. coloring theorems


@pytest.mark.xfail(strict=True, reason=THM_2_3_FALSE)
def test_c3_theorem_2_3_and_cor_2_4(full_run):
    ok = not failures(full_run, "thm-2.3") and not failures(full_run, "cor-2.4")
    record("3", "thm-2.3 and cor-2.4 zero failures", ok)


def test_c3_other_coloring_statements(full_run):
    for t in ("prop-2.2", "cor-2.5"):
        record("3", f"{t} zero failures", statuses(full_run, t)["fail"] == 0)
    for p in (2, 3, 5):
        ctx = RingAnalysis(make_zn(p**3))
        ok = ctx.ag_chromatic.value == 2 and ctx.gamma_chromatic.lower >= p
        record("3", f"Z_{p}^3: chi(AG)=2, chi(Gamma)>={p}", ok)
    g27 = build_gamma(make_zn(27))
    record("3", "chi(Gamma(Z27)) = 3 by exhaustive oracle", brute_chromatic_number(g27.adj) == 3)


# ---------------------------------------------------------------------------
# 4. reduced rings


def _predicted_field_factors(entry, corpus_support) -> int | None:
    """Number of field factors if the presentation is visibly a product of fields, else None."""
    p = entry.presentation
    fields = {"F4", "F8"}

    def factors(name, pres):
        if pres.kind == "zn":
            m = pres.modulus
            primes = [q for q in range(2, m + 1) if m % q == 0 and all(q % d for d in range(2, q))]
            return len(primes) if all(m % (q * q) for q in primes) else None
        if pres.kind == "algebra":
            return 1 if name in fields else None
        parts = [factors(c, corpus_support[c]) for c in pres.components]
        return None if None in parts else sum(parts)

    return factors(entry.name, p)


def test_c4_reduced_rings(full_run):
    per_ring, _ = full_run
    support = generate_corpus(256).support
    for t in ("cor-2.11", "cor-2.12"):
        record("4", f"{t} zero failures", statuses(full_run, t)["fail"] == 0)
        record("4", f"{t} checked on some rings", statuses(full_run, t)["pass"] > 0)
    ok_products = True
    for name, (entry, ctx, _) in per_ring.items():
        k = _predicted_field_factors(entry, support)
        if ctx.reduced != (k is not None) or (k is not None and len(ctx.min_primes) != k):
            ok_products = False
    record("4", "reduced rings are exactly the field products", ok_products)


# ---------------------------------------------------------------------------
# 5. conjecture scan


def test_c5_conjecture_scan(full_run):
    per_ring, _ = full_run
    record("5", "zero counterexamples", statuses(full_run, "conj-0.1")["fail"] == 0)
    small = [n for n, (_, ctx, v) in per_ring.items() if ctx.ag.order <= 200 and v["conj-0.1"].status == "inconclusive"]
    record("5", "zero inconclusive at <= 200 AG vertices", not small)


# ---------------------------------------------------------------------------
# 6. oracle equivalence


def test_c6_graph_oracles(full_run):
    per_ring, _ = full_run
    checked = 0
    ok = True
    for _, ctx, _ in per_ring.values():
        for g in (ctx.ag, ctx.gamma):
            if 0 < g.order <= 20:
                checked += 1
                res = chromatic_number(g.adj)
                ok &= len(max_clique(g.adj)) == brute_clique_number(g.adj)
                ok &= res.exact and res.value == brute_chromatic_number(g.adj)
                ok &= brute_diameter(g.adj) == (ctx.ag_diameter if g is ctx.ag else ctx.gamma_diameter)
    record("6", "clique and chi agree with exhaustive search on graphs <= 20 vertices", ok and checked > 0)


def test_c6_ideal_oracle():
    corpus = generate_corpus(64)
    ok = True
    for _, r in corpus.rings():
        if r.order <= 64:
            got = {frozenset(int(a) for a in i.members) for i in enumerate_ideals(r)}
            ok &= got == brute_force_ideals(r)
    record("6", "enumerate_ideals agrees with subgroup closure up to order 64", ok)


# ---------------------------------------------------------------------------
# 7. structure


def test_c7_structure(full_run):
    per_ring, _ = full_run
    record("7", "AG connected, diam <= 3, girth in {3,4,inf}, V = ideals - 2",
           statuses(full_run, "ag-structure")["fail"] == 0)
    record("7", "every ring with AG vertices checked",
           statuses(full_run, "ag-structure")["pass"] == sum(1 for _, c, _ in per_ring.values() if c.ag.order))


# ---------------------------------------------------------------------------
# 8. determinism


def test_c8_corpus_report_deterministic(tmp_path):
    runner = CliRunner()
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        res = runner.invoke(main, ["corpus", "--max-order", "64", "--scan", "conjecture-0.1", "--out", str(path)])
        assert res.exit_code == 0, res.output
        outs.append(path.read_bytes())
    record("8", "two corpus runs byte-identical", outs[0] == outs[1])
