"""Instance checkers for the diameter and coloring characterizations.

Each checker takes a :class:`RingAnalysis` (or a bare ring) and returns a
:class:`Verdict`. A ring outside a statement's hypotheses is
``inapplicable``; a statement whose hypothesis is met by no ideal pair is
reported ``pass`` with a ``vacuous`` note so coverage stays auditable.
Every ``fail`` carries the computed quantities that contradict the
statement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .analysis import RingAnalysis
from .graphs import complete_bipartition, is_bipartite, star_shape
from .ring import FiniteRing, algebra_presentation, make_algebra
from .search import is_clique

PASS, FAIL, INAPPLICABLE, INCONCLUSIVE = "pass", "fail", "inapplicable", "inconclusive"


@dataclass
class Verdict:
    theorem: str
    ring: str
    status: str
    witness: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "ring": self.ring,
            "status": self.status,
            "witness": self.witness,
            "notes": list(self.notes),
        }


def _ctx(r: FiniteRing | RingAnalysis) -> RingAnalysis:
    return r if isinstance(r, RingAnalysis) else RingAnalysis(r)


def _verdict(tid: str, ctx: RingAnalysis, ok: bool, witness: dict, notes: Iterable[str] = ()) -> Verdict:
    return Verdict(tid, ctx.name, PASS if ok else FAIL, witness, list(notes))


def _skip(tid: str, ctx: RingAnalysis, why: str) -> Verdict:
    return Verdict(tid, ctx.name, INAPPLICABLE, {}, [why])


def _inexact(tid: str, ctx: RingAnalysis, *results) -> Verdict | None:
    for res in results:
        if not res.exact:
            return Verdict(
                tid, ctx.name, INCONCLUSIVE, {"chi_bounds": [res.lower, res.upper]},
                ["chromatic number not settled within the search budget"],
            )
    return None


def _labels(ctx: RingAnalysis, positions: Iterable[int]) -> list[str]:
    return [ctx.lattice.label(k) for k in positions]


# ---------------------------------------------------------------------------
# diameter


DIAM_FORWARD = {0: {0}, 1: {0, 1}, 2: {1, 2, 3}, 3: {3}}
DIAM_BACKWARD = {0: {0, 1}, 1: {1, 2}, 2: {2}, 3: {2, 3}}


def check_prop_1_1(r) -> Verdict:
    """Allowed (diam Gamma, diam AG) pairs, in both directions."""
    ctx = _ctx(r)
    if ctx.ag.order == 0 or ctx.gamma.order == 0:
        return _skip("prop-1.1", ctx, "AG(R) or Gamma(R) has no vertices")
    dg, da = ctx.gamma_diameter, ctx.ag_diameter
    w = {"gamma_diameter": dg, "ag_diameter": da}
    ok = dg in DIAM_FORWARD and da in DIAM_FORWARD[dg] and da in DIAM_BACKWARD and dg in DIAM_BACKWARD[da]
    notes = []
    if dg == 2 and da == 1:
        notes.append("diam Gamma = 2 with diam AG = 1 realized (product of two fields other than Z2xZ2)")
    return _verdict("prop-1.1", ctx, ok, w, notes)


def _three_or_more_nonzero_annihilating(ctx: RingAnalysis) -> bool:
    return ctx.ag.order >= 3


def _reduced_two_primes_three_vertices(ctx: RingAnalysis) -> bool:
    return ctx.reduced and len(ctx.min_primes) == 2 and _three_or_more_nonzero_annihilating(ctx)


def _nonreduced_or_many_primes(ctx: RingAnalysis) -> bool:
    return (not ctx.reduced) or len(ctx.min_primes) > 2


def _zr_not_ideal(tid: str, ctx: RingAnalysis) -> Verdict | None:
    if ctx.zr_is_ideal:
        return _skip(tid, ctx, "Z(R) is an ideal")
    return None


def check_thm_1_2(r) -> Verdict:
    """With Z(R) not an ideal: diam AG = 2 iff reduced, two minimal primes, >= 3 AG vertices."""
    ctx = _ctx(r)
    if (v := _zr_not_ideal("thm-1.2", ctx)) is not None:
        return v
    lhs = ctx.ag_diameter == 2
    rhs = _reduced_two_primes_three_vertices(ctx)
    w = {
        "ag_diameter": ctx.ag_diameter,
        "reduced": ctx.reduced,
        "minimal_primes": len(ctx.min_primes),
        "nonzero_annihilating_ideals": ctx.ag.order,
    }
    notes = []
    if not lhs and not rhs:
        notes.append("vacuous: both sides false (a finite reduced ring with two minimal primes is F1xF2)")
    return _verdict("thm-1.2", ctx, lhs == rhs, w, notes)


def check_thm_1_3(r) -> Verdict:
    """With Z(R) not an ideal: diam AG = 3 iff diam Gamma = 3 iff non-reduced or > 2 minimal primes."""
    ctx = _ctx(r)
    if (v := _zr_not_ideal("thm-1.3", ctx)) is not None:
        return v
    s1 = ctx.ag_diameter == 3
    s2 = ctx.gamma_diameter == 3
    s3 = _nonreduced_or_many_primes(ctx)
    w = {
        "ag_diameter": ctx.ag_diameter,
        "gamma_diameter": ctx.gamma_diameter,
        "reduced": ctx.reduced,
        "minimal_primes": len(ctx.min_primes),
    }
    return _verdict("thm-1.3", ctx, s1 == s2 == s3, w)


def check_thm_1_4(r) -> Verdict:
    """With Z(R) not an ideal: 1 <= diam AG <= 3 and the three-way split by ring structure."""
    ctx = _ctx(r)
    if (v := _zr_not_ideal("thm-1.4", ctx)) is not None:
        return v
    d = ctx.ag_diameter
    parts = {
        1: ctx.is_two_field_product,
        2: _reduced_two_primes_three_vertices(ctx),
        3: _nonreduced_or_many_primes(ctx),
    }
    ok = d in (1, 2, 3) and all((d == k) == cond for k, cond in parts.items())
    w = {
        "ag_diameter": d,
        "two_field_product": parts[1],
        "reduced_two_primes_three_vertices": parts[2],
        "nonreduced_or_many_primes": parts[3],
    }
    return _verdict("thm-1.4", ctx, ok, w)


def check_lemma_1_5(r) -> Verdict:
    """Nilpotent ideal plus annihilating ideal is annihilating, over all such pairs."""
    ctx = _ctx(r)
    L = ctx.lattice
    nil = [k for k in range(len(L)) if L.contains(ctx.nilradical, k)]
    ann = [k for k in range(len(L)) if L.is_annihilating(k)]
    for n in nil:
        for i in ann:
            if not L.is_annihilating(L.sum(n, i)):
                return _verdict(
                    "lemma-1.5", ctx, False, {"nilpotent": L.label(n), "annihilating": L.label(i)}
                )
    return _verdict("lemma-1.5", ctx, True, {"nilpotent_ideals": len(nil), "annihilating_ideals": len(ann)})


def check_thm_1_6(r) -> Verdict:
    """Non-reduced with a non-annihilating sum of annihilating ideals forces diam AG = 3."""
    ctx = _ctx(r)
    if ctx.reduced:
        return _skip("thm-1.6", ctx, "R is reduced")
    pairs = ctx.nonannihilating_sums
    if not pairs:
        return _verdict("thm-1.6", ctx, True, {"pairs": 0}, ["vacuous: every sum of annihilating ideals is annihilating"])
    i, j = pairs[0]
    w = {"pair": _labels(ctx, (i, j)), "pairs": len(pairs), "ag_diameter": ctx.ag_diameter}
    return _verdict("thm-1.6", ctx, ctx.ag_diameter == 3, w)


def check_lemma_1_8(r) -> Verdict:
    """More than two minimal primes and a non-annihilating sum of nonzero annihilating ideals force diam AG = 3."""
    ctx = _ctx(r)
    if len(ctx.min_primes) <= 2:
        return _skip("lemma-1.8", ctx, "at most two minimal primes")
    L = ctx.lattice
    pairs = [(i, j) for i, j in ctx.nonannihilating_sums if L.zero not in (i, j)]
    if not pairs:
        return _verdict("lemma-1.8", ctx, True, {"pairs": 0}, ["vacuous: hypothesis not met"])
    w = {"pair": _labels(ctx, pairs[0]), "pairs": len(pairs), "ag_diameter": ctx.ag_diameter}
    return _verdict("lemma-1.8", ctx, ctx.ag_diameter == 3, w)


def diameter_cases(ctx: RingAnalysis) -> dict[str, bool]:
    """Ideal-theoretic conditions of the four-case diameter characterization.

    The ``*_literal`` entries are the conditions as usually stated; the
    unsuffixed ones are the disjoint readings the checker predicts from:
    case 2 adds F1xF2 and requires Z(R) not minimal, case 3(ii) excludes
    rings already in case 2.
    """
    L = ctx.lattice
    z = ctx.zr_position
    nonzero_proper = ctx.ag.order  # every nonzero proper ideal is annihilating here
    c1 = z is not None and nonzero_proper == 1 and z not in (L.zero, L.whole)
    c2_lit = False
    c3ii_lit = False
    if z is not None:
        below = [k for k in range(len(L)) if L.contains(z, k) and k != z]
        c2_lit = L.power(z, 3) == L.zero and all(L.kills(k, z) for k in below)
        c3ii_lit = L.power(z, 2) != L.zero and not ctx.nonannihilating_sums
    c2 = ctx.is_two_field_product or (c2_lit and not c1)
    c3i = _reduced_two_primes_three_vertices(ctx)
    c3ii = c3ii_lit and not c2
    c4 = bool(ctx.nonannihilating_sums) and (
        (ctx.reduced and len(ctx.min_primes) > 2) or not ctx.reduced
    )
    return {
        "case1": c1,
        "case2": c2,
        "case3": c3i or c3ii,
        "case4": c4,
        "case2_literal": c2_lit,
        "case3i": c3i,
        "case3ii_literal": c3ii_lit,
    }


def check_thm_1_9(r) -> Verdict:
    """Exactly one of the four ideal-theoretic cases holds and it predicts diam AG."""
    ctx = _ctx(r)
    if ctx.ag.order == 0:
        return _skip("thm-1.9", ctx, "AG(R) has no vertices")
    cases = diameter_cases(ctx)
    hits = [k for k in (1, 2, 3, 4) if cases[f"case{k}"]]
    predicted = hits[0] - 1 if len(hits) == 1 else None
    w = {"ag_diameter": ctx.ag_diameter, "cases": hits, **{k: v for k, v in cases.items()}}
    notes = []
    literal = [
        n for n, on in (
            ("1", cases["case1"]),
            ("2", cases["case2_literal"]),
            ("3ii", cases["case3ii_literal"]),
            ("4", cases["case4"]),
        ) if on
    ]
    if len(literal) > 1:
        notes.append("literal conditions overlap: " + ", ".join(literal))
    return _verdict("thm-1.9", ctx, predicted is not None and predicted == ctx.ag_diameter, w, notes)


# ---------------------------------------------------------------------------
# coloring


AN_RELATIONS = {
    ("x", "x"): 2, ("y", "y"): 2, ("z", "z"): 0,
    ("x", "y"): 0, ("x", "z"): 0, ("y", "z"): 2,
}
AN_IDEALS = [
    ["2"], ["x"], ["y"], ["z"], ["x+y"], ["x+z"], ["y+z"], ["x+y+z"],
    ["x", "y"], ["x", "z"], ["y", "z"], ["x", "y+z"], ["y", "x+z"], ["z", "x+y"], ["x", "y", "z"],
]
AN_CLIQUE = [["2"], ["x"], ["y"], ["y+z"]]


def golden_ring(name: str = "AN") -> FiniteRing:
    """``Z4[x,y,z]/(x^2-2, y^2-2, z^2, 2x, 2y, 2z, xy, xz, yz-2)``."""
    return make_algebra(algebra_presentation(name, 4, [("x", 2), ("y", 2), ("z", 2)], AN_RELATIONS))


def check_prop_2_1(r=None) -> Verdict:
    """Stated values for the order-32 local ring.

    Order 32; the fifteen listed nonzero proper ideals are exactly the
    nonzero proper ideals; cl(AG) = chi(AG) = 4 with the listed clique;
    cl(Gamma) = 4 and chi(Gamma) = 5.
    """
    from .ideals import ideal_from_generators

    ctx = _ctx(r) if r is not None else RingAnalysis(golden_ring())
    ring, L = ctx.ring, ctx.lattice
    if ring.symbols != ("x", "y", "z") or ring.order != 32:
        return _skip("prop-2.1", ctx, "not the order-32 golden presentation")
    try:
        listed = {
            L.position(ideal_from_generators(ring, [ring.element(g) for g in gens])): gens
            for gens in AN_IDEALS
        }
        clique = [L.position(ideal_from_generators(ring, [ring.element(g) for g in gens])) for gens in AN_CLIQUE]
    except (KeyError, ValueError):
        return _skip("prop-2.1", ctx, "not the order-32 golden presentation")
    if ctx.ag_chromatic.exact is False or ctx.gamma_chromatic.exact is False:
        return _inexact("prop-2.1", ctx, ctx.ag_chromatic, ctx.gamma_chromatic)
    found = set(L.proper_nonzero)
    pos = {k: i for i, k in enumerate(ctx.ag.keys)}
    checks = {
        "order_32": ring.order == 32,
        "listed_ideals_distinct": len(listed) == len(AN_IDEALS),
        "nonzero_proper_count_15": len(found) == 15,
        "listed_equals_found": set(listed) == found,
        "clique_witness_valid": all(k in pos for k in clique) and is_clique(ctx.ag.adj, [pos[k] for k in clique]),
        "ag_clique_4": len(ctx.ag_clique) == 4,
        "ag_chi_4": ctx.ag_chromatic.value == 4,
        "gamma_clique_4": len(ctx.gamma_clique) == 4,
        "gamma_chi_5": ctx.gamma_chromatic.value == 5,
    }
    w = {
        "checks": checks,
        "order": ring.order,
        "nonzero_proper_ideals": len(found),
        "unlisted_ideals": _labels(ctx, sorted(found - set(listed))),
        "ag_clique": len(ctx.ag_clique),
        "ag_chi": ctx.ag_chromatic.value,
        "gamma_clique": len(ctx.gamma_clique),
        "gamma_chi": ctx.gamma_chromatic.value,
    }
    notes = []
    if not checks["listed_equals_found"]:
        notes.append("listed ideals miss " + ", ".join(w["unlisted_ideals"]) if w["unlisted_ideals"]
                     else "listed ideals differ from the enumerated ones")
    if checks["ag_clique_4"] and checks["ag_chi_4"] and checks["clique_witness_valid"]:
        notes.append("chi(AG) = cl(AG) = 4 holds")
    return _verdict("prop-2.1", ctx, all(checks.values()), w, notes)


def check_prop_2_2(r) -> Verdict:
    """chi(AG) = 1 iff exactly one nonzero proper ideal."""
    ctx = _ctx(r)
    if ctx.ag.order == 0:
        return _skip("prop-2.2", ctx, "AG(R) has no vertices")
    if (v := _inexact("prop-2.2", ctx, ctx.ag_chromatic)) is not None:
        return v
    one_ideal = len(ctx.lattice.proper_nonzero) == 1
    w = {"ag_chi": ctx.ag_chromatic.value, "nonzero_proper_ideals": len(ctx.lattice.proper_nonzero)}
    return _verdict("prop-2.2", ctx, (ctx.ag_chromatic.value == 1) == one_ideal, w)


def _bipartite_sides(ctx: RingAnalysis) -> dict[str, bool]:
    g = ctx.ag
    return {
        "chi_2": ctx.ag_chromatic.value == 2,
        "bipartite": is_bipartite(g),
        "complete_bipartite": complete_bipartition(g) is not None,
        "star": star_shape(g) is not None,
    }


def check_thm_2_3(r) -> Verdict:
    """chi(AG)=2, bipartite, complete bipartite, (reduced with two minimal primes or star) coincide."""
    ctx = _ctx(r)
    if ctx.ag.order < 2:
        return _skip("thm-2.3", ctx, "AG(R) has fewer than two vertices")
    if (v := _inexact("thm-2.3", ctx, ctx.ag_chromatic)) is not None:
        return v
    s = _bipartite_sides(ctx)
    s["structure"] = (ctx.reduced and len(ctx.min_primes) == 2) or s["star"]
    vals = [s["chi_2"], s["bipartite"], s["complete_bipartite"], s["structure"]]
    return _verdict("thm-2.3", ctx, len(set(vals)) == 1, s)


def check_cor_2_4(r) -> Verdict:
    """Artinian version: the fourth side is F1xF2, or local with AG a star."""
    ctx = _ctx(r)
    if ctx.ag.order < 2:
        return _skip("cor-2.4", ctx, "AG(R) has fewer than two vertices")
    if (v := _inexact("cor-2.4", ctx, ctx.ag_chromatic)) is not None:
        return v
    s = _bipartite_sides(ctx)
    s["two_field_product"] = ctx.is_two_field_product
    s["local"] = ctx.is_local
    s["structure"] = ctx.is_two_field_product or (ctx.is_local and s["star"])
    vals = [s["chi_2"], s["bipartite"], s["complete_bipartite"], s["structure"]]
    return _verdict("cor-2.4", ctx, len(set(vals)) == 1, s)


def check_cor_2_5(r) -> Verdict:
    """Reduced rings: chi(AG)=2, chi(Gamma)=2, bipartite, complete bipartite, two minimal primes coincide."""
    ctx = _ctx(r)
    if not ctx.reduced:
        return _skip("cor-2.5", ctx, "R is not reduced")
    if ctx.ag.order == 0:
        return _skip("cor-2.5", ctx, "R is a field")
    if (v := _inexact("cor-2.5", ctx, ctx.ag_chromatic, ctx.gamma_chromatic)) is not None:
        return v
    s = _bipartite_sides(ctx)
    s["gamma_chi_2"] = ctx.gamma_chromatic.value == 2
    s["two_minimal_primes"] = len(ctx.min_primes) == 2
    vals = [s["chi_2"], s["gamma_chi_2"], s["bipartite"], s["complete_bipartite"], s["two_minimal_primes"]]
    return _verdict("cor-2.5", ctx, len(set(vals)) == 1, s)


def _prime_cube_root(ctx: RingAnalysis) -> int | None:
    p = ctx.ring.presentation
    if p is None or p.kind != "zn":
        return None
    q = round(p.modulus ** (1 / 3))
    for c in (q - 1, q, q + 1):
        if c >= 2 and c**3 == p.modulus and all(c % d for d in range(2, int(c**0.5) + 1)):
            return c
    return None


def check_ex_2_6(r) -> Verdict:
    """Z_{p^3}: chi(AG) = 2 while chi(Gamma) >= p."""
    ctx = _ctx(r)
    p = _prime_cube_root(ctx)
    if p is None:
        return _skip("ex-2.6", ctx, "not Z_{p^3}")
    if (v := _inexact("ex-2.6", ctx, ctx.ag_chromatic)) is not None:
        return v
    gchi = ctx.gamma_chromatic
    w = {"p": p, "ag_chi": ctx.ag_chromatic.value, "gamma_chi_lower": gchi.lower, "gamma_chi_exact": gchi.exact}
    if gchi.exact:
        w["gamma_chi"] = gchi.value
    return _verdict("ex-2.6", ctx, ctx.ag_chromatic.value == 2 and gchi.lower >= p, w)


def check_lemma_2_9(r) -> Verdict:
    """If Ann(x1) and Ann(x2) are distinct primes then x1 x2 = 0."""
    ctx = _ctx(r)
    ring, L = ctx.ring, ctx.lattice
    from .ideals import mask_of

    prime_set = set(L.primes())
    ann_pos = {}
    for x in range(1, ring.order):
        k = L.index[mask_of(ring.mul_table[:, x] == 0)]
        if k in prime_set:
            ann_pos[x] = k
    xs = sorted(ann_pos)
    pairs = 0
    for a, x1 in enumerate(xs):
        for x2 in xs[a + 1 :]:
            if ann_pos[x1] != ann_pos[x2]:
                pairs += 1
                if ring.mul(x1, x2) != 0:
                    return _verdict("lemma-2.9", ctx, False, {"x1": ring.label(x1), "x2": ring.label(x2)})
    notes = [] if pairs else ["vacuous: no two elements have distinct prime annihilators"]
    return _verdict("lemma-2.9", ctx, True, {"pairs": pairs}, notes)


def _reduced_nondomain(tid: str, ctx: RingAnalysis) -> Verdict | None:
    if not ctx.reduced:
        return _skip(tid, ctx, "R is not reduced")
    if ctx.ag.order == 0:
        return _skip(tid, ctx, "R is a field")
    return None


def check_cor_2_11(r) -> Verdict:
    """Reduced non-domain: chi(AG) = cl(AG) = number of minimal primes."""
    ctx = _ctx(r)
    if (v := _reduced_nondomain("cor-2.11", ctx)) is not None:
        return v
    if (v := _inexact("cor-2.11", ctx, ctx.ag_chromatic)) is not None:
        return v
    n = len(ctx.min_primes)
    w = {"ag_chi": ctx.ag_chromatic.value, "ag_clique": len(ctx.ag_clique), "minimal_primes": n}
    return _verdict("cor-2.11", ctx, ctx.ag_chromatic.value == len(ctx.ag_clique) == n, w)


def check_cor_2_12(r) -> Verdict:
    """Reduced non-domain: chi(AG) = chi(Gamma)."""
    ctx = _ctx(r)
    if (v := _reduced_nondomain("cor-2.12", ctx)) is not None:
        return v
    if (v := _inexact("cor-2.12", ctx, ctx.ag_chromatic, ctx.gamma_chromatic)) is not None:
        return v
    w = {"ag_chi": ctx.ag_chromatic.value, "gamma_chi": ctx.gamma_chromatic.value}
    return _verdict("cor-2.12", ctx, ctx.ag_chromatic.value == ctx.gamma_chromatic.value, w)


def check_thm_2_14_consistency(r) -> Verdict:
    """Both sides of the finiteness equivalence, recorded for a finite ring.

    Always true here; the value is the log of square-zero ideals and their
    submodule counts next to the clique number.
    """
    ctx = _ctx(r)
    L = ctx.lattice
    square_zero = [k for k in range(len(L)) if L.kills(k, k)]
    counts = {L.label(k): bin(L.below[k]).count("1") for k in square_zero}
    cl = len(ctx.ag_clique) if ctx.ag.order else 0
    w = {"ag_clique": cl, "square_zero_submodule_counts": counts}
    return _verdict("thm-2.14", ctx, True, w, ["consistency record: both sides finite for a finite ring"])


def check_conjecture_0_1(r) -> Verdict:
    """chi(AG) = cl(AG), with a clique and an optimal coloring as certificate on failure."""
    ctx = _ctx(r)
    if ctx.ag.order == 0:
        return _skip("conj-0.1", ctx, "AG(R) has no vertices")
    res = ctx.ag_chromatic
    if (v := _inexact("conj-0.1", ctx, res)) is not None:
        v.witness["clique"] = [ctx.ag.labels[v_] for v_ in ctx.ag_clique]
        return v
    cl = len(ctx.ag_clique)
    w = {"ag_chi": res.value, "ag_clique": cl}
    if res.value != cl:
        w["clique"] = [ctx.ag.labels[v] for v in ctx.ag_clique]
        w["coloring"] = {ctx.ag.labels[v]: c for v, c in enumerate(res.coloring)}
    return _verdict("conj-0.1", ctx, res.value == cl, w)


def check_ag_structure(r) -> Verdict:
    """AG connected, diameter <= 3, girth in {3, 4, inf}, vertex count = ideals - 2."""
    from .graphs import girth, is_connected

    ctx = _ctx(r)
    if ctx.ag.order == 0:
        return _skip("ag-structure", ctx, "AG(R) has no vertices")
    g = girth(ctx.ag)
    w = {
        "connected": is_connected(ctx.ag),
        "diameter": ctx.ag_diameter,
        "girth": g,
        "vertices": ctx.ag.order,
        "ideals": len(ctx.lattice),
    }
    ok = (
        w["connected"]
        and ctx.ag_diameter is not None
        and ctx.ag_diameter <= 3
        and g in (3, 4, None)
        and ctx.ag.order == len(ctx.lattice) - 2
    )
    return _verdict("ag-structure", ctx, ok, w)


CHECKERS: dict[str, Callable[[RingAnalysis], Verdict]] = {
    "prop-1.1": check_prop_1_1,
    "thm-1.2": check_thm_1_2,
    "thm-1.3": check_thm_1_3,
    "thm-1.4": check_thm_1_4,
    "lemma-1.5": check_lemma_1_5,
    "thm-1.6": check_thm_1_6,
    "lemma-1.8": check_lemma_1_8,
    "thm-1.9": check_thm_1_9,
    "prop-2.1": check_prop_2_1,
    "prop-2.2": check_prop_2_2,
    "thm-2.3": check_thm_2_3,
    "cor-2.4": check_cor_2_4,
    "cor-2.5": check_cor_2_5,
    "ex-2.6": check_ex_2_6,
    "lemma-2.9": check_lemma_2_9,
    "cor-2.11": check_cor_2_11,
    "cor-2.12": check_cor_2_12,
    "thm-2.14": check_thm_2_14_consistency,
    "conj-0.1": check_conjecture_0_1,
    "ag-structure": check_ag_structure,
}


def run_checks(ctx: RingAnalysis, theorem_ids: Iterable[str] | None = None) -> list[Verdict]:
    ids = sorted(CHECKERS) if theorem_ids is None else list(theorem_ids)
    unknown = [t for t in ids if t not in CHECKERS]
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(unknown)}")
    return [CHECKERS[t](ctx) for t in sorted(ids)]
