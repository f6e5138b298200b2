"""Command-line front end: ``anngraph analyze | verify | corpus``.

Exit codes: 0 success, 1 bad input (parse error, unknown ring or theorem,
or failing verdicts for ``verify``), 2 size cap or search budget exceeded,
3 an internal invariant failed.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .analysis import InvariantViolation, RingAnalysis, audit
from .corpus import FAMILIES, SCANS, builtin_presentations, generate_corpus, verify_corpus
from .graphs import to_dot
from .ideals import IdealBudgetExceeded
from .report import RunConfig, analysis_report, dumps, presentation_closure, write_atomic
from .ring import CapExceeded, FiniteRing, RingError, RingPresentation, build_rings
from .search import SearchBudgetExceeded
from .specfile import format_spec, parse_spec
from .theorems import CHECKERS, Verdict, run_checks

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _guard(fn):
    """Map library errors onto exit codes."""

    def run(*args, **kwargs) -> int:
        try:
            return fn(*args, **kwargs)
        except _Fail as exc:
            click.echo(f"error: {exc}", err=True)
            return exc.code
        except (CapExceeded, IdealBudgetExceeded, SearchBudgetExceeded) as exc:
            click.echo(f"error: {exc}", err=True)
            return EXIT_BUDGET
        except InvariantViolation as exc:
            click.echo(f"internal invariant violated: {exc}", err=True)
            return EXIT_INVARIANT
        except (RingError, KeyError, ValueError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            return EXIT_INPUT

    return run


def load_presentations(source: str) -> dict[str, RingPresentation]:
    """Presentations from a ring-spec file, or a built-in ring name."""
    path = Path(source)
    if path.is_file():
        pres = parse_spec(path.read_text(encoding="utf-8"))
    else:
        try:
            pres = builtin_presentations(source)
        except KeyError:
            raise _Fail(EXIT_INPUT, f"{source!r} is neither a ring-spec file nor a built-in ring") from None
    return {p.name: p for p in pres}


def _select(source: str, names: tuple[str, ...], cap: int) -> list[tuple[FiniteRing, str]]:
    known = load_presentations(source)
    if not names:
        names = (list(known)[-1],) if not Path(source).is_file() else tuple(known)
    missing = [n for n in names if n not in known]
    if missing:
        raise _Fail(EXIT_INPUT, f"unknown ring(s) {', '.join(missing)}")
    out = []
    for n in names:
        closure = presentation_closure(n, known)
        rings = build_rings(closure, cap=cap)
        out.append((rings[n], format_spec(closure)))
    return out


def _parse_theorems(spec: str) -> list[str] | None:
    if spec == "all":
        return None
    ids = [t.strip() for t in spec.split(",") if t.strip()]
    unknown = [t for t in ids if t not in CHECKERS]
    if unknown:
        raise _Fail(EXIT_INPUT, f"unknown theorem id(s): {', '.join(unknown)}")
    return ids


def _parse_corpus_opts(text: str) -> dict:
    """``max-order=64,families=zn+product`` into keyword arguments."""
    opts: dict = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, _, val = item.partition("=")
        if key == "max-order" and val.isdigit():
            opts["max_order"] = int(val)
        elif key == "families" and val:
            opts["families"] = tuple(val.split("+"))
        else:
            raise _Fail(EXIT_INPUT, f"bad corpus option {item!r}")
    opts.setdefault("max_order", 64)
    return opts


def _verdict_line(v: Verdict) -> str:
    extra = f"  {v.notes[0]}" if v.notes and v.status != "pass" else ""
    return f"{v.ring:<24} {v.theorem:<13} {v.status}{extra}"


budget_options = [
    click.option("--cap", default=RunConfig.size_cap, show_default=True, help="ring size cap"),
    click.option("--node-budget", default=RunConfig.node_budget, show_default=True, help="search node budget"),
    click.option("--ideal-budget", default=RunConfig.ideal_budget, show_default=True, help="ideal enumeration budget"),
]


def with_budgets(fn):
    for opt in reversed(budget_options):
        fn = opt(fn)
    return fn


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Annihilating-ideal graphs and zero-divisor graphs of finite commutative rings."""


@main.command()
@click.argument("source")
@click.argument("ring", required=False)
@click.option("--graph", type=click.Choice(["ag", "gamma", "both"]), default="both", show_default=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="write the selected graph(s) as DOT")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), help="write the JSON report")
@with_budgets
def analyze(source, ring, graph, dot_path, json_path, cap, node_budget, ideal_budget):
    """Analyze RING from SOURCE (a ring-spec file or a built-in ring name)."""
    sys.exit(_guard(_analyze)(source, ring, graph, dot_path, json_path, cap, node_budget, ideal_budget))


def _analyze(source, ring, graph, dot_path, json_path, cap, node_budget, ideal_budget) -> int:
    cfg = RunConfig(cap, node_budget, ideal_budget, graph)
    selected = _select(source, (ring,) if ring else (), cap)
    if len(selected) != 1:
        raise _Fail(EXIT_INPUT, "the ring-spec file defines several rings; name the one to analyze")
    [(r, spec_text)] = selected
    ctx = RingAnalysis(r, node_budget=node_budget, ideal_budget=ideal_budget)
    audit(ctx)
    verdicts = run_checks(ctx)
    rep = analysis_report(ctx, verdicts, cfg, spec_text)
    click.echo(f"{r.name}: order {r.order}, {rep['lattice']['n_ideals']} ideals, "
               f"reduced={rep['flags']['reduced']}, Z(R) ideal={rep['flags']['zr_is_ideal']}")
    for key, title in (("ag", "AG"), ("gamma", "Gamma")):
        g = rep[key]
        if g is None:
            continue
        if not g["applicable"]:
            click.echo(f"  {title}: no vertices (invariants not applicable)")
            continue
        chi = g["chromatic"]
        chi_txt = chi["value"] if chi["exact"] else f"{chi['lower']}..{chi['upper']} (inexact)"
        girth = g["girth"] if g["girth"] is not None else "inf"
        click.echo(f"  {title}: {g['vertices']} vertices, {g['edges']} edges, diam {g['diameter']}, "
                   f"girth {girth}, cl {g['clique_number']}, chi {chi_txt}")
    flagged = [v for v in verdicts if v.status in ("fail", "inconclusive")]
    for v in flagged:
        click.echo("  " + _verdict_line(v))
    if json_path:
        write_atomic(json_path, dumps(rep))
    if dot_path:
        parts = []
        if graph in ("ag", "both"):
            parts.append(to_dot(ctx.ag, f"AG({r.name})"))
        if graph in ("gamma", "both"):
            parts.append(to_dot(ctx.gamma, f"Gamma({r.name})"))
        write_atomic(dot_path, "".join(parts))
    return EXIT_OK


@main.command()
@click.argument("source", required=False)
@click.argument("rings", nargs=-1)
@click.option("--corpus", "corpus_opts", help="verify a generated corpus, e.g. max-order=64")
@click.option("--theorems", default="all", show_default=True, help="comma-separated theorem ids or 'all'")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), help="write the verdict report")
@with_budgets
def verify(source, rings, corpus_opts, theorems, json_path, cap, node_budget, ideal_budget):
    """Run theorem checkers; exit 0 iff no verdict is a failure."""
    sys.exit(_guard(_verify)(source, rings, corpus_opts, theorems, json_path, cap, node_budget, ideal_budget))


def _verify(source, rings, corpus_opts, theorems, json_path, cap, node_budget, ideal_budget) -> int:
    ids = _parse_theorems(theorems)
    cfg = RunConfig(cap, node_budget, ideal_budget)
    if corpus_opts is not None:
        opts = _parse_corpus_opts(corpus_opts)
        corpus = generate_corpus(cap=cap, **opts)
        verdicts = verify_corpus(corpus, ids, node_budget)
        echo = {"corpus": {"max_order": opts["max_order"], "families": list(opts.get("families", FAMILIES))}}
    elif source:
        verdicts, specs = [], []
        for r, spec_text in _select(source, rings, cap):
            ctx = RingAnalysis(r, node_budget=node_budget, ideal_budget=ideal_budget)
            audit(ctx)
            verdicts.extend(run_checks(ctx, ids))
            specs.append(spec_text)
        verdicts.sort(key=lambda v: (v.ring, v.theorem))
        echo = {"spec": "".join(dict.fromkeys(specs))}
    else:
        raise _Fail(EXIT_INPUT, "give a ring source or --corpus")
    counts = {s: sum(v.status == s for v in verdicts) for s in ("pass", "fail", "inapplicable", "inconclusive")}
    for v in verdicts:
        # corpus runs are long; only the verdicts that need attention are echoed
        if corpus_opts is None or v.status in ("fail", "inconclusive"):
            click.echo(_verdict_line(v))
    click.echo(" ".join(f"{k}={n}" for k, n in counts.items()))
    if json_path:
        write_atomic(json_path, dumps({
            "verdicts": [v.as_dict() for v in verdicts],
            "summary": counts,
            "version": __version__,
            "config": {**cfg.as_dict(), **echo, "theorems": ids or "all"},
        }))
    return EXIT_INPUT if counts["fail"] else EXIT_OK


@main.command()
@click.option("--max-order", default=64, show_default=True)
@click.option("--families", default=",".join(FAMILIES), show_default=True, help="comma-separated families")
@click.option("--scan", type=click.Choice(sorted(SCANS)), default="conjecture-0.1", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="write the scan report")
@with_budgets
def corpus(max_order, families, scan, out_path, cap, node_budget, ideal_budget):
    """Generate a ring corpus and run a scan over it."""
    sys.exit(_guard(_corpus)(max_order, families, scan, out_path, cap, node_budget, ideal_budget))


def _corpus(max_order, families, scan, out_path, cap, node_budget, ideal_budget) -> int:
    fams = tuple(f.strip() for f in families.split(",") if f.strip())
    c = generate_corpus(max_order, fams, cap=cap)
    result = SCANS[scan](c, node_budget)
    click.echo(f"{len(c)} rings analyzed (max order {max_order}, families {','.join(fams)})")
    if scan == "conjecture-0.1":
        click.echo(f"counterexamples: {len(result['counterexamples'])}  inconclusive: {len(result['inconclusive'])}")
        for name in result["counterexamples"] + result["inconclusive"]:
            click.echo(f"  {name}")
    else:
        click.echo(f"hits: {len(result['hits'])}")
        for h in result["hits"]:
            click.echo(f"  {h['ring']}: diam Gamma {h['gamma_diameter']}, diam AG {h['ag_diameter']}")
    if out_path:
        write_atomic(out_path, dumps({
            **result,
            "rings_in_corpus": len(c),
            "version": __version__,
            "config": {
                **RunConfig(cap, node_budget, ideal_budget).as_dict(),
                "max_order": max_order,
                "families": list(fams),
            },
        }))
    return EXIT_OK


if __name__ == "__main__":
    main()
