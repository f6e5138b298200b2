"""JSON report assembly and atomic file output."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .analysis import RingAnalysis
from .ideals import DEFAULT_IDEAL_BUDGET
from .ring import DEFAULT_SIZE_CAP, RingPresentation
from .search import DEFAULT_NODE_BUDGET
from .specfile import format_spec
from .theorems import Verdict


@dataclass(frozen=True)
class RunConfig:
    size_cap: int = DEFAULT_SIZE_CAP
    node_budget: int = DEFAULT_NODE_BUDGET
    ideal_budget: int = DEFAULT_IDEAL_BUDGET
    graph: str = "both"

    def as_dict(self) -> dict:
        return asdict(self)


def presentation_closure(name: str, known: dict[str, RingPresentation]) -> list[RingPresentation]:
    """``name`` and every presentation it depends on, dependencies first."""
    out: list[RingPresentation] = []
    seen: set[str] = set()

    def visit(n: str) -> None:
        if n in seen:
            return
        seen.add(n)
        p = known[n]
        for c in p.components:
            visit(c)
        out.append(p)

    visit(name)
    return out


def analysis_report(
    ctx: RingAnalysis,
    verdicts: list[Verdict],
    config: RunConfig,
    spec_text: str = "",
) -> dict:
    r, L = ctx.ring, ctx.lattice
    nil = L[ctx.nilradical]
    want_ag = config.graph in ("ag", "both")
    want_gamma = config.graph in ("gamma", "both")
    return {
        "ring": r.name,
        "order": r.order,
        "flags": {
            "reduced": ctx.reduced,
            "zr_is_ideal": ctx.zr_is_ideal,
            "local": ctx.is_local,
            "field": r.is_field(),
        },
        "lattice": {
            "n_ideals": len(L),
            "n_nonzero_proper": len(L.proper_nonzero),
            "minimal_primes": len(ctx.min_primes),
            "nilradical_size": len(nil),
            "ideals": [L.label(k) for k in range(len(L))],
        },
        "ag": ctx.ag_report().as_dict() if want_ag else None,
        "gamma": ctx.gamma_report().as_dict() if want_gamma else None,
        "verdicts": [v.as_dict() for v in sorted(verdicts, key=lambda v: (v.ring, v.theorem))],
        "version": __version__,
        "config": {**config.as_dict(), "spec": spec_text},
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory and rename into place."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


__all__ = [
    "RunConfig",
    "analysis_report",
    "dumps",
    "format_spec",
    "presentation_closure",
    "write_atomic",
]
