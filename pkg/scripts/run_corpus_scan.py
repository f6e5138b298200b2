"""Run every checker over a generated corpus and tabulate verdicts.

Writes a JSON report (sorted, byte-deterministic) and prints a per-theorem
status table plus the rings behind each failure.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter, defaultdict

from anngraph import __version__
from anngraph.corpus import FAMILIES, generate_corpus, scan_conjecture_0_1, search_diam_gap, verify_corpus
from anngraph.report import dumps, write_atomic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=256)
    ap.add_argument("--families", default=",".join(FAMILIES))
    ap.add_argument("--out", default="corpus_report.json")
    args = ap.parse_args()

    t0 = time.perf_counter()
    corpus = generate_corpus(args.max_order, args.families.split(","))
    verdicts = verify_corpus(corpus)
    table: dict[str, Counter] = defaultdict(Counter)
    failing: dict[str, list[str]] = defaultdict(list)
    for v in verdicts:
        table[v.theorem][v.status] += 1
        if v.status == "fail":
            failing[v.theorem].append(v.ring)
    print(f"{len(corpus)} rings, {len(verdicts)} verdicts")
    print(f"{'theorem':<14}{'pass':>7}{'fail':>7}{'n/a':>7}{'inconcl':>9}")
    for t in sorted(table):
        c = table[t]
        print(f"{t:<14}{c['pass']:>7}{c['fail']:>7}{c['inapplicable']:>7}{c['inconclusive']:>9}")
    for t in sorted(failing):
        rings = failing[t]
        print(f"{t} fails on {len(rings)}: {', '.join(rings[:12])}{' ...' if len(rings) > 12 else ''}")
    conj = scan_conjecture_0_1(corpus)
    gap = search_diam_gap(corpus)
    print(f"conjecture scan: {len(conj['counterexamples'])} counterexamples, "
          f"{len(conj['inconclusive'])} inconclusive, cl(AG) vs cl(Gamma) {conj['clique_relation_ag_vs_gamma']}")
    print(f"diam-gap hits: {[h['ring'] for h in gap['hits']]}")
    write_atomic(args.out, dumps({
        "version": __version__,
        "max_order": args.max_order,
        "families": args.families.split(","),
        "summary": {t: dict(sorted(c.items())) for t, c in sorted(table.items())},
        "failures": {t: r for t, r in sorted(failing.items())},
        "conjecture_scan": conj,
        "diam_gap": gap,
        "verdicts": [v.as_dict() for v in verdicts],
    }))
    print(f"wrote {args.out} in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
