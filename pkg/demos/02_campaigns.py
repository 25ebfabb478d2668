"""Exhaustive checks of the characterizations over all small connected graphs.

Run: python3 demos/02_campaigns.py
"""
from collections import Counter

from srclab.campaigns import validate_lemma1, validate_theorem1, validate_theorem2

# src = m on trees, never m - 1, and m - 2 exactly on C5 and the three unicyclic families.
report = validate_theorem1(6, 10)
print("theorem1:", report.summary)
by_gap = Counter(r["m"] - r["src"] for r in report.results)
print("  m - src over n <= 6:", dict(sorted(by_gap.items())))
for r in report.results:
    if r["src"] == r["m"] - 2:
        print(f"  {r['graph6']:>6}  m={r['m']}  src={r['src']}  {', '.join(r['labels'])}")

# The triangle-packing bound is tight exactly when every block is a bridge or a
# triangle with a degree-2 vertex.
report = validate_theorem2(6, 10)
tight = [r for r in report.results if r["gbar"]]
print(f"\ntheorem2: {report.summary['graphs']} graphs, bound tight on {len(tight)}, "
      f"{report.summary['counterexamples']} counterexamples")

# Reading "pendant tree is a path" loosely (path attached anywhere) breaks the characterization.
loose = validate_theorem1(7, 10, path_rule="any")
print(f"\nloose path reading: {len(loose.counterexamples)} counterexamples, e.g.",
      [(r["graph6"], r["labels"], r["src"], r["m"]) for r in loose.counterexamples[:2]])

# How two shortest cycles can meet.
report = validate_lemma1(7)
print("\nlemma1 patterns by girth:")
for (g, p), n in sorted(Counter((r["girth"], r["pattern"]) for r in report.results).items()):
    print(f"  girth {g}: {p:<28} {n}")
