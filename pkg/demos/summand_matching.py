"""Matching the summands of two support tau-tilting pairs end to end.

Uses the committed fork workspace; equivalent to

    taumatch bijection left right --workspace golden/fork.json --all --drop c

    python3 demos/summand_matching.py
"""

from pathlib import Path

from taumatch import build_report, parse_workspace
from taumatch.reports import cycles

root = Path(__file__).resolve().parent.parent
ws = parse_workspace(str(root / "golden" / "fork.json"))

report = build_report(ws.pairs["left"], ws.pairs["right"],
                      enumerate_all=True, drop={"c"})

print("candidate sets (which right summands each left summand may match):")
for i, s in enumerate(report.candidates.sets, start=1):
    print(f"  {i}: {sorted(s)}")

print()
print("every edge with its conditions:")
print("  a = isomorphic, b = sum not rigid,")
print("  c/d = projective-side pair conflict (right/left)")
for (i, j), label in sorted(report.candidates.labels.items()):
    if label.any:
        print(f"  ({i}, {j}): {''.join(label.letters())}")

print()
print(f"chosen matching: {cycles(report.matching)} via conditions "
      f"{report.matched_conditions}")
print("all valid permutations:", ", ".join(cycles(p) for p in report.enumeration.perms))

drop, sets = report.restricted
print()
print(f"candidate sets after dropping condition {drop}:")
for i, s in enumerate(sets, start=1):
    print(f"  {i}: {sorted(s)}")
print("index 2 loses every candidate, so no matching survives without (c).")
