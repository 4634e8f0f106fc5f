"""Support tau-tilting pairs: what verifies and what fails.

    python3 demos/pair_verification.py
"""

from taumatch import (
    Quiver,
    SupportPair,
    build_algebra,
    injective,
    projective,
    simple,
    verify_support_pair,
)

# the fork quiver: 1 -> 2 and 1 -> 3, hereditary
alg = build_algebra(Quiver(3, [("a", 1, 2), ("c", 1, 3)]), [])

candidates = {
    "good": SupportPair(alg, [simple(alg, 2), injective(alg, 2)], [simple(alg, 3)]),
    "repeated summand": SupportPair(alg, [simple(alg, 2), simple(alg, 2)], []),
    "too few summands": SupportPair(alg, [simple(alg, 2), simple(alg, 3)], []),
    "clashing simples": SupportPair(alg, [simple(alg, 1), simple(alg, 2)],
                                    [simple(alg, 3)]),
    "non-projective P": SupportPair(alg, [simple(alg, 2)], [injective(alg, 2)]),
    "whole algebra": SupportPair(alg, [projective(alg, i) for i in (1, 2, 3)], []),
}

for label, pair in candidates.items():
    report = verify_support_pair(pair)
    print(f"{label:18} -> {report.status}")
    for name, result, detail in report.checks:
        if result == "fail":
            print(f"{'':21}{name}: {detail}")
