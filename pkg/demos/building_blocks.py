"""Tour of the building blocks: a bound quiver algebra and its standard modules.

Run from the repository root after installing the package:

    python3 demos/building_blocks.py
"""

from taumatch import (
    Quiver,
    Relation,
    build_algebra,
    hom_dim,
    injective,
    projective,
    simple,
    top_multiplicities,
)

# A quiver with one arrow 1 -> 2 and a loop at 2; the loop squares to zero
# and dies after the arrow.  Relation paths are written in application order:
# ["a", "b"] means "first a, then b".
quiver = Quiver(2, [("a", 1, 2), ("b", 2, 2)])
alg = build_algebra(quiver, [Relation.monomial(["a", "b"]),
                             Relation.monomial(["b", "b"])])

print(f"algebra dimension {alg.dim}, nilpotency degree {alg.nilpotency_degree}")
print("surviving basis paths:")
for p in alg.basis:
    label = " . ".join(p.arrows) if p.arrows else f"e{p.source}"
    print(f"  {label:8}  {p.source} -> {p.target}")

print()
for i in (1, 2):
    p = projective(alg, i)
    inj = injective(alg, i)
    print(f"P({i}) has dimension vector {p.dims}, top multiplicities "
          f"{top_multiplicities(p)}")
    print(f"I({i}) has dimension vector {inj.dims}")

# Morphism counts out of projectives simply read off dimension vectors,
# a useful sanity check for any representation you construct by hand.
print()
m = projective(alg, 1)
for i in (1, 2):
    print(f"hom_dim(P({i}), P(1)) = {hom_dim(projective(alg, i), m)}"
          f"  (the dimension of P(1) at vertex {i} is {m.dim(i)})")

print()
print("S(2) equals the socle of P(2):", simple(alg, 2).dims)
