"""The Auslander-Reiten translate, step by step.

Builds the loop-at-source algebra, takes the two-dimensional Jordan module at
vertex 1, and walks through the minimal projective presentation, the Nakayama
functor, and the resulting translate.

    python3 demos/translate_tour.py
"""

from taumatch import (
    Quiver,
    Relation,
    Representation,
    build_algebra,
    is_isomorphic,
    minimal_projective_presentation,
    simple,
    tau,
    tau_minus,
)
from taumatch.linalg import mat

quiver = Quiver(2, [("a", 1, 1), ("b", 1, 2)])
alg = build_algebra(quiver, [Relation.monomial(["a", "a"]),
                             Relation.monomial(["a", "b"])])

# the module with composition series 1 over 1: the loop acts as a Jordan block
jordan = Representation(alg, [2, 0], {"a": mat([[0, 0], [1, 0]])})
print("module dims:", jordan.dims)

pres = minimal_projective_presentation(jordan)
print("minimal presentation: P1 built from vertices", pres.p1_vertices,
      "mapping to P0 built from vertices", pres.p0_vertices)
print("P1 dims:", pres.p1.dims, "  P0 dims:", pres.p0.dims)

result = tau(jordan)
print("after the Nakayama functor: nu P1 dims", result.nu_p1.dims,
      " -> nu P0 dims", result.nu_p0.dims)
print("translate dims:", result.translate.dims)
print("translate is S(2):", is_isomorphic(result.translate, simple(alg, 2)))

# the inverse translate recovers the module up to isomorphism
back = tau_minus(result.translate)
print("inverse translate dims:", back.dims,
      " isomorphic to the original:", is_isomorphic(back, jordan))
