from dataclasses import dataclass

import pytest

from taumatch import linalg as la
from taumatch.algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra
from taumatch.reps import Representation, injective, projective, simple
from taumatch.tau import SupportPair, verify_support_pair


@pytest.fixture(scope="session")
def fork_alg():
    """1 --a--> 2, 1 --c--> 3, no relations."""
    return build_algebra(Quiver(3, [("a", 1, 2), ("c", 1, 3)]), [])


@pytest.fixture(scope="session")
def twocycle_alg():
    """1 <--> 2 with both length-2 cycles zero."""
    return build_algebra(
        Quiver(2, [("a", 1, 2), ("b", 2, 1)]),
        [Relation.monomial(["a", "b"]), Relation.monomial(["b", "a"])],
    )


@pytest.fixture(scope="session")
def loop_source_alg():
    """Loop a at vertex 1, b: 1 -> 2, with a.a = 0 and a.b = 0."""
    return build_algebra(
        Quiver(2, [("a", 1, 1), ("b", 1, 2)]),
        [Relation.monomial(["a", "a"]), Relation.monomial(["a", "b"])],
    )


@pytest.fixture(scope="session")
def loop_sink_alg():
    """a: 1 -> 2, loop b at vertex 2, with a.b = 0 and b.b = 0."""
    return build_algebra(
        Quiver(2, [("a", 1, 2), ("b", 2, 2)]),
        [Relation.monomial(["a", "b"]), Relation.monomial(["b", "b"])],
    )


@dataclass
class AlgebraCorpus:
    alg: BoundQuiverAlgebra
    pairs: list  # verified support tau-tilting SupportPairs
    indecomposables: list  # certified indecomposables over the algebra


def _pair(alg, t, p, name):
    sp = SupportPair(alg, t, p, name)
    report = verify_support_pair(sp)
    assert report.status == "support tau-tilting", (name, report.status)
    return sp


@pytest.fixture(scope="session")
def corpus(fork_alg, twocycle_alg, loop_source_alg, loop_sink_alg):
    """Verified support pairs and indecomposables, keyed by algebra nickname."""
    out = {}

    f = fork_alg
    fork_mods = {
        "s1": simple(f, 1), "s2": simple(f, 2), "s3": simple(f, 3),
        "p1": projective(f, 1), "i2": injective(f, 2), "i3": injective(f, 3),
    }
    out["fork"] = AlgebraCorpus(f, [
        _pair(f, [fork_mods["s2"], fork_mods["i2"]], [fork_mods["s3"]], "left"),
        _pair(f, [fork_mods["i3"], fork_mods["s1"]], [fork_mods["s2"]], "right"),
        _pair(f, [projective(f, 1), projective(f, 2), projective(f, 3)], [], "projectives"),
        _pair(f, [fork_mods["s2"], fork_mods["s3"]], [fork_mods["p1"]], "sinks"),
    ], list(fork_mods.values()))

    t = twocycle_alg
    out["twocycle"] = AlgebraCorpus(t, [
        _pair(t, [simple(t, 1)], [projective(t, 2)], "left"),
        _pair(t, [simple(t, 2)], [projective(t, 1)], "right"),
        _pair(t, [projective(t, 1), projective(t, 2)], [], "projectives"),
        _pair(t, [], [projective(t, 1), projective(t, 2)], "empty"),
    ], [simple(t, 1), simple(t, 2), projective(t, 1), projective(t, 2)])

    ls = loop_source_alg
    jordan = Representation(ls, [2, 0], {"a": la.mat([[0, 0], [1, 0]])})
    out["loop_source"] = AlgebraCorpus(ls, [
        _pair(ls, [jordan], [projective(ls, 2)], "left"),
        _pair(ls, [projective(ls, 2)], [projective(ls, 1)], "right"),
        _pair(ls, [projective(ls, 1), projective(ls, 2)], [], "projectives"),
    ], [simple(ls, 1), simple(ls, 2), projective(ls, 1), jordan, injective(ls, 2)])

    lk = loop_sink_alg
    out["loop_sink"] = AlgebraCorpus(lk, [
        _pair(lk, [projective(lk, 1), projective(lk, 2)], [], "left"),
        _pair(lk, [simple(lk, 1)], [projective(lk, 2)], "right"),
        _pair(lk, [projective(lk, 2)], [projective(lk, 1)], "third"),
    ], [simple(lk, 1), simple(lk, 2), projective(lk, 1), projective(lk, 2),
        injective(lk, 2)])

    return out
