"""The Auslander-Reiten translate and support tau-tilting pair verification.

The translate is computed through the Nakayama functor: a minimal projective
presentation P1 -> P0 of M is carried to a map between the corresponding
injectives, and tau M is its kernel.  tau of a projective is zero.

A pair (T, P) with P projective is tau-rigid when Hom(T, tau T) = 0 and
Hom(P, T) = 0; it is a support tau-tilting pair when additionally the total
number of indecomposable summands equals the number of simple modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .algebra import BoundQuiverAlgebra, Path
from .reps import (
    Morphism,
    Representation,
    direct_sum,
    dual_rep,
    hom_basis,
    injective,
    is_indecomposable,
    is_isomorphic,
    kernel_of_morphism,
    minimal_projective_presentation,
    projective,
    projective_cover_map,
    validate,
)


def nakayama(alg: BoundQuiverAlgebra, f: Morphism,
             source_vertices: list[int], target_vertices: list[int]) -> Morphism:
    """Apply the Nakayama functor to a map between sums of standard projectives.

    ``source_vertices`` and ``target_vertices`` list the projective summands of
    f's source and target in block order; the blocks must literally be the
    standard projectives.  The result maps the corresponding sums of standard
    injectives, with nu P(i) = I(i).
    """
    if f.source != direct_sum(alg, [projective(alg, v) for v in source_vertices]):
        raise ValueError("not presented as a sum of standard projectives")
    if f.target != direct_sum(alg, [projective(alg, v) for v in target_vertices]):
        raise ValueError("not presented as a sum of standard projectives")

    src_inj = [injective(alg, v) for v in source_vertices]
    dst_inj = [injective(alg, v) for v in target_vertices]
    nu_src = direct_sum(alg, src_inj)
    nu_dst = direct_sum(alg, dst_inj)

    def proj_offsets(vertices, v):
        out = [0]
        for i in vertices:
            out.append(out[-1] + len(alg.path_basis(i, v)))
        return out

    def inj_offsets(vertices, v):
        out = [0]
        for i in vertices:
            out.append(out[-1] + len(alg.path_basis(v, i)))
        return out

    # generator coefficients: component P(i_k) -> P(j_l) is determined by the
    # image of the trivial path at i_k, a combination of basis paths j_l -> i_k
    components: list[list[dict[Path, Fraction]]] = []
    for l, j in enumerate(target_vertices):
        row = []
        for k, i in enumerate(source_vertices):
            src_off = proj_offsets(source_vertices, i)
            dst_off = proj_offsets(target_vertices, i)
            trivial = alg.path_basis(i, i).index(Path(i, (), i))
            col = src_off[k] + trivial
            block = f.block(i)
            paths = alg.path_basis(j, i)
            coeffs = {}
            for idx, p in enumerate(paths):
                c = block[dst_off[l] + idx, col]
                if c != 0:
                    coeffs[p] = Fraction(c)
            row.append(coeffs)
        components.append(row)

    blocks = []
    for v in range(1, alg.n + 1):
        total = la.zeros(nu_dst.dim(v), nu_src.dim(v))
        src_off = inj_offsets(source_vertices, v)
        dst_off = inj_offsets(target_vertices, v)
        for l, j in enumerate(target_vertices):
            into_j = alg.path_basis(v, j)
            for k, i in enumerate(source_vertices):
                into_i = alg.path_basis(v, i)
                index = {p: r for r, p in enumerate(into_i)}
                # matrix of (paths v -> j) -> (paths v -> i), append the
                # generator element; the injective-side component is its dual
                t = la.zeros(len(into_i), len(into_j))
                for col, q in enumerate(into_j):
                    for x, c in components[l][k].items():
                        for w, d in alg.concat(q, x).items():
                            t[index[w], col] += c * d
                total[dst_off[l]:dst_off[l + 1], src_off[k]:src_off[k + 1]] = t.T
        blocks.append(total)
    return Morphism(nu_src, nu_dst, blocks)


@dataclass
class TauResult:
    """tau M with the Nakayama-image presentation it was cut out of."""

    translate: Representation
    nu_p1: Representation
    nu_p0: Representation
    connecting: Morphism


def tau(m: Representation) -> TauResult:
    """The Auslander-Reiten translate, the kernel of nu P1 -> nu P0."""
    if m._tau is not None:
        return m._tau
    pres = minimal_projective_presentation(m)
    nu_f = nakayama(m.alg, pres.map, pres.p1_vertices, pres.p0_vertices)
    translate, _ = kernel_of_morphism(nu_f)
    result = TauResult(translate, nu_f.source, nu_f.target, nu_f)
    m._tau = result
    return result


def tau_minus(m: Representation) -> Representation:
    """The inverse translate, computed as the dual of tau over the opposite algebra."""
    op = m.alg.opposite()
    dual = dual_rep(op, m)
    translated = tau(dual).translate
    return dual_rep(m.alg, translated)


@dataclass
class RigidityVerdict:
    holds: bool
    witness: Optional[Morphism] = None  # a nonzero offending morphism on failure
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_tau_rigid(m: Representation) -> RigidityVerdict:
    """Whether Hom(M, tau M) = 0, with a nonzero morphism as witness when not."""
    maps = hom_basis(m, tau(m).translate)
    if maps:
        return RigidityVerdict(False, maps[0], "nonzero morphism into the translate")
    return RigidityVerdict(True)


def as_projective_sum(p: Representation) -> Optional[list[int]]:
    """Vertices with P isomorphic to the sum of their standard projectives, or None.

    The certificate is the projective cover: its kernel vanishes exactly when
    P is projective, and the cover map then exhibits the isomorphism.
    """
    if p.is_zero:
        return []
    data = projective_cover_map(p)
    return data.vertices if data.kernel.is_zero else None


def is_tau_rigid_pair(t: Representation, p: Representation) -> RigidityVerdict:
    """Whether (T, P) is a tau-rigid pair: T tau-rigid and Hom(P, T) = 0.

    Raises ValueError when P is not (certified) projective.
    """
    if as_projective_sum(p) is None:
        raise ValueError("second argument not projective")
    rigid = is_tau_rigid(t)
    if not rigid:
        return rigid
    maps = hom_basis(p, t)
    if maps:
        return RigidityVerdict(False, maps[0], "nonzero morphism from the projective part")
    return RigidityVerdict(True)


# ---------------------------------------------------------------------------
# support pairs


@dataclass
class SupportPair:
    """A basic pair (T, P) given by explicit lists of indecomposable summands."""

    alg: BoundQuiverAlgebra
    t_summands: list[Representation]
    p_summands: list[Representation]
    name: str = ""
    summand_names: Optional[list[str]] = None
    report: Optional["PairReport"] = field(default=None, compare=False)

    @property
    def summands(self) -> list[Representation]:
        return list(self.t_summands) + list(self.p_summands)

    @property
    def r(self) -> int:
        return len(self.t_summands)

    @property
    def t_module(self) -> Representation:
        return direct_sum(self.alg, self.t_summands)

    @property
    def p_module(self) -> Representation:
        return direct_sum(self.alg, self.p_summands)

    @property
    def verified(self) -> bool:
        return self.report is not None and self.report.status == "support tau-tilting"


@dataclass
class PairReport:
    """Outcome of verify_support_pair: a status plus the ordered check chain."""

    status: str
    checks: list[tuple[str, str, str]]  # (check name, "ok"/"fail"/"skipped", detail)
    n: int
    basic_certificate: dict[tuple[int, int], bool] = field(default_factory=dict)
    witness: Optional[Morphism] = None


_CHECK_ORDER = ["validation", "indecomposability", "basic", "projectivity",
                "tau-rigidity", "count"]

_FAIL_STATUS = {
    "validation": "failed: invalid summand",
    "indecomposability": "failed: summand not indecomposable",
    "basic": "failed: not basic",
    "projectivity": "failed: P summand not projective",
    "tau-rigidity": "failed: not a tau-rigid pair",
}


def verify_support_pair(pair: SupportPair) -> PairReport:
    """Run the support tau-tilting checks in order and attach the report.

    Status is "support tau-tilting", "tau-rigid pair only" (everything holds
    except the summand count), or "failed: ..." naming the first broken check.
    """
    checks: list[tuple[str, str, str]] = []
    certificate: dict[tuple[int, int], bool] = {}
    witness: Optional[Morphism] = None
    n = pair.alg.n
    summands = pair.summands
    failed: Optional[str] = None
    detail = ""

    def record(name: str, ok: bool, info: str = ""):
        checks.append((name, "ok" if ok else "fail", info))

    # validation
    problem = ""
    for k, s in enumerate(summands):
        if s.alg is not pair.alg:
            problem = f"summand {k + 1} lives over a different algebra"
            break
        bad = validate(s)
        if bad:
            problem = f"summand {k + 1}: {bad[0]}"
            break
    record("validation", not problem, problem)
    failed = "validation" if problem else None

    # indecomposability
    if failed is None:
        problem = ""
        for k, s in enumerate(summands):
            verdict = "no" if s.is_zero else is_indecomposable(s)
            if verdict != "yes":
                problem = f"summand {k + 1}: verdict {verdict}"
                break
        record("indecomposability", not problem, problem)
        failed = "indecomposability" if problem else None

    # basic: pairwise non-isomorphic
    if failed is None:
        problem = ""
        for k in range(len(summands)):
            for l in range(k + 1, len(summands)):
                iso = is_isomorphic(summands[k], summands[l])
                certificate[(k + 1, l + 1)] = iso
                if iso and not problem:
                    problem = f"summands {k + 1} and {l + 1} are isomorphic"
        record("basic", not problem, problem)
        failed = "basic" if problem else None

    # projectivity of the P part, summand by summand
    if failed is None:
        problem = ""
        for k, s in enumerate(pair.p_summands):
            if not any(is_isomorphic(s, projective(pair.alg, v))
                       for v in range(1, n + 1)
                       if projective(pair.alg, v).dims == s.dims):
                problem = f"P summand {k + 1} matches no standard projective"
                break
        record("projectivity", not problem, problem)
        failed = "projectivity" if problem else None

    # tau-rigidity of the assembled pair
    if failed is None:
        verdict = is_tau_rigid_pair(pair.t_module, pair.p_module)
        if not verdict:
            witness = verdict.witness
            detail = verdict.reason
        record("tau-rigidity", verdict.holds, detail)
        failed = None if verdict.holds else "tau-rigidity"

    # summand count
    count_ok = None
    if failed is None:
        count_ok = len(summands) == n
        record("count", count_ok, f"{len(summands)} summands, {n} simples")
    else:
        for name in _CHECK_ORDER[_CHECK_ORDER.index(failed) + 1:]:
            checks.append((name, "skipped", ""))

    if failed is not None:
        status = _FAIL_STATUS[failed]
    elif count_ok:
        status = "support tau-tilting"
    else:
        status = "tau-rigid pair only"

    report = PairReport(status, checks, n, certificate, witness)
    pair.report = report
    return report
