"""Matching the summands of two verified support tau-tilting pairs.

For pairs (T, P) and (T', P') with summands X_1..X_n (T first, then P) and
Y_1..Y_n, every edge (i, j) is classified by four conditions:

  a: X_i is isomorphic to Y_j
  b: X_i + Y_j is not tau-rigid
  c: Y_j is a P'-summand and (X_i, Y_j) is not a tau-rigid pair
  d: X_i is a P-summand and (Y_j, X_i) is not a tau-rigid pair

The candidate set of i collects the j with at least one condition true.  A
perfect matching inside the candidate sets always exists for verified pairs;
it is found by augmenting paths and can be enumerated exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .reps import Morphism, direct_sum, iso_witness
from .tau import SupportPair, is_tau_rigid, is_tau_rigid_pair, verify_support_pair

CONDITION_LETTERS = ("a", "b", "c", "d")


class BijectionError(Exception):
    pass


class VerificationError(BijectionError):
    """A pair handed to the matcher failed support tau-tilting verification."""


class NoPerfectMatchingError(BijectionError):
    def __init__(self, deficient: list[int]):
        super().__init__(f"no perfect matching; deficient index subset {deficient}")
        self.deficient = deficient


@dataclass
class EdgeConditions:
    """Flags and witnesses for one (left summand, right summand) edge."""

    a: bool = False
    b: bool = False
    c: bool = False
    d: bool = False
    witnesses: dict[str, Morphism] = field(default_factory=dict)

    @property
    def any(self) -> bool:
        return self.a or self.b or self.c or self.d

    def letters(self) -> list[str]:
        return [l for l in CONDITION_LETTERS if getattr(self, l)]


@dataclass
class CandidateSets:
    """Per-left-summand candidate sets with the labels of all n^2 edges."""

    n: int
    sets: list[set[int]]
    labels: dict[tuple[int, int], EdgeConditions]

    def candidates(self, i: int) -> set[int]:
        return self.sets[i - 1]


@dataclass
class HallResult:
    ok: bool
    deficient: Optional[list[int]] = None

    def __bool__(self) -> bool:
        return self.ok


def _require_verified(left: SupportPair, right: SupportPair):
    if not (left.verified and right.verified):
        raise ValueError("pairs not verified")
    if left.alg is not right.alg:
        raise ValueError("pairs live over different algebras")


def classify_edge(left: SupportPair, right: SupportPair, i: int, j: int) -> EdgeConditions:
    """Label the edge between the i-th left and j-th right summand.

    Summands are indexed 1..n in declaration order, T summands first.
    """
    _require_verified(left, right)
    n = left.alg.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("summand index out of range")
    x = left.summands[i - 1]
    y = right.summands[j - 1]
    out = EdgeConditions()

    iso = iso_witness(x, y)
    if iso is not None:
        out.a = True
        out.witnesses["a"] = iso

    rigidity = is_tau_rigid(direct_sum(left.alg, [x, y]))
    if not rigidity:
        out.b = True
        out.witnesses["b"] = rigidity.witness

    if j > right.r:  # Y_j belongs to the projective part P'
        verdict = is_tau_rigid_pair(x, y)
        if not verdict:
            out.c = True
            out.witnesses["c"] = verdict.witness

    if i > left.r:  # X_i belongs to the projective part P
        verdict = is_tau_rigid_pair(y, x)
        if not verdict:
            out.d = True
            out.witnesses["d"] = verdict.witness
    return out


def candidate_sets(left: SupportPair, right: SupportPair) -> CandidateSets:
    """Classify all n^2 edges and collect the candidate sets."""
    _require_verified(left, right)
    n = left.alg.n
    labels = {}
    sets: list[set[int]] = []
    for i in range(1, n + 1):
        members = set()
        for j in range(1, n + 1):
            label = classify_edge(left, right, i, j)
            labels[(i, j)] = label
            if label.any:
                members.add(j)
        sets.append(members)
    return CandidateSets(n, sets, labels)


def restricted_sets(cands: CandidateSets, drop: Iterable[str]) -> list[set[int]]:
    """Candidate sets recomputed from the retained condition flags only."""
    drop = set(drop)
    bad = drop - {"c", "d"}
    if bad:
        raise ValueError(f"only conditions c and d can be dropped, not {sorted(bad)}")
    kept = [l for l in CONDITION_LETTERS if l not in drop]
    out = []
    for i in range(1, cands.n + 1):
        out.append({j for j in range(1, cands.n + 1)
                    if any(getattr(cands.labels[(i, j)], l) for l in kept)})
    return out


def _max_matching(sets: Sequence[set[int]], n: int,
                  seeds: Optional[dict[int, int]] = None):
    """Deterministic augmenting-path matching.

    Returns (match_left, deficient): ``deficient`` is None when the matching
    is perfect, otherwise a subset of left indices violating the Hall
    condition, extracted from the failed alternating search.
    """
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}
    if seeds:
        for i, j in seeds.items():
            if j in sets[i - 1] and j not in match_right and i not in match_left:
                match_left[i] = j
                match_right[j] = i

    def augment(i: int, visited: set[int]) -> bool:
        # unused candidates first (largest first), rerouting only as a fallback
        ordered = sorted(sets[i - 1], reverse=True)
        for j in [j for j in ordered if j not in match_right] + \
                 [j for j in ordered if j in match_right]:
            if j in visited:
                continue
            visited.add(j)
            if j not in match_right or augment(match_right[j], visited):
                match_left[i] = j
                match_right[j] = i
                return True
        return False

    for i in range(1, n + 1):
        if i in match_left:
            continue
        visited: set[int] = set()
        if not augment(i, visited):
            deficient = sorted({i} | {match_right[j] for j in visited})
            return match_left, deficient
    return match_left, None


def hall_check(cands: CandidateSets | Sequence[set[int]]) -> HallResult:
    """Verify every union of t candidate sets has at least t members.

    Checked through maximum matching; on failure a violating index subset is
    extracted from the final alternating search.
    """
    sets = cands.sets if isinstance(cands, CandidateSets) else list(cands)
    _, deficient = _max_matching(sets, len(sets))
    return HallResult(deficient is None, deficient)


def _iso_seeds(cands: CandidateSets) -> dict[int, int]:
    seeds = {}
    used = set()
    for i in range(1, cands.n + 1):
        for j in sorted(cands.sets[i - 1]):
            if cands.labels[(i, j)].a and j not in used:
                seeds[i] = j
                used.add(j)
                break
    return seeds


def find_matching(cands: CandidateSets) -> list[int]:
    """A permutation s with s(i) always a candidate of i, as a 1-based list.

    Deterministic tie-breaking: isomorphism edges are matched first where
    possible, then augmenting paths complete the matching, scanning left
    summands in increasing order and preferring unused candidates (largest
    first) before rerouting earlier matches.
    """
    match_left, deficient = _max_matching(cands.sets, cands.n, seeds=_iso_seeds(cands))
    if deficient is not None:
        raise NoPerfectMatchingError(deficient)
    return [match_left[i] for i in range(1, cands.n + 1)]


@dataclass
class MatchingEnumeration:
    perms: list[list[int]]
    truncated: bool


def all_matchings(cands: CandidateSets | Sequence[set[int]],
                  limit: Optional[int] = None, max_n: int = 10) -> MatchingEnumeration:
    """Every permutation with s(i) in the candidate set of i, lexicographically.

    Exhaustive backtracking; refuses to run for n > ``max_n``.  With ``limit``
    the enumeration stops early and the truncation flag is set.
    """
    sets = cands.sets if isinstance(cands, CandidateSets) else list(cands)
    n = len(sets)
    if n > max_n:
        raise ValueError("n too large for exhaustive enumeration")
    perms: list[list[int]] = []
    used: set[int] = set()
    current: list[int] = []
    truncated = False

    def search(i: int) -> bool:
        nonlocal truncated
        if i > n:
            perms.append(list(current))
            if limit is not None and len(perms) >= limit:
                truncated = True
                return False
            return True
        for j in sorted(sets[i - 1]):
            if j in used:
                continue
            used.add(j)
            current.append(j)
            keep_going = search(i + 1)
            current.pop()
            used.remove(j)
            if not keep_going:
                return False
        return True

    search(1)
    return MatchingEnumeration(perms, truncated)


@dataclass
class BijectionReport:
    """The full outcome: labels, candidate sets, one matching, and extras."""

    left: SupportPair
    right: SupportPair
    candidates: CandidateSets
    hall: HallResult
    matching: list[int]
    matched_conditions: list[str]
    enumeration: Optional[MatchingEnumeration] = None
    restricted: Optional[tuple[tuple[str, ...], list[set[int]]]] = None


def build_report(left: SupportPair, right: SupportPair, *,
                 enumerate_all: bool = False,
                 drop: Iterable[str] = (),
                 limit: Optional[int] = None) -> BijectionReport:
    """Verify both pairs, classify all edges, and produce one matching.

    The matched condition reported for each i is the first true flag of the
    matched edge in the order a, b, c, d.  ``drop`` recomputes restricted
    candidate sets without the given conditions (subset of {c, d});
    ``enumerate_all`` adds the exhaustive permutation list.
    """
    for side, pair in (("left", left), ("right", right)):
        if pair.report is None:
            verify_support_pair(pair)
        if not pair.verified:
            raise VerificationError(
                f"{side} pair is not support tau-tilting ({pair.report.status})")
    if left.alg is not right.alg:
        raise ValueError("pairs live over different algebras")

    cands = candidate_sets(left, right)
    hall = hall_check(cands)
    matching = find_matching(cands)
    chosen = []
    for i, j in enumerate(matching, start=1):
        letters = cands.labels[(i, j)].letters()
        assert letters, "matched edge carries no condition"
        chosen.append(letters[0])

    enumeration = all_matchings(cands, limit=limit) if enumerate_all else None
    restricted = None
    drop = tuple(sorted(drop))
    if drop:
        restricted = (drop, restricted_sets(cands, drop))
    return BijectionReport(left, right, cands, hall, matching, chosen,
                           enumeration, restricted)
