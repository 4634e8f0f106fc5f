import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taumatch.bijection import (
    NoPerfectMatchingError,
    VerificationError,
    all_matchings,
    build_report,
    candidate_sets,
    classify_edge,
    find_matching,
    hall_check,
    restricted_sets,
)
from taumatch.reps import simple
from taumatch.tau import SupportPair


@pytest.fixture(scope="module")
def fork_pairs(corpus):
    by_name = {p.name: p for p in corpus["fork"].pairs}
    return by_name["left"], by_name["right"]


@pytest.fixture(scope="module")
def fork_cands(fork_pairs):
    return candidate_sets(*fork_pairs)


def test_fork_candidate_sets(fork_cands):
    assert fork_cands.sets == [{1, 2, 3}, {3}, {1, 2}]


def test_fork_edge_2_3_via_c_only(fork_pairs):
    label = classify_edge(*fork_pairs, 2, 3)
    assert (label.a, label.b, label.c, label.d) == (False, False, True, False)
    assert "c" in label.witnesses and not label.witnesses["c"].is_zero


def test_fork_edge_1_3_is_isomorphism(fork_pairs):
    label = classify_edge(*fork_pairs, 1, 3)
    assert label.a
    assert "a" in label.witnesses


def test_fork_edge_3_3_unlabeled(fork_pairs):
    label = classify_edge(*fork_pairs, 3, 3)
    assert not label.any


def test_fork_restricted_without_c(fork_cands):
    g = restricted_sets(fork_cands, {"c"})
    assert g == [{1, 2, 3}, set(), {1, 2}]


def test_restricted_drop_nothing_is_identity(fork_cands):
    assert restricted_sets(fork_cands, set()) == fork_cands.sets


def test_restricted_rejects_ab(fork_cands):
    with pytest.raises(ValueError):
        restricted_sets(fork_cands, {"a"})


def test_swapped_fork_restricted_without_d(corpus):
    by_name = {p.name: p for p in corpus["fork"].pairs}
    cands = candidate_sets(by_name["right"], by_name["left"])
    h = restricted_sets(cands, {"d"})
    union = h[0] | h[1] | h[2]
    assert 2 not in union
    assert 3 in h[0] and 1 in h[1] and 1 in h[2]
    assert all(hi for hi in h)
    assert union != {1, 2, 3}


def test_fork_hall_ok(fork_cands):
    assert hall_check(fork_cands)


def test_hall_fails_on_dropped_d_sets(corpus):
    # the dropped-d candidate sets of the swapped fork pairs miss index 2
    # entirely, so they violate the Hall condition as a pseudo-input
    by_name = {p.name: p for p in corpus["fork"].pairs}
    cands = candidate_sets(by_name["right"], by_name["left"])
    h = restricted_sets(cands, {"d"})
    result = hall_check(h)
    assert not result.ok
    union = set().union(*(h[k - 1] for k in result.deficient))
    assert len(union) < len(result.deficient)
    assert 2 not in union


def test_hall_pigeonhole_violation():
    result = hall_check([{1}, {1}])
    assert not result
    assert result.deficient == [1, 2]


def test_fork_matching_forces_2_to_3(fork_cands):
    s = find_matching(fork_cands)
    assert s[1] == 3
    assert s in ([2, 3, 1], [1, 3, 2])


def test_identity_candidates_give_identity():
    from taumatch.bijection import CandidateSets, EdgeConditions
    n = 4
    labels = {(i, j): EdgeConditions(b=(i == j)) for i in range(1, n + 1)
              for j in range(1, n + 1)}
    cands = CandidateSets(n, [{i} for i in range(1, n + 1)], labels)
    assert find_matching(cands) == [1, 2, 3, 4]


def test_matching_failure_reports_deficiency():
    from taumatch.bijection import CandidateSets, EdgeConditions
    labels = {(i, j): EdgeConditions(b=(j == 1)) for i in range(1, 3) for j in range(1, 3)}
    cands = CandidateSets(2, [{1}, {1}], labels)
    with pytest.raises(NoPerfectMatchingError) as err:
        find_matching(cands)
    assert err.value.deficient == [1, 2]


def test_fork_all_matchings(fork_cands):
    enum = all_matchings(fork_cands)
    assert enum.perms == [[1, 3, 2], [2, 3, 1]]
    assert not enum.truncated
    assert find_matching(fork_cands) in enum.perms
    # the common summand is never fixed: s(1) != 3 throughout
    assert all(s[0] != 3 for s in enum.perms)


def test_all_matchings_unconstrained_counts():
    sets = [{1, 2, 3}] * 3
    enum = all_matchings(sets)
    assert len(enum.perms) == 6


def test_all_matchings_truncation():
    sets = [{1, 2, 3}] * 3
    enum = all_matchings(sets, limit=4)
    assert len(enum.perms) == 4 and enum.truncated


def test_all_matchings_size_guard():
    sets = [set(range(1, 12))] * 11
    with pytest.raises(ValueError):
        all_matchings(sets)


def test_twocycle_matching_swaps(corpus):
    by_name = {p.name: p for p in corpus["twocycle"].pairs}
    cands = candidate_sets(by_name["left"], by_name["right"])
    assert find_matching(cands) == [2, 1]
    label = classify_edge(by_name["left"], by_name["right"], 2, 1)
    assert label.d
    label = classify_edge(by_name["left"], by_name["right"], 1, 2)
    assert label.c


def test_loop_source_candidates(corpus):
    by_name = {p.name: p for p in corpus["loop_source"].pairs}
    cands = candidate_sets(by_name["left"], by_name["right"])
    assert cands.sets == [{1, 2}, {1, 2}]
    enum = all_matchings(cands)
    assert [1, 2] in enum.perms  # the identity stays available


def test_loop_sink_unique_matching(corpus):
    by_name = {p.name: p for p in corpus["loop_sink"].pairs}
    cands = candidate_sets(by_name["left"], by_name["right"])
    assert cands.sets[0] == {2}
    enum = all_matchings(cands)
    assert enum.perms == [[2, 1]]
    assert find_matching(cands) == [2, 1]


def test_self_pairing_matches_identically(corpus):
    pair = corpus["fork"].pairs[0]
    report = build_report(pair, pair)
    assert report.matching == [1, 2, 3]
    assert report.matched_conditions == ["a", "a", "a"]
    for i in range(1, 4):
        assert i in report.candidates.sets[i - 1]


def test_classify_requires_verification(fork_alg, corpus):
    fresh = SupportPair(fork_alg, [simple(fork_alg, 2)], [])
    with pytest.raises(ValueError):
        classify_edge(fresh, corpus["fork"].pairs[0], 1, 1)


def test_cross_algebra_pairs_rejected(corpus):
    with pytest.raises(ValueError):
        candidate_sets(corpus["fork"].pairs[0], corpus["twocycle"].pairs[0])


def test_build_report_rejects_failing_pair(fork_alg):
    bad = SupportPair(fork_alg, [simple(fork_alg, 1), simple(fork_alg, 1)], [])
    good = SupportPair(fork_alg, [simple(fork_alg, 2), simple(fork_alg, 3)],
                       [__import__("taumatch.reps", fromlist=["projective"]).projective(fork_alg, 1)])
    with pytest.raises(VerificationError):
        build_report(bad, good)


def test_report_carries_hall_and_conditions(fork_pairs):
    report = build_report(*fork_pairs, enumerate_all=True, drop={"c"})
    assert report.hall.ok
    assert report.enumeration is not None and len(report.enumeration.perms) == 2
    assert report.restricted == (("c",), [{1, 2, 3}, set(), {1, 2}])
    for i, j in enumerate(report.matching, start=1):
        assert report.candidates.labels[(i, j)].any


def test_transpose_symmetry(corpus):
    for key in ("fork", "twocycle", "loop_sink"):
        pairs = corpus[key].pairs[:2]
        fwd = candidate_sets(pairs[0], pairs[1])
        bwd = candidate_sets(pairs[1], pairs[0])
        n = fwd.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert (j in fwd.sets[i - 1]) == (i in bwd.sets[j - 1])


def test_c_d_edges_touch_projective_parts(corpus):
    for key, group in corpus.items():
        left, right = group.pairs[0], group.pairs[1]
        cands = candidate_sets(left, right)
        for (i, j), label in cands.labels.items():
            letters = label.letters()
            if letters == ["c"]:
                assert j > right.r
            if letters == ["d"]:
                assert i > left.r


# --- randomized matching properties ----------------------------------------


@st.composite
def random_sets(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    return [set(draw(st.lists(st.integers(min_value=1, max_value=n), unique=True)))
            for _ in range(n)]


def brute_force_hall(sets):
    n = len(sets)
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            union = set().union(*(sets[k] for k in combo))
            if len(union) < size:
                return False
    return True


def brute_force_matchings(sets):
    n = len(sets)
    return [list(p) for p in itertools.permutations(range(1, n + 1))
            if all(p[i] in sets[i] for i in range(n))]


@settings(max_examples=120, deadline=None)
@given(random_sets())
def test_hall_check_matches_brute_force(sets):
    result = hall_check(sets)
    assert result.ok == brute_force_hall(sets)
    if not result.ok:
        union = set().union(*(sets[k - 1] for k in result.deficient))
        assert len(union) < len(result.deficient)


@settings(max_examples=120, deadline=None)
@given(random_sets())
def test_all_matchings_matches_brute_force(sets):
    enum = all_matchings(sets)
    assert sorted(enum.perms) == sorted(brute_force_matchings(sets))
