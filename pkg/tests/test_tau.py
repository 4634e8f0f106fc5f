import pytest

from taumatch import linalg as la
from taumatch.reps import (
    Representation,
    direct_sum,
    identity_morphism,
    injective,
    is_indecomposable,
    is_isomorphic,
    projective,
    simple,
    zero_morphism,
    zero_rep,
)
from taumatch.tau import (
    SupportPair,
    as_projective_sum,
    is_tau_rigid,
    is_tau_rigid_pair,
    nakayama,
    tau,
    tau_minus,
    verify_support_pair,
)


def module_11(alg):
    return Representation(alg, [2, 0], {"a": la.mat([[0, 0], [1, 0]])})


# --- the Nakayama functor ---------------------------------------------------


def test_nakayama_identity_maps_to_identity(fork_alg, loop_sink_alg):
    for alg in (fork_alg, loop_sink_alg):
        for i in range(1, alg.n + 1):
            p = projective(alg, i)
            nu = nakayama(alg, identity_morphism(p), [i], [i])
            assert nu.source == injective(alg, i)
            assert nu == identity_morphism(injective(alg, i))


def test_nakayama_zero_maps_to_zero(fork_alg):
    f = zero_morphism(projective(fork_alg, 2), projective(fork_alg, 1))
    nu = nakayama(fork_alg, f, [2], [1])
    assert nu.is_zero
    assert nu.source == injective(fork_alg, 2)
    assert nu.target == injective(fork_alg, 1)


def test_nakayama_rejects_non_standard_presentations(fork_alg):
    m = simple(fork_alg, 1)
    with pytest.raises(ValueError):
        nakayama(fork_alg, identity_morphism(m), [1], [1])


# --- the translate ----------------------------------------------------------


def test_tau_of_projectives_is_zero(fork_alg, twocycle_alg, loop_source_alg, loop_sink_alg):
    for alg in (fork_alg, twocycle_alg, loop_source_alg, loop_sink_alg):
        for i in range(1, alg.n + 1):
            assert tau(projective(alg, i)).translate.is_zero


def test_tau_of_jordan_module_is_simple(loop_source_alg):
    # tau(1/1) = 2
    t = tau(module_11(loop_source_alg)).translate
    assert t.dims == (0, 1)
    assert is_isomorphic(t, simple(loop_source_alg, 2))


def test_tau_of_simple_1_loop_sink(loop_sink_alg):
    # tau(1) = 2/2
    t = tau(simple(loop_sink_alg, 1)).translate
    assert t.dims == (0, 2)
    assert is_isomorphic(t, projective(loop_sink_alg, 2))


def test_tau_of_13_fork(fork_alg):
    t = tau(injective(fork_alg, 3)).translate
    assert t.dims == (0, 1, 0)
    assert is_isomorphic(t, simple(fork_alg, 2))


def test_tau_of_12_fork(fork_alg):
    t = tau(injective(fork_alg, 2)).translate
    assert is_isomorphic(t, simple(fork_alg, 3))


def test_tau_swaps_simples_twocycle(twocycle_alg):
    assert is_isomorphic(tau(simple(twocycle_alg, 1)).translate, simple(twocycle_alg, 2))
    assert is_isomorphic(tau(simple(twocycle_alg, 2)).translate, simple(twocycle_alg, 1))


def test_tau_of_source_simple_fork(fork_alg):
    # kernel of I(2) + I(3) -> I(1): total dimension vector (1,1,1)
    t = tau(simple(fork_alg, 1)).translate
    assert t.dims == (1, 1, 1)
    assert is_isomorphic(t, projective(fork_alg, 1))


def test_tau_result_carries_presentation(loop_sink_alg):
    r = tau(simple(loop_sink_alg, 1))
    assert r.nu_p1 == injective(loop_sink_alg, 2)
    assert r.nu_p0 == injective(loop_sink_alg, 1)
    assert r.connecting.source == r.nu_p1


# --- the inverse translate --------------------------------------------------


def test_tau_minus_kills_injectives(fork_alg, twocycle_alg, loop_source_alg, loop_sink_alg):
    for alg in (fork_alg, twocycle_alg, loop_source_alg, loop_sink_alg):
        for i in range(1, alg.n + 1):
            assert tau_minus(injective(alg, i)).is_zero


def test_tau_minus_inverts_tau(fork_alg, twocycle_alg, loop_source_alg, loop_sink_alg):
    nonprojectives = [
        simple(fork_alg, 1), injective(fork_alg, 2), injective(fork_alg, 3),
        simple(twocycle_alg, 1), simple(twocycle_alg, 2),
        module_11(loop_source_alg),
        simple(loop_sink_alg, 1),
    ]
    for m in nonprojectives:
        t = tau(m).translate
        assert not t.is_zero
        assert is_indecomposable(t) == "yes"
        back = tau_minus(t)
        assert is_isomorphic(back, m)


def test_tau_minus_examples(loop_source_alg, loop_sink_alg):
    assert is_isomorphic(tau_minus(projective(loop_sink_alg, 2)), simple(loop_sink_alg, 1))
    assert is_isomorphic(tau_minus(simple(loop_source_alg, 2)), module_11(loop_source_alg))


# --- rigidity ---------------------------------------------------------------


def test_projectives_are_rigid(fork_alg, loop_sink_alg):
    for alg in (fork_alg, loop_sink_alg):
        for i in range(1, alg.n + 1):
            assert is_tau_rigid(projective(alg, i))


def test_rigid_sum_fork(fork_alg):
    # 1/2 + 2 is tau-rigid
    m = direct_sum(fork_alg, [injective(fork_alg, 2), simple(fork_alg, 2)])
    assert is_tau_rigid(m)


def test_non_rigid_sum_fork(fork_alg):
    # 2 + 1 is not tau-rigid
    m = direct_sum(fork_alg, [simple(fork_alg, 2), simple(fork_alg, 1)])
    verdict = is_tau_rigid(m)
    assert not verdict
    assert verdict.witness is not None and not verdict.witness.is_zero


def test_pair_12_s2_fails_fork(fork_alg):
    verdict = is_tau_rigid_pair(injective(fork_alg, 2), simple(fork_alg, 2))
    assert not verdict
    assert verdict.witness is not None


def test_pair_fails_loop_sink(loop_sink_alg):
    # (1/2, 2/2) is not a tau-rigid pair
    verdict = is_tau_rigid_pair(projective(loop_sink_alg, 1), projective(loop_sink_alg, 2))
    assert not verdict


def test_pair_with_zero_projective(fork_alg):
    assert is_tau_rigid_pair(injective(fork_alg, 2), zero_rep(fork_alg))


def test_pair_rejects_non_projective(fork_alg):
    with pytest.raises(ValueError):
        is_tau_rigid_pair(projective(fork_alg, 1), simple(fork_alg, 1))


def test_as_projective_sum(fork_alg):
    p = direct_sum(fork_alg, [projective(fork_alg, 2), projective(fork_alg, 1)])
    assert sorted(as_projective_sum(p) or []) == [1, 2]
    assert as_projective_sum(zero_rep(fork_alg)) == []
    assert as_projective_sum(simple(fork_alg, 1)) is None


# --- support pair verification ----------------------------------------------


def test_fork_left_pair_verifies(fork_alg):
    pair = SupportPair(fork_alg, [simple(fork_alg, 2), injective(fork_alg, 2)],
                       [simple(fork_alg, 3)])
    assert verify_support_pair(pair).status == "support tau-tilting"
    assert pair.verified


def test_fork_right_pair_verifies(fork_alg):
    pair = SupportPair(fork_alg, [injective(fork_alg, 3), simple(fork_alg, 1)],
                       [simple(fork_alg, 2)])
    assert verify_support_pair(pair).status == "support tau-tilting"


def test_loop_sink_projectives_pair(loop_sink_alg):
    pair = SupportPair(loop_sink_alg,
                       [projective(loop_sink_alg, 1), projective(loop_sink_alg, 2)], [])
    assert verify_support_pair(pair).status == "support tau-tilting"


def test_repeated_summand_is_not_basic(fork_alg):
    pair = SupportPair(fork_alg, [simple(fork_alg, 1), simple(fork_alg, 1)], [])
    report = verify_support_pair(pair)
    assert report.status == "failed: not basic"
    assert ("basic", "fail", "summands 1 and 2 are isomorphic") in report.checks


def test_too_few_summands_is_rigid_only(fork_alg):
    pair = SupportPair(fork_alg, [simple(fork_alg, 2), simple(fork_alg, 3)], [])
    report = verify_support_pair(pair)
    assert report.status == "tau-rigid pair only"


def test_nonrigid_pair_fails(fork_alg):
    pair = SupportPair(fork_alg, [simple(fork_alg, 1), simple(fork_alg, 2)],
                       [simple(fork_alg, 3)])
    report = verify_support_pair(pair)
    assert report.status == "failed: not a tau-rigid pair"
    assert report.witness is not None


def test_nonprojective_p_summand_fails(fork_alg):
    pair = SupportPair(fork_alg, [simple(fork_alg, 2)], [injective(fork_alg, 2)])
    report = verify_support_pair(pair)
    assert report.status == "failed: P summand not projective"


def test_zero_summand_fails_indecomposability(fork_alg):
    pair = SupportPair(fork_alg, [zero_rep(fork_alg)], [])
    report = verify_support_pair(pair)
    assert report.status == "failed: summand not indecomposable"


def test_empty_t_full_p_pair(twocycle_alg):
    pair = SupportPair(twocycle_alg, [],
                       [projective(twocycle_alg, 1), projective(twocycle_alg, 2)])
    assert verify_support_pair(pair).status == "support tau-tilting"


def test_summand_bound_never_exceeded(fork_alg):
    # a basic 4-summand candidate over a 3-simple algebra never verifies rigid
    pair = SupportPair(fork_alg,
                       [projective(fork_alg, 1), simple(fork_alg, 2), simple(fork_alg, 3),
                        injective(fork_alg, 2)], [])
    report = verify_support_pair(pair)
    assert report.status.startswith("failed")
