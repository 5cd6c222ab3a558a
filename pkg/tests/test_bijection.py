import doctest
from itertools import permutations

import pytest

from permshuffle import bijection
from permshuffle.bijection import (
    CanonicalizationTrace,
    ShuffleFactorization,
    anchors,
    canonicalize,
    canonicalize_with_bijection,
    decomposition_identities_hold,
    factorize,
    transport,
    transport_inverse,
)
from permshuffle.canonical import classify, rebalance
from permshuffle.core import Permutation, from_word, run_profile, stat_bundle
from permshuffle.shuffles import Distribution, enumerate_shuffles, shuffle_count
from permshuffle.stats import get_statistic

from oracles import is_subsequence

PI = from_word((6, 3, 5, 1, 2, 7, 4))
PI_ALT = from_word((6, 1, 4, 5, 2, 7, 3))
SIGMA = from_word((11, 8, 9, 10))
TAU = from_word((6, 3, 11, 8, 5, 9, 1, 2, 7, 10, 4))
TAU_IMAGE = from_word((6, 1, 4, 11, 8, 5, 9, 2, 7, 10, 3))

RHO = from_word((7, 4, 2, 6, 3, 1, 5))
RHO_ALT = from_word((7, 4, 3, 2, 6, 1, 5))
TAU2 = from_word((11, 7, 4, 8, 2, 10, 6, 3, 9, 12, 1, 5))
TAU2_IMAGE = from_word((11, 7, 4, 8, 3, 10, 2, 9, 12, 6, 1, 5))

TRIPLE = get_statistic("udr_pk_des")


def key3(p):
    b = stat_bundle(p)
    return b.udr, b.pk, b.des


def sigma_part(tau, p):
    return tuple(v for v in tau.values if v not in p.ground_set())


def test_doctests():
    failed, attempted = doctest.testmod(bijection)
    assert attempted > 0
    assert failed == 0


def test_anchors_frozen():
    assert anchors(PI, 4) == (2, 4)
    assert anchors(RHO, 3) == (3, 5)


def test_anchors_rejects_short_or_out_of_range_runs():
    with pytest.raises(ValueError):
        anchors(from_word((6, 5, 3, 4, 7, 9, 2)), 3)
    with pytest.raises(ValueError):
        anchors(PI, 2)
    with pytest.raises(ValueError):
        anchors(PI, 6)


def test_factorize_first_golden():
    f = factorize(TAU, PI, 4)
    assert f.tau_a == (6,)
    assert (f.anchor_i, f.anchor_j) == (2, 4)
    assert f.blocks == ((11, 8), (9,), ())
    assert f.tau_c == (7, 10, 4)
    assert f.nonempty_indices == (1, 2)
    assert not f.last_block_occupied
    assert f.reassemble(PI) == TAU.values


def test_factorize_second_golden():
    f = factorize(TAU2, RHO, 3)
    assert f.tau_a == (11, 7, 4, 8)
    assert (f.anchor_i, f.anchor_j) == (3, 5)
    assert f.blocks == ((10,), (), (9, 12))
    assert f.tau_c == (5,)
    assert f.nonempty_indices == (1, 3)
    assert f.last_block_occupied
    assert f.reassemble(RHO) == TAU2.values


def test_factorize_of_the_base_word_itself():
    f = factorize(PI, PI, 4)
    assert f.tau_a == (6,)
    assert f.blocks == ((), (), ())
    assert f.tau_c == (7, 4)
    assert f.reassemble(PI) == PI.values


def test_factorize_rejects_non_shuffles():
    with pytest.raises(ValueError):
        factorize(from_word((1, 2, 3)), PI, 4)
    with pytest.raises(ValueError):
        factorize(from_word((6, 5, 3, 1, 2, 7, 4)), PI, 4)


def test_transport_goldens():
    assert transport(TAU, PI, PI_ALT, 4) == TAU_IMAGE
    assert transport(TAU2, RHO, RHO_ALT, 3) == TAU2_IMAGE


def test_transport_inverse_goldens():
    assert transport_inverse(TAU_IMAGE, PI, PI_ALT, 4) == TAU
    assert transport_inverse(TAU2_IMAGE, RHO, RHO_ALT, 3) == TAU2


def test_transport_requires_a_rebalance_member():
    with pytest.raises(ValueError):
        transport(TAU, PI, PI, 4)
    with pytest.raises(ValueError):
        transport(TAU, PI, from_word((7, 6, 5, 4, 3, 2, 1)), 4)


def test_transport_on_empty_interleave_is_the_relabeling():
    assert transport(PI, PI, PI_ALT, 4) == PI_ALT
    assert transport(RHO, RHO, RHO_ALT, 3) == RHO_ALT


def exhaustive_transport_check(p, p_prime, ell, sigma):
    space = list(enumerate_shuffles(p, sigma))
    images = []
    for tau in space:
        out = transport(tau, p, p_prime, ell)
        assert is_subsequence(list(p_prime.values), list(out.values))
        assert sigma_part(out, p_prime) == sigma.values
        assert key3(out) == key3(tau)
        assert transport_inverse(out, p, p_prime, ell) == tau
        images.append(out)
    assert len(set(images)) == len(space) == shuffle_count(len(p), len(sigma))
    assert set(images) == set(enumerate_shuffles(p_prime, sigma))


def test_transport_bijection_worked_window():
    exhaustive_transport_check(PI, PI_ALT, 4, SIGMA)
    exhaustive_transport_check(PI, rebalance(PI, 4), 4, SIGMA)


def test_transport_bijection_second_window():
    sigma = from_word((10, 8, 9, 12, 11))
    exhaustive_transport_check(RHO, RHO_ALT, 3, sigma)
    exhaustive_transport_check(RHO, rebalance(RHO, 3), 3, sigma)


def test_inverse_is_a_two_sided_inverse():
    for tau_prime in enumerate_shuffles(PI_ALT, SIGMA):
        back = transport_inverse(tau_prime, PI, PI_ALT, 4)
        assert transport(back, PI, PI_ALT, 4) == tau_prime


def test_decomposition_identities_on_goldens():
    f1 = factorize(TAU, PI, 4)
    assert run_profile(PI).run_ascends(4) and not f1.last_block_occupied
    assert decomposition_identities_hold(TAU, PI, 4)
    f2 = factorize(TAU2, RHO, 3)
    assert not run_profile(RHO).run_ascends(3) and f2.last_block_occupied
    assert decomposition_identities_hold(TAU2, RHO, 3)


def test_decomposition_identities_exhaustive_windows():
    for p, ell, sigma in (
        (PI, 4, SIGMA),
        (RHO, 3, from_word((10, 8, 9, 12, 11))),
    ):
        for tau in enumerate_shuffles(p, sigma):
            assert decomposition_identities_hold(tau, p, ell)


def test_small_exhaustive_sweep():
    sigmas = [from_word(()), from_word((6, 7)), from_word((7, 6))]
    for vals in permutations(range(1, 6)):
        p = Permutation(vals)
        prof = run_profile(p)
        for ell in range(3, prof.b + 1):
            if prof.lengths[ell - 1] < 3:
                continue
            p_prime = rebalance(p, ell)
            for sigma in sigmas:
                exhaustive_transport_check(p, p_prime, ell, sigma)
                for tau in enumerate_shuffles(p, sigma):
                    assert decomposition_identities_hold(tau, p, ell)


def test_canonicalize_zero_steps_when_already_canonical():
    p = from_word((6, 5, 3, 4, 7, 9, 2))
    trace = canonicalize(p)
    assert trace.steps == ()
    assert trace.final == p
    assert trace.serialize() == ""


def test_canonicalize_two_step_chain():
    p = from_word((6, 7, 3, 4, 5, 2, 1))
    trace = canonicalize(p)
    assert [step.ell for step in trace.steps] == [4, 3]
    assert trace.steps[0].source == p
    assert trace.steps[0].target == trace.steps[1].source
    assert trace.final == trace.steps[1].target
    assert classify(trace.final).is_canonical
    for step in trace.steps:
        assert key3(step.source) == key3(step.target)
    lines = trace.serialize().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("ell=4 src=6 7 3 4 5 2 1 dst=")


def test_canonicalize_rejects_singletons():
    with pytest.raises(ValueError):
        canonicalize(from_word((4,)))


def test_canonicalize_with_bijection_worked_pair():
    trace, mapping = canonicalize_with_bijection(PI, SIGMA)
    assert [step.ell for step in trace.steps] == [4]
    assert run_profile(trace.final).lengths == (2, 3, 2, 2, 2)
    assert classify(trace.final)[:3] == (3, 2, 3)
    space = list(enumerate_shuffles(PI, SIGMA))
    assert set(mapping) == set(space)
    assert len(set(mapping.values())) == len(space)
    assert set(mapping.values()) == set(enumerate_shuffles(trace.final, SIGMA))
    for tau, image in mapping.items():
        assert key3(tau) == key3(image)
    before = Distribution.from_values(TRIPLE(t) for t in space)
    after = Distribution.from_values(TRIPLE(t) for t in mapping.values())
    assert before == after


def test_canonicalize_with_bijection_identity_case():
    p = from_word((6, 5, 3, 4, 7, 9, 2))
    sigma = from_word((10, 11))
    trace, mapping = canonicalize_with_bijection(p, sigma)
    assert trace.steps == ()
    assert all(tau == image for tau, image in mapping.items())
    assert len(mapping) == shuffle_count(len(p), len(sigma))


def test_multi_step_mapping_preserves_statistics():
    p = from_word((6, 7, 3, 4, 5, 2, 1))
    sigma = from_word((8, 9))
    trace, mapping = canonicalize_with_bijection(p, sigma)
    assert len(trace.steps) == 2
    assert len(set(mapping.values())) == shuffle_count(len(p), len(sigma))
    assert set(mapping.values()) == set(enumerate_shuffles(trace.final, sigma))
    for tau, image in mapping.items():
        assert key3(tau) == key3(image)
        assert sigma_part(image, trace.final) == sigma.values
