import numpy as np
import pytest

import qprospect as q
from conftest import random_prospect


def make_space():
    return q.MindSpace((2, 2))


def test_from_amplitudes_verbatim():
    space = make_space()
    pi = q.prospect_from_amplitudes(space, "e11", [1, 0, 0, 0])
    np.testing.assert_array_equal(pi.amp, [1, 0, 0, 0])
    assert pi.norm_sq == 1.0


def test_from_amplitudes_with_support():
    space = make_space()
    ring = q.ring_from_dims([2, 2])
    ev = q.Event(ring, frozenset({(1, 1), (1, 2)}))
    r = 2 ** -0.5
    pi = q.prospect_from_amplitudes(space, "pi", [r, r, 0, 0], support=ev)
    assert pi.support == ev


def test_support_inconsistency_rejected():
    space = make_space()
    ring = q.ring_from_dims([2, 2])
    ev = q.Event(ring, frozenset({(2, 2)}))
    with pytest.raises(q.ValidationError):
        q.prospect_from_amplitudes(space, "bad", [1, 0, 0, 0], support=ev)


def test_zero_amplitudes_rejected():
    with pytest.raises(q.ValidationError):
        q.prospect_from_amplitudes(make_space(), "zero", [0, 0, 0, 0])


def test_uniform_singleton():
    space = make_space()
    ring = q.ring_from_dims([2, 2])
    pi = q.prospect_from_support_uniform(
        space, "pi", q.Event(ring, frozenset({(1, 1)}))
    )
    np.testing.assert_array_equal(pi.amp, [1, 0, 0, 0])


def test_uniform_equal_weights():
    space = make_space()
    ring = q.ring_from_dims([2, 2])
    ev = q.Event(ring, frozenset({(1, 1), (1, 2)}))
    pi = q.prospect_from_support_uniform(space, "pi", ev)
    r = 2 ** -0.5
    np.testing.assert_allclose(pi.amp, [r, r, 0, 0], atol=1e-15)


def test_uniform_phases():
    space = make_space()
    ring = q.ring_from_dims([2, 2])
    ev = q.Event(ring, frozenset({(1, 1), (1, 2)}))
    pi = q.prospect_from_support_uniform(space, "pi", ev, phases=[1, -1])
    r = 2 ** -0.5
    np.testing.assert_allclose(pi.amp, [r, -r, 0, 0], atol=1e-15)


def test_uniform_empty_event_rejected():
    ring = q.ring_from_dims([2, 2])
    with pytest.raises(q.ValidationError):
        q.prospect_from_support_uniform(
            make_space(), "pi", q.impossible_event(ring)
        )


def test_operator_elementary_is_projector_matrix():
    pi = q.prospect_from_amplitudes(make_space(), "e11", [1, 0, 0, 0])
    P = q.operator_matrix(pi)
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_array_equal(P, expected)


def test_operator_block_of_ones():
    pi = q.prospect_from_amplitudes(make_space(), "pi", [1, 1, 0, 0])
    P = q.operator_matrix(pi)
    assert np.trace(P).real == pytest.approx(2)
    np.testing.assert_array_equal(P[:2, :2], np.ones((2, 2)))
    assert not P[2:, :].any() and not P[:, 2:].any()
    # square identity, by direct matrix multiplication: P^2 = 2 P
    np.testing.assert_allclose(P @ P, 2 * P, atol=1e-12)


def test_is_projector():
    space = make_space()
    r = 2 ** -0.5
    assert q.is_projector(q.prospect_from_amplitudes(space, "a", [1, 0, 0, 0]))
    assert not q.is_projector(q.prospect_from_amplitudes(space, "b", [1, 1, 0, 0]))
    assert q.is_projector(q.prospect_from_amplitudes(space, "c", [r, r, 0, 0]))


def test_operator_square_identity_random():
    rng = np.random.default_rng(42)
    for dims in [(2,), (2, 2), (4, 4), (8, 8)]:
        space = q.MindSpace(dims)
        for _ in range(5):
            pi = random_prospect(space, rng)
            P = q.operator_matrix(pi)
            np.testing.assert_allclose(
                P @ P, pi.norm_sq * P, atol=1e-10 * max(1.0, pi.norm_sq)
            )


def test_operator_hermitian_random():
    rng = np.random.default_rng(1)
    space = q.MindSpace((3, 3))
    for _ in range(20):
        P = q.operator_matrix(random_prospect(space, rng))
        np.testing.assert_allclose(P, P.conj().T, atol=1e-12)


def test_matrix_average_equals_amplitude_overlap():
    rng = np.random.default_rng(3)
    space = q.MindSpace((4, 4))
    for seed in range(10):
        s = q.random_state(space, seed)
        pi = random_prospect(space, rng)
        via_matrix = (np.conj(s.amp) @ q.operator_matrix(pi) @ s.amp).real
        via_overlap = abs(q.inner(q.StateVector(space, pi.amp), s)) ** 2
        assert abs(via_matrix - via_overlap) <= 1e-12 * max(1.0, via_matrix)
