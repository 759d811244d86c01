import numpy as np
import pytest

import qprospect as q


# ---------------------------------------------------------------------------
# Dense-matrix oracles: evaluate the operator averages literally, with
# explicit basis projector matrices, independently of the amplitude-level
# formulas under test.
# ---------------------------------------------------------------------------

def basis_projector(dim, n):
    P = np.zeros((dim, dim), dtype=complex)
    P[n, n] = 1.0
    return P


def oracle_probability(s, pi):
    """<s|P(pi)|s> by full matrix sandwich."""
    P = np.outer(pi.amp, np.conj(pi.amp))
    return float((np.conj(s.amp) @ P @ s.amp).real)


def oracle_utility(s, pi):
    """sum_n <s|P(e_n) P(pi) P(e_n)|s> with explicit projectors."""
    dim = s.space.total_dim
    P = np.outer(pi.amp, np.conj(pi.amp))
    total = 0.0
    for n in range(dim):
        En = basis_projector(dim, n)
        total += (np.conj(s.amp) @ En @ P @ En @ s.amp).real
    return float(total)


def oracle_attraction(s, pi):
    """sum_{m != n} <s|P(e_m) P(pi) P(e_n)|s> with explicit projectors."""
    dim = s.space.total_dim
    P = np.outer(pi.amp, np.conj(pi.amp))
    total = 0.0 + 0.0j
    for m in range(dim):
        Em = basis_projector(dim, m)
        for n in range(dim):
            if m == n:
                continue
            En = basis_projector(dim, n)
            total += np.conj(s.amp) @ Em @ P @ En @ s.amp
    assert abs(total.imag) < 1e-12
    return float(total.real)


def random_prospect(space, rng, name="pi"):
    amp = rng.standard_normal(space.total_dim) + 1j * rng.standard_normal(
        space.total_dim
    )
    return q.prospect_from_amplitudes(space, name, amp)


# ---------------------------------------------------------------------------
# The worked two-prospect interference instance (dims [2,2]).
# ---------------------------------------------------------------------------

@pytest.fixture
def interference_instance():
    space = q.MindSpace((2, 2))
    s = q.make_strategic(space, [0.5, 0.5, 0.5, 0.5])
    r = 2 ** -0.5
    p1 = q.prospect_from_amplitudes(space, "p1", [r, r, 0, 0])
    p2 = q.prospect_from_amplitudes(space, "p2", [0, 0, r, -r])
    return s, q.ProspectLattice((p1, p2))
