import numpy as np
import pytest


def random_complex(rng, dim):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def random_hermitian(rng, dim):
    m = random_complex(rng, dim)
    return (m + m.conj().T) / 2


def random_unitary(rng, dim):
    q, r = np.linalg.qr(random_complex(rng, dim))
    # fix the phase ambiguity so Q is uniquely unitary
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(rng, dim):
    m = random_complex(rng, dim)
    rho = m @ m.conj().T
    return rho / np.trace(rho).real


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
