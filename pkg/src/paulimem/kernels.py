"""Hot numeric kernels with a numba and a pure-numpy implementation.

Three operations dominate sweep runtime and live here:

* ``apply_kraus_sum``     -- sum_k E_k rho E_k^dagger over a stack of operators,
* ``eigvalsh_descending`` -- eigenvalues of a Hermitian matrix, largest first,
* ``entropy_bits``        -- -sum p log2 p with exact-zero handling.

The numba eigensolver is a cyclic Jacobi iteration for complex Hermitian
matrices (off-diagonal norm driven below ``JACOBI_TOL`` relative to the
matrix norm); the numpy fallback uses LAPACK through ``np.linalg.eigvalsh``.
Which pair of kernels backs the public names is decided by
:mod:`paulimem.backend` (env var ``PAULIMEM_BACKEND``).
"""

from __future__ import annotations

import math

import numpy as np

from .backend import ACTIVE_BACKEND, HAS_NUMBA

# Convergence threshold for the Jacobi sweep, relative to the Frobenius norm.
JACOBI_TOL = 1e-14
_MAX_SWEEPS = 60

# Eigenvalues at or below this contribute exactly 0 to the entropy
# (0 log 0 := 0; transformed purifications are rank-deficient).
ENTROPY_CLIP = 1e-12


# ---------------------------------------------------------------------------
# pure-numpy implementations
# ---------------------------------------------------------------------------

def _apply_kraus_sum_np(kraus: np.ndarray, rho: np.ndarray) -> np.ndarray:
    tmp = kraus @ rho
    return (tmp @ kraus.conj().transpose(0, 2, 1)).sum(axis=0)


def _eigvalsh_descending_np(m: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(m)[::-1]


def _entropy_bits_np(probs: np.ndarray) -> float:
    kept = probs[probs > ENTROPY_CLIP]
    if kept.size == 0:
        return 0.0
    return float(-np.sum(kept * np.log2(kept)))


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAS_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _apply_kraus_sum_nb(kraus: np.ndarray, rho: np.ndarray) -> np.ndarray:
        nops = kraus.shape[0]
        d = rho.shape[0]
        out = np.zeros((d, d), dtype=np.complex128)
        tmp = np.empty((d, d), dtype=np.complex128)
        for a in range(nops):
            # tmp = E rho; exact zeros of E are skipped (weighted Pauli
            # strings have a single nonzero per row)
            for i in range(d):
                for j in range(d):
                    tmp[i, j] = 0.0
            for i in range(d):
                for k in range(d):
                    e = kraus[a, i, k]
                    if e.real != 0.0 or e.imag != 0.0:
                        for j in range(d):
                            tmp[i, j] += e * rho[k, j]
            # out += tmp E^dagger
            for j in range(d):
                for k in range(d):
                    e = np.conj(kraus[a, j, k])
                    if e.real != 0.0 or e.imag != 0.0:
                        for i in range(d):
                            out[i, j] += tmp[i, k] * e
        return out

    @njit(cache=True)
    def _jacobi_eigvalsh_nb(a: np.ndarray, tol: float) -> np.ndarray:
        d = a.shape[0]
        m = a.copy()
        scale = 0.0
        for i in range(d):
            for j in range(d):
                scale += abs(m[i, j]) ** 2
        scale = math.sqrt(scale)
        if scale == 0.0:
            return np.zeros(d, dtype=np.float64)
        thresh = tol * scale
        for _ in range(_MAX_SWEEPS):
            off = 0.0
            for i in range(d - 1):
                for j in range(i + 1, d):
                    off += abs(m[i, j]) ** 2
            if math.sqrt(off) <= thresh:
                break
            for p in range(d - 1):
                for q in range(p + 1, d):
                    g = m[p, q]
                    r = abs(g)
                    if r == 0.0:
                        continue
                    phase = g / r
                    tau = (m[q, q].real - m[p, p].real) / (2.0 * r)
                    if tau >= 0.0:
                        t = -1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = 1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                    c = 1.0 / math.sqrt(1.0 + t * t)
                    s = t * c
                    sigma = s * phase
                    for k in range(d):
                        akp = m[k, p]
                        akq = m[k, q]
                        m[k, p] = c * akp + np.conj(sigma) * akq
                        m[k, q] = -sigma * akp + c * akq
                    for k in range(d):
                        apk = m[p, k]
                        aqk = m[q, k]
                        m[p, k] = c * apk + sigma * aqk
                        m[q, k] = -np.conj(sigma) * apk + c * aqk
        vals = np.empty(d, dtype=np.float64)
        for i in range(d):
            vals[i] = m[i, i].real
        return np.sort(vals)[::-1]

    @njit(cache=True)
    def _entropy_bits_nb(probs: np.ndarray) -> float:
        s = 0.0
        for i in range(probs.shape[0]):
            v = probs[i]
            if v > ENTROPY_CLIP:
                s -= v * math.log2(v)
        return s


# ---------------------------------------------------------------------------
# public dispatch
# ---------------------------------------------------------------------------

def _as_complex_stack(kraus) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(kraus), dtype=np.complex128)


if ACTIVE_BACKEND == "numba":

    def apply_kraus_sum(kraus, rho) -> np.ndarray:
        """Return sum_k E_k rho E_k^dagger for a (k, d, d) operator stack."""
        return _apply_kraus_sum_nb(
            _as_complex_stack(kraus), _as_complex_stack(rho)
        )

    def eigvalsh_descending(m) -> np.ndarray:
        """Eigenvalues of a Hermitian matrix, sorted descending."""
        return _jacobi_eigvalsh_nb(_as_complex_stack(m), JACOBI_TOL)

    def entropy_bits(probs) -> float:
        """-sum p log2 p in bits; entries at or below ENTROPY_CLIP add 0."""
        return _entropy_bits_nb(np.ascontiguousarray(probs, dtype=np.float64))

else:

    def apply_kraus_sum(kraus, rho) -> np.ndarray:
        """Return sum_k E_k rho E_k^dagger for a (k, d, d) operator stack."""
        return _apply_kraus_sum_np(
            _as_complex_stack(kraus), _as_complex_stack(rho)
        )

    def eigvalsh_descending(m) -> np.ndarray:
        """Eigenvalues of a Hermitian matrix, sorted descending."""
        return _eigvalsh_descending_np(_as_complex_stack(m))

    def entropy_bits(probs) -> float:
        """-sum p log2 p in bits; entries at or below ENTROPY_CLIP add 0."""
        return _entropy_bits_np(np.ascontiguousarray(probs, dtype=np.float64))
