"""Dense complex matrix algebra for small quantum states and operators.

Everything here operates on plain ``numpy.ndarray`` values (square complex
matrices of dimension 2, 4 or 16 in practice).  All functions are pure.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from . import kernels

# Tolerance ladder: algebraic identities, eigensolver-mediated checks,
# entropy-mediated checks.
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIG_HERMITICITY_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce to a square, finite complex matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def hermitize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (M + M^dagger) / 2."""
    return (m + m.conj().T) / 2


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation |M - M^dagger|."""
    return float(np.abs(m - m.conj().T).max())


def tensor(a, b) -> np.ndarray:
    """Tensor (Kronecker) product with the left factor owning the high-order index.

    ``tensor(a, b)[i*db + k, j*db + l] == a[i, j] * b[k, l]``
    """
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(rho, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out all tensor factors not listed in ``keep``.

    Parameters
    ----------
    rho:
        Square matrix over the tensor product of the given factor dimensions.
    dims:
        Dimension of each factor, left factor first (most significant index).
    keep:
        Indices of the factors to keep, e.g. ``[0]`` keeps the leftmost.

    Returns
    -------
    Matrix over the kept factors, in their original order.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d <= 0 for d in dims):
        raise ValueError(f"factor dimensions must be positive, got {dims}")
    total = int(np.prod(dims))
    if total != rho.shape[0]:
        raise ValueError(
            f"factor dimensions {dims} have product {total}, "
            f"but the matrix has dimension {rho.shape[0]}"
        )
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep must name at least one factor")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} factors")

    traced = [i for i in range(len(dims)) if i not in keep]
    out = rho.reshape(tuple(dims) * 2)
    remaining = list(dims)
    for ax in sorted(traced, reverse=True):
        out = np.trace(out, axis1=ax, axis2=ax + len(remaining))
        del remaining[ax]
    kept_dim = int(np.prod(remaining))
    return out.reshape(kept_dim, kept_dim)


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending.

    Accepts matrices Hermitian up to ``EIG_HERMITICITY_TOL`` and symmetrizes
    the rounding drift away before solving.
    """
    m = as_matrix(m)
    drift = hermiticity_defect(m)
    if drift > EIG_HERMITICITY_TOL:
        raise ValueError(
            f"matrix is not Hermitian: max |M - M^dagger| = {drift:.3e}"
        )
    return kernels.eigvalsh_descending(hermitize(m))


def validate_density_matrix(rho) -> np.ndarray:
    """Check the density matrix invariants and return the coerced matrix.

    Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
    """
    rho = as_matrix(rho)
    drift = hermiticity_defect(rho)
    if drift > HERMITICITY_TOL:
        raise ValueError(f"density matrix is not Hermitian: defect {drift:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace is {tr}, expected 1")
    smallest = float(kernels.eigvalsh_descending(hermitize(rho))[-1])
    if smallest < -PSD_TOL:
        raise ValueError(
            f"density matrix is not positive semidefinite: eigenvalue {smallest:.3e}"
        )
    return rho


def is_density_matrix(rho) -> bool:
    try:
        validate_density_matrix(rho)
    except ValueError:
        return False
    return True


def entropy_bits(probs) -> float:
    """Shannon entropy -sum p log2 p of a probability vector, in bits.

    Entries at or below ``kernels.ENTROPY_CLIP`` contribute exactly 0.
    """
    probs = np.asarray(probs, dtype=np.float64)
    if not np.all(np.isfinite(probs)):
        raise ValueError("probabilities must be finite")
    return kernels.entropy_bits(probs)


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy -Tr(rho log2 rho) in bits.

    The input must satisfy the density-matrix invariants; eigenvalues at or
    below the clip threshold contribute exactly 0.
    """
    rho = validate_density_matrix(rho)
    vals = kernels.eigvalsh_descending(hermitize(rho))
    return max(0.0, kernels.entropy_bits(vals))
