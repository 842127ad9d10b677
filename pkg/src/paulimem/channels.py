"""Pauli operators, channel families, and two-use correlated Kraus sets.

A two-use Pauli channel with partial memory applies ``sigma_i (x) sigma_j``
to the pair of transmitted qubits with probability

    w_ij = p_i * [(1 - mu) * p_j + mu * delta_ij],

where ``{p_i}`` are the single-use Pauli weights of the family and ``mu`` is
the memory coefficient: with probability ``mu`` the second use repeats the
first operation, with probability ``1 - mu`` the two uses are independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

import numpy as np

from . import kernels
from .numerics import as_matrix, hermitize, tensor

PAULI_LABELS = ("0", "x", "y", "z")

_PAULI = {
    "0": np.eye(2, dtype=np.complex128),
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

_I2 = _PAULI["0"]

COMPLETENESS_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-12


def pauli_operator(label: str) -> np.ndarray:
    """The 2x2 Pauli operator for label '0', 'x', 'y' or 'z' ('0' is I)."""
    try:
        return _PAULI[label].copy()
    except KeyError:
        raise ValueError(
            f"unknown Pauli label {label!r}; expected one of {PAULI_LABELS}"
        ) from None


def pauli_stack() -> np.ndarray:
    """All four Pauli operators as a (4, 2, 2) stack in label order."""
    return np.stack([_PAULI[l] for l in PAULI_LABELS])


# ---------------------------------------------------------------------------
# channel families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChannelFamily:
    """A named Pauli-channel parameterization.

    ``weight_fn`` maps an error probability p in [0, 1] to the four Pauli
    weights (order 0, x, y, z).  ``shrink_fn`` / ``p_from_shrink`` convert
    between p and the family's single-use shrinking factor, whose symbol and
    valid range are recorded for reporting and CLI conversion.
    """

    name: str
    weight_fn: Callable[[float], np.ndarray]
    shrink_symbol: str
    shrink_fn: Callable[[float], float]
    p_from_shrink_fn: Callable[[float], float]
    shrink_range: tuple[float, float]

    def weights(self, p: float) -> np.ndarray:
        _check_unit_interval("p", p)
        return self.weight_fn(float(p))

    def shrink(self, p: float) -> float:
        _check_unit_interval("p", p)
        return float(self.shrink_fn(float(p)))

    def p_from_shrink(self, value: float) -> float:
        lo, hi = self.shrink_range
        if not (lo - 1e-12 <= value <= hi + 1e-12):
            raise ValueError(
                f"{self.shrink_symbol} = {value} outside [{lo:g}, {hi:g}] "
                f"for family {self.name!r}"
            )
        p = float(self.p_from_shrink_fn(float(value)))
        return min(1.0, max(0.0, p))


def _check_unit_interval(name: str, value: float) -> None:
    if not (0.0 <= value <= 1.0):
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


DEPOLARIZING = ChannelFamily(
    name="depolarizing",
    weight_fn=lambda p: np.array([1 - p, p / 3, p / 3, p / 3]),
    shrink_symbol="eta",
    shrink_fn=lambda p: 1 - 4 * p / 3,
    p_from_shrink_fn=lambda eta: 3 * (1 - eta) / 4,
    shrink_range=(-1 / 3, 1.0),
)

BIT_FLIP = ChannelFamily(
    name="bit_flip",
    weight_fn=lambda p: np.array([1 - p, p, 0.0, 0.0]),
    shrink_symbol="chi",
    shrink_fn=lambda p: 1 - 2 * p,
    p_from_shrink_fn=lambda chi: (1 - chi) / 2,
    shrink_range=(-1.0, 1.0),
)

PHASE_FLIP = ChannelFamily(
    name="phase_flip",
    weight_fn=lambda p: np.array([1 - p, 0.0, 0.0, p]),
    shrink_symbol="chi",
    shrink_fn=lambda p: 1 - 2 * p,
    p_from_shrink_fn=lambda chi: (1 - chi) / 2,
    shrink_range=(-1.0, 1.0),
)

BIT_PHASE_FLIP = ChannelFamily(
    name="bit_phase_flip",
    weight_fn=lambda p: np.array([1 - p, 0.0, p, 0.0]),
    shrink_symbol="chi",
    shrink_fn=lambda p: 1 - 2 * p,
    p_from_shrink_fn=lambda chi: (1 - chi) / 2,
    shrink_range=(-1.0, 1.0),
)

TWO_PAULI = ChannelFamily(
    name="two_pauli",
    weight_fn=lambda p: np.array([1 - p, p / 2, p / 2, 0.0]),
    shrink_symbol="zeta1",
    shrink_fn=lambda p: 1 - p,
    p_from_shrink_fn=lambda z: 1 - z,
    shrink_range=(0.0, 1.0),
)

PHASE_DAMPING = ChannelFamily(
    name="phase_damping",
    weight_fn=lambda p: np.array([1 - p / 2, 0.0, 0.0, p / 2]),
    shrink_symbol="gamma",
    shrink_fn=lambda p: 1 - p,
    p_from_shrink_fn=lambda g: 1 - g,
    shrink_range=(0.0, 1.0),
)

FAMILIES: dict[str, ChannelFamily] = {
    f.name: f
    for f in (DEPOLARIZING, BIT_FLIP, PHASE_FLIP, BIT_PHASE_FLIP, TWO_PAULI, PHASE_DAMPING)
}

FLIP_FAMILIES = (BIT_FLIP, PHASE_FLIP, BIT_PHASE_FLIP)


def get_family(family: "str | ChannelFamily") -> ChannelFamily:
    if isinstance(family, ChannelFamily):
        return family
    try:
        return FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown channel family {family!r}; expected one of {sorted(FAMILIES)}"
        ) from None


# The 16 Pauli strings underlying every Kraus set, in (i, j) label order.
# Only the weights vary with (family, p, mu), so these are built once.
_PAIR_LABELS = tuple(
    (PAULI_LABELS[i], PAULI_LABELS[j]) for i, j in product(range(4), range(4))
)
_TWO_USE_STRINGS = np.stack(
    [np.kron(_PAULI[li], _PAULI[lj]) for li, lj in _PAIR_LABELS]
)
_LIFTED_STRINGS = np.stack(
    [
        np.kron(np.kron(np.kron(_PAULI[li], _I2), _PAULI[lj]), _I2)
        for li, lj in _PAIR_LABELS
    ]
)


def shrinking_factors(family: "str | ChannelFamily", p: float) -> dict[str, float]:
    """All shrinking factors of a family at error probability p.

    The two-Pauli channel carries a second factor zeta2 = 1 - 2p for the
    sigma_z direction; it enters no capacity formula here and is reported
    for completeness only.
    """
    fam = get_family(family)
    out = {fam.shrink_symbol: fam.shrink(p)}
    if fam.name == "two_pauli":
        out["zeta2"] = 1 - 2 * float(p)
    return out


# ---------------------------------------------------------------------------
# two-use Kraus sets with partial memory
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MemoryKrausSet:
    """The 16 labeled two-use Kraus operators for one (family, p, mu) point.

    Zero-weight operators are kept so the (i, j) labeling is stable across
    families.  ``operators[k]`` equals ``sqrt(weights[k]) * sigma_i (x) sigma_j``
    for ``labels[k] == (i, j)``.
    """

    family_name: str
    p: float
    mu: float
    labels: tuple[tuple[str, str], ...]
    weights: np.ndarray
    operators: np.ndarray

    def completeness_defect(self) -> float:
        return completeness_defect(self.operators)


def memory_weights(single_weights, mu: float) -> np.ndarray:
    """The 4x4 joint weight matrix w_ij = p_i [(1-mu) p_j + mu delta_ij]."""
    _check_unit_interval("mu", mu)
    w = np.asarray(single_weights, dtype=np.float64)
    if w.shape != (4,):
        raise ValueError(f"expected 4 Pauli weights, got shape {w.shape}")
    if np.any(w < -1e-15):
        raise ValueError(f"Pauli weights must be non-negative, got {w}")
    if abs(w.sum() - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"Pauli weights must sum to 1, got sum {w.sum()!r}")
    w = np.clip(w, 0.0, None)
    return w[:, None] * ((1.0 - mu) * w[None, :] + mu * np.eye(4))


def build_memory_kraus(family, p: float, mu: float) -> MemoryKrausSet:
    """Build the 16-operator two-use Kraus set for a family at (p, mu).

    ``family`` may be a family name, a :class:`ChannelFamily`, or an explicit
    4-vector of Pauli weights (for extension tests; ``p`` is then recorded but
    plays no role in the weights).
    """
    _check_unit_interval("p", p)
    _check_unit_interval("mu", mu)
    if isinstance(family, (str, ChannelFamily)):
        fam = get_family(family)
        name = fam.name
        single = fam.weights(p)
    else:
        single = np.asarray(family, dtype=np.float64)
        name = "custom"
    joint = memory_weights(single, mu)

    weights = joint.reshape(16)
    operators = np.sqrt(weights)[:, None, None] * _TWO_USE_STRINGS
    return MemoryKrausSet(
        family_name=name,
        p=float(p),
        mu=float(mu),
        labels=_PAIR_LABELS,
        weights=weights,
        operators=operators,
    )


def single_use_kraus(family, p: float) -> np.ndarray:
    """Single-use Kraus stack (4, 2, 2): sqrt(p_i) * sigma_i."""
    fam = get_family(family)
    w = fam.weights(p)
    return np.sqrt(w)[:, None, None] * pauli_stack()


def lift_to_purification(kset: MemoryKrausSet) -> np.ndarray:
    """Lift the two-use set to the four-qubit purification space.

    Under the (A1, B1, A2, B2) factor ordering, operator (i, j) acts as
    sigma_i on A1 and sigma_j on A2, identity on the reference qubits:
    sqrt(w_ij) * (sigma_i (x) I) (x) (sigma_j (x) I), a 16x16 matrix.
    """
    if kset.labels != _PAIR_LABELS:
        raise ValueError("Kraus set labels do not follow the canonical (i, j) order")
    return np.sqrt(kset.weights)[:, None, None] * _LIFTED_STRINGS


def completeness_defect(kraus) -> float:
    """Largest entrywise deviation of sum_k E_k^dagger E_k from the identity."""
    ops = np.asarray(kraus, dtype=np.complex128)
    acc = np.einsum("aki,akj->ij", ops.conj(), ops)
    return float(np.abs(acc - np.eye(ops.shape[-1])).max())


def apply_channel(kraus, rho) -> np.ndarray:
    """Apply a channel in Kraus form: rho -> sum_k E_k rho E_k^dagger.

    The operator stack must match the state dimension and satisfy the
    completeness relation within ``COMPLETENESS_TOL``.
    """
    ops = np.asarray(kraus, dtype=np.complex128)
    if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
        raise ValueError(f"expected a (k, d, d) operator stack, got shape {ops.shape}")
    rho = as_matrix(rho)
    if ops.shape[1] != rho.shape[0]:
        raise ValueError(
            f"operator dimension {ops.shape[1]} does not match state dimension "
            f"{rho.shape[0]}"
        )
    defect = completeness_defect(ops)
    if defect > COMPLETENESS_TOL:
        raise ValueError(
            f"Kraus set is not complete: max |sum E^dagger E - I| = {defect:.3e}"
        )
    return hermitize(kernels.apply_kraus_sum(ops, rho))


# ---------------------------------------------------------------------------
# Bell states and the canonical purification
# ---------------------------------------------------------------------------

# Naming convention used throughout: psi+- = (|00> +- |11>)/sqrt(2) and
# phi+- = (|01> +- |10>)/sqrt(2).  Many texts swap the psi/phi letters;
# here the labels are fixed as above.
BELL_KINDS = ("psi_plus", "psi_minus", "phi_plus", "phi_minus")

_BELL_VECTORS = {
    "psi_plus": np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2),
    "psi_minus": np.array([1, 0, 0, -1], dtype=np.complex128) / np.sqrt(2),
    "phi_plus": np.array([0, 1, 1, 0], dtype=np.complex128) / np.sqrt(2),
    "phi_minus": np.array([0, 1, -1, 0], dtype=np.complex128) / np.sqrt(2),
}


def bell_vector(kind: str) -> np.ndarray:
    """State vector of a Bell pair (sender qubit first)."""
    try:
        return _BELL_VECTORS[kind].copy()
    except KeyError:
        raise ValueError(
            f"unknown Bell state {kind!r}; expected one of {BELL_KINDS}"
        ) from None


def bell_state(kind: str) -> np.ndarray:
    """Density matrix (4x4 rank-1 projector) of a Bell pair."""
    v = bell_vector(kind)
    return np.outer(v, v.conj())


def canonical_purification() -> np.ndarray:
    """The 16x16 pure input purification: a psi+ pair tensor a psi- pair.

    Factor ordering is (A1, B1, A2, B2); the sender holds A1 and A2, whose
    reduction is the maximally mixed two-qubit state I/4.
    """
    v = np.kron(bell_vector("psi_plus"), bell_vector("psi_minus"))
    return np.outer(v, v.conj())


def maximally_mixed(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128) / dim


def tensor_pauli_string(labels) -> np.ndarray:
    """Tensor product of Pauli operators, leftmost label most significant."""
    out = pauli_operator(labels[0])
    for l in labels[1:]:
        out = tensor(out, pauli_operator(l))
    return out
