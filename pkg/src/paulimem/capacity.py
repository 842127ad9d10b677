"""Entanglement-assisted capacity of two correlated Pauli-channel uses.

With the canonical maximally entangled input, the capacity over two uses is

    C_E = 4 - S(transformed purification),

where the transformed purification is the 16x16 state obtained by sending
the two sender qubits of two Bell pairs through the correlated channel.  Its
spectrum is available both in closed form per family and numerically by
direct diagonalization; the numeric route is the oracle the closed forms are
verified against.

The evaluation fixes the maximally mixed input I/4 (through its Bell-pair
purification) rather than searching over input states, so every capacity
reported here is the two-use quantum mutual information at that input.

``holevo_chi`` supports a comparison of unassisted coding strategies: the
Holevo quantity of a fixed signal ensemble sent through the two-use channel.
This is an upper-bound proxy for the classical capacity of the ensemble, not
an optimized capacity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .channels import (
    FAMILIES,
    MemoryKrausSet,
    apply_channel,
    bell_state,
    build_memory_kraus,
    canonical_purification,
    get_family,
    lift_to_purification,
    maximally_mixed,
    single_use_kraus,
)
from .numerics import entropy_bits, hermitize, validate_density_matrix

SPECTRUM_SUM_TOL = 1e-10
SPECTRUM_NEG_TOL = -1e-12

PRIOR_SUM_TOL = 1e-12


class Spectrum16(NamedTuple):
    """16 eigenvalues of the transformed purification plus their provenance."""

    values: np.ndarray
    source: str  # "closed_form" or "numeric"


def validate_spectrum(spectrum: Spectrum16) -> Spectrum16:
    vals = np.asarray(spectrum.values, dtype=np.float64)
    if vals.shape != (16,):
        raise ValueError(f"expected 16 eigenvalues, got shape {vals.shape}")
    if float(vals.min()) < SPECTRUM_NEG_TOL:
        raise ValueError(f"negative eigenvalue {vals.min()!r} in spectrum")
    if abs(float(vals.sum()) - 1.0) > SPECTRUM_SUM_TOL:
        raise ValueError(f"spectrum sums to {vals.sum()!r}, expected 1")
    return spectrum


def _check_range(name: str, value: float, lo: float, hi: float) -> None:
    if not (lo - 1e-12 <= value <= hi + 1e-12):
        raise ValueError(f"{name} must lie in [{lo:g}, {hi:g}], got {value}")


# ---------------------------------------------------------------------------
# closed-form spectra (natural multiplicity order, not sorted)
# ---------------------------------------------------------------------------

def depolarizing_spectrum(eta: float, mu: float) -> Spectrum16:
    """Spectrum for the depolarizing family; multiplicities (1, 6, 3, 6)."""
    _check_range("eta", eta, -1 / 3, 1.0)
    _check_range("mu", mu, 0.0, 1.0)
    a = 1 + 3 * eta
    b = 1 - eta
    l1 = a * (a * (1 - mu) + 4 * mu) / 16
    l2 = b * a * (1 - mu) / 16
    l3 = b * (b * (1 - mu) + 4 * mu) / 16
    l4 = b * b * (1 - mu) / 16
    return Spectrum16(np.array([l1] + [l2] * 6 + [l3] * 3 + [l4] * 6), "closed_form")


def flip_spectrum(chi: float, mu: float) -> Spectrum16:
    """Spectrum shared by the bit, phase and bit-phase flip families.

    Multiplicities (1, 2, 1) plus 12 exact zeros.
    """
    _check_range("chi", chi, -1.0, 1.0)
    _check_range("mu", mu, 0.0, 1.0)
    l1 = (1 + chi) * (1 + mu + chi * (1 - mu)) / 4
    l2 = (1 - chi * chi) * (1 - mu) / 4
    l4 = (1 - chi) * (1 + mu - chi * (1 - mu)) / 4
    return Spectrum16(np.array([l1, l2, l2, l4] + [0.0] * 12), "closed_form")


def two_pauli_spectrum(zeta1: float, mu: float) -> Spectrum16:
    """Spectrum for the two-Pauli family; multiplicities (1, 4, 2, 2) plus 7 zeros."""
    _check_range("zeta1", zeta1, 0.0, 1.0)
    _check_range("mu", mu, 0.0, 1.0)
    l1 = zeta1 * (zeta1 * (1 - mu) + mu)
    l2 = zeta1 * (1 - zeta1) * (1 - mu) / 2
    l6 = (1 - zeta1) * (1 + mu - zeta1 * (1 - mu)) / 4
    l8 = (1 - zeta1) ** 2 * (1 - mu) / 4
    return Spectrum16(
        np.array([l1] + [l2] * 4 + [l6] * 2 + [l8] * 2 + [0.0] * 7), "closed_form"
    )


def phase_damping_spectrum(gamma: float, mu: float) -> Spectrum16:
    """Spectrum for the phase-damping family: the flip spectrum at chi = gamma."""
    _check_range("gamma", gamma, 0.0, 1.0)
    return flip_spectrum(gamma, mu)


def closed_form_spectrum(family, p: float, mu: float) -> Spectrum16:
    """Closed-form spectrum of any family, parameterized by (p, mu)."""
    fam = get_family(family)
    shrink = fam.shrink(p)
    if fam.name == "depolarizing":
        return depolarizing_spectrum(shrink, mu)
    if fam.name == "two_pauli":
        return two_pauli_spectrum(shrink, mu)
    if fam.name == "phase_damping":
        return phase_damping_spectrum(shrink, mu)
    return flip_spectrum(shrink, mu)


# ---------------------------------------------------------------------------
# numeric oracle and capacity
# ---------------------------------------------------------------------------

def transformed_purification(family, p: float, mu: float) -> np.ndarray:
    """The 16x16 output of the lifted Kraus set on the canonical purification."""
    kset = build_memory_kraus(family, p, mu)
    lifted = lift_to_purification(kset)
    out = kernels.apply_kraus_sum(lifted, canonical_purification())
    return hermitize(out)


def numeric_spectrum(family, p: float, mu: float) -> Spectrum16:
    """Eigenvalues (descending) of the transformed purification.

    Brute-force diagonalization; the oracle all closed-form spectra are
    checked against.
    """
    vals = kernels.eigvalsh_descending(transformed_purification(family, p, mu))
    return Spectrum16(vals, "numeric")


def capacity_from_spectrum(spectrum: Spectrum16) -> float:
    """C_E over two uses from a transformed-purification spectrum: 4 - H."""
    return 4.0 - entropy_bits(np.asarray(spectrum.values, dtype=np.float64))


def entanglement_assisted_capacity(family, p: float, mu: float) -> float:
    """C_E in bits over two channel uses, from the numeric spectrum.

    Equals S(rho) + S(N(rho)) - S(transformed purification) = 4 - S(...) at
    the canonical maximally mixed input.
    """
    return capacity_from_spectrum(numeric_spectrum(family, p, mu))


def single_use_spectrum(family, p: float) -> np.ndarray:
    """Eigenvalues (descending) of one channel use on half a Bell pair.

    Sends the sender qubit of a psi+ pair through the single-use channel;
    independent of the two-use machinery, which makes it the oracle for the
    mu=0 factorization C_E = 2 * (2 - H(single-use spectrum)).
    """
    ops = single_use_kraus(family, p)
    lifted = np.array([np.kron(e, np.eye(2)) for e in ops])
    out = kernels.apply_kraus_sum(lifted, bell_state("psi_plus"))
    return kernels.eigvalsh_descending(hermitize(out))


# ---------------------------------------------------------------------------
# Holevo quantities for fixed coding ensembles
# ---------------------------------------------------------------------------

def holevo_chi(kraus, ensemble) -> float:
    """Holevo quantity S(N(rho_bar)) - sum_k q_k S(N(rho_k)) in bits.

    ``kraus`` is an operator stack acting on the two sender qubits (4x4);
    ``ensemble`` is a sequence of (prior, density matrix) pairs.
    """
    pairs = [(float(q), validate_density_matrix(rho)) for q, rho in ensemble]
    if not pairs:
        raise ValueError("ensemble must contain at least one state")
    priors = np.array([q for q, _ in pairs])
    if np.any(priors < -1e-15):
        raise ValueError(f"priors must be non-negative, got {priors}")
    if abs(priors.sum() - 1.0) > PRIOR_SUM_TOL:
        raise ValueError(f"priors must sum to 1, got {priors.sum()!r}")

    avg_out = np.zeros_like(pairs[0][1])
    mean_entropy = 0.0
    for q, rho in pairs:
        out = apply_channel(kraus, rho)
        avg_out = avg_out + q * out
        if q > 0.0:
            mean_entropy += q * entropy_bits(kernels.eigvalsh_descending(out))
    chi = entropy_bits(kernels.eigvalsh_descending(hermitize(avg_out))) - mean_entropy
    if -1e-12 < chi < 0.0:
        chi = 0.0
    return chi


def product_basis_ensemble() -> list[tuple[float, np.ndarray]]:
    """Four equiprobable two-qubit computational basis states."""
    out = []
    for k in range(4):
        rho = np.zeros((4, 4), dtype=np.complex128)
        rho[k, k] = 1.0
        out.append((0.25, rho))
    return out


def bell_ensemble() -> list[tuple[float, np.ndarray]]:
    """The four equiprobable Bell states."""
    return [(0.25, bell_state(k)) for k in ("psi_plus", "psi_minus", "phi_plus", "phi_minus")]


def coding_chis(family, p: float, mu: float) -> tuple[float, float]:
    """(chi_product, chi_entangled) for the canonical ensembles, bits per two uses."""
    kset = build_memory_kraus(family, p, mu)
    chi_p = holevo_chi(kset.operators, product_basis_ensemble())
    chi_e = holevo_chi(kset.operators, bell_ensemble())
    return chi_p, chi_e


def memory_threshold(
    family, p: float, grid_points: int = 101, tol: float = 1e-9
) -> float | None:
    """Memory strength where entangled-ensemble coding overtakes product coding.

    Scans g(mu) = chi_entangled - chi_product on a mu grid, then bisects the
    first bracketed sign change until |g| <= tol.  Returns None when g never
    changes sign on the grid (e.g. the noiseless channel).
    """
    _check_range("p", p, 0.0, 1.0)
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")

    def g(mu: float) -> float:
        chi_p, chi_e = coding_chis(family, p, mu)
        return chi_e - chi_p

    mus = np.linspace(0.0, 1.0, grid_points)
    vals = np.array([g(m) for m in mus])
    if np.all(np.abs(vals) <= tol):
        return None
    bracket = None
    for k in range(len(mus) - 1):
        if vals[k] * vals[k + 1] < 0.0:
            bracket = (mus[k], vals[k], mus[k + 1], vals[k + 1])
            break
    if bracket is None:
        # a grid point may sit exactly on the crossing
        hits = np.nonzero(np.abs(vals) <= tol)[0]
        return float(mus[hits[0]]) if hits.size else None
    lo, glo, hi, ghi = bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if abs(gm) <= tol:
            return float(mid)
        if glo * gm < 0.0:
            hi, ghi = mid, gm
        else:
            lo, glo = mid, gm
    return float(0.5 * (lo + hi))


# ---------------------------------------------------------------------------
# sweep records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CapacityRecord:
    """One sweep row: parameters plus capacities in bits.

    ``ce_total``, ``chi_product`` and ``chi_entangled`` are per two uses;
    ``ce_per_use`` is ``ce_total / 2``.
    """

    family: str
    p: float
    mu: float
    shrink: float
    ce_total: float
    ce_per_use: float
    chi_product: float
    chi_entangled: float


def capacity_record(family, p: float, mu: float) -> CapacityRecord:
    fam = get_family(family)
    ce = entanglement_assisted_capacity(fam, p, mu)
    chi_p, chi_e = coding_chis(fam, p, mu)
    return CapacityRecord(
        family=fam.name,
        p=float(p),
        mu=float(mu),
        shrink=fam.shrink(p),
        ce_total=ce,
        ce_per_use=ce / 2.0,
        chi_product=chi_p,
        chi_entangled=chi_e,
    )


def sweep(family, p: float, mu_values) -> list[CapacityRecord]:
    """Capacity records over a mu grid at fixed (family, p), in grid order."""
    fam = get_family(family)
    return [capacity_record(fam, p, float(mu)) for mu in mu_values]


__all__ = [
    "Spectrum16",
    "CapacityRecord",
    "validate_spectrum",
    "depolarizing_spectrum",
    "flip_spectrum",
    "two_pauli_spectrum",
    "phase_damping_spectrum",
    "closed_form_spectrum",
    "numeric_spectrum",
    "transformed_purification",
    "capacity_from_spectrum",
    "entanglement_assisted_capacity",
    "single_use_spectrum",
    "holevo_chi",
    "product_basis_ensemble",
    "bell_ensemble",
    "coding_chis",
    "memory_threshold",
    "capacity_record",
    "sweep",
    "FAMILIES",
]
