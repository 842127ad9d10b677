import math

import numpy as np
import pytest

from paulimem import capacity as cap
from paulimem import channels as ch
from paulimem.numerics import entropy_bits, von_neumann_entropy


def h_bits(probs):
    """Independent scalar entropy for oracle values."""
    return -sum(q * math.log2(q) for q in probs if q > 0)


ETA08_P = 0.15  # depolarizing p for eta = 0.8
CE_ETA08_MU1 = 4.0 - h_bits([0.85, 0.05, 0.05, 0.05])
CE_ETA08_MU0 = 2.0 * (2.0 - h_bits([0.85, 0.05, 0.05, 0.05]))
CHI_PRODUCT_ETA08_MU0 = 2.0 - 2.0 * h_bits([0.9, 0.1])


# ---------------------------------------------------------------------------
# entanglement-assisted capacity
# ---------------------------------------------------------------------------

def test_noiseless_capacity_is_four():
    for fam in ch.FAMILIES.values():
        for mu in (0.0, 0.5, 1.0):
            assert cap.entanglement_assisted_capacity(fam, 0.0, mu) == pytest.approx(
                4.0, abs=1e-12
            )


def test_depolarizing_anchor_at_perfect_memory():
    got = cap.entanglement_assisted_capacity("depolarizing", ETA08_P, 1.0)
    assert got == pytest.approx(CE_ETA08_MU1, abs=1e-10)


def test_bit_flip_anchor_at_half_error_perfect_memory():
    got = cap.entanglement_assisted_capacity("bit_flip", 0.5, 1.0)
    assert got == pytest.approx(3.0, abs=1e-10)


def test_capacity_in_range():
    for fam in ch.FAMILIES.values():
        for p in (0.0, 0.3, 0.7, 1.0):
            for mu in (0.0, 0.5, 1.0):
                ce = cap.entanglement_assisted_capacity(fam, p, mu)
                assert -1e-12 <= ce <= 4.0 + 1e-12


def test_capacity_range_errors():
    with pytest.raises(ValueError):
        cap.entanglement_assisted_capacity("depolarizing", -0.1, 0.5)
    with pytest.raises(ValueError):
        cap.entanglement_assisted_capacity("depolarizing", 0.5, 1.2)


def test_entropy_identity_at_canonical_input():
    rho = ch.maximally_mixed(4)
    for fam in ch.FAMILIES.values():
        for p in (0.1, 0.5, 0.9):
            for mu in (0.0, 0.4, 1.0):
                kset = ch.build_memory_kraus(fam, p, mu)
                out = ch.apply_channel(kset.operators, rho)
                total = von_neumann_entropy(rho) + von_neumann_entropy(out)
                assert total == pytest.approx(4.0, abs=1e-12)


def test_memoryless_capacity_factorizes():
    for fam in ch.FAMILIES.values():
        for p in (0.1, 0.35, 0.8):
            ce = cap.entanglement_assisted_capacity(fam, p, 0.0)
            single = cap.single_use_spectrum(fam, p)
            assert ce == pytest.approx(2.0 * (2.0 - entropy_bits(single)), abs=1e-9)


def test_single_use_spectrum_is_bell_diagonal():
    # one use on half a Bell pair has the Pauli weights as eigenvalues
    for fam in ch.FAMILIES.values():
        got = cap.single_use_spectrum(fam, 0.3)
        want = np.sort(fam.weights(0.3))[::-1]
        assert np.abs(got - want).max() <= 1e-12


def test_capacity_nondecreasing_in_memory():
    mus = np.linspace(0.0, 1.0, 101)
    for fam in ch.FAMILIES.values():
        for p in np.linspace(0.1, 0.9, 9):
            ces = [cap.entanglement_assisted_capacity(fam, p, m) for m in mus]
            assert all(b - a >= -1e-12 for a, b in zip(ces, ces[1:]))


def test_capacity_maximal_at_perfect_memory():
    mus = np.linspace(0.0, 1.0, 21)
    for fam in ch.FAMILIES.values():
        ces = [cap.entanglement_assisted_capacity(fam, 0.5, m) for m in mus]
        assert int(np.argmax(ces)) == len(mus) - 1


# ---------------------------------------------------------------------------
# Holevo quantities
# ---------------------------------------------------------------------------

def test_holevo_identity_channel_bell_ensemble():
    kset = ch.build_memory_kraus("depolarizing", 0.0, 0.0)
    assert cap.holevo_chi(kset.operators, cap.bell_ensemble()) == pytest.approx(
        2.0, abs=1e-12
    )


def test_holevo_fully_depolarizing_memoryless():
    # eta = 0 (p = 3/4), mu = 0: every input is mapped to I/4
    kset = ch.build_memory_kraus("depolarizing", 0.75, 0.0)
    for ensemble in (cap.product_basis_ensemble(), cap.bell_ensemble()):
        assert cap.holevo_chi(kset.operators, ensemble) == pytest.approx(0.0, abs=1e-12)


def test_holevo_product_ensemble_value():
    kset = ch.build_memory_kraus("depolarizing", ETA08_P, 0.0)
    got = cap.holevo_chi(kset.operators, cap.product_basis_ensemble())
    assert got == pytest.approx(CHI_PRODUCT_ETA08_MU0, abs=1e-12)


def test_holevo_bounds():
    for mu in (0.0, 0.5, 1.0):
        chi_p, chi_e = cap.coding_chis("depolarizing", ETA08_P, mu)
        for chi in (chi_p, chi_e):
            assert -1e-12 <= chi <= 2.0 + 1e-12


def test_holevo_validates_ensembles():
    kset = ch.build_memory_kraus("depolarizing", 0.1, 0.1)
    with pytest.raises(ValueError, match="sum to 1"):
        cap.holevo_chi(kset.operators, [(0.7, np.eye(4) / 4)])
    with pytest.raises(ValueError, match="trace"):
        cap.holevo_chi(kset.operators, [(1.0, np.eye(4))])
    with pytest.raises(ValueError, match="at least one"):
        cap.holevo_chi(kset.operators, [])


# ---------------------------------------------------------------------------
# memory threshold
# ---------------------------------------------------------------------------

def test_threshold_absent_for_noiseless_channel():
    assert cap.memory_threshold("depolarizing", 0.0, grid_points=21) is None


def test_threshold_exists_for_eta_08():
    mu_t = cap.memory_threshold("depolarizing", ETA08_P)
    assert mu_t is not None and 0.0 < mu_t < 1.0
    chi_p, chi_e = cap.coding_chis("depolarizing", ETA08_P, mu_t)
    assert abs(chi_e - chi_p) <= 1e-9


def test_entangled_coding_wins_at_perfect_memory():
    for p in (0.1, 0.3, 0.5, 0.7, 0.9):
        chi_p, chi_e = cap.coding_chis("depolarizing", p, 1.0)
        assert chi_e >= chi_p - 1e-12


def test_threshold_grid_validation():
    with pytest.raises(ValueError, match="grid_points"):
        cap.memory_threshold("depolarizing", 0.5, grid_points=1)


# ---------------------------------------------------------------------------
# records and sweeps
# ---------------------------------------------------------------------------

def test_capacity_record_fields():
    rec = cap.capacity_record("depolarizing", ETA08_P, 1.0)
    assert rec.family == "depolarizing"
    assert rec.shrink == pytest.approx(0.8, abs=1e-12)
    assert rec.ce_per_use == rec.ce_total / 2.0
    assert rec.ce_total == pytest.approx(CE_ETA08_MU1, abs=1e-10)
    assert 0.0 <= rec.ce_total <= 4.0


def test_sweep_orders_records_by_grid():
    mus = np.linspace(0.0, 1.0, 5)
    records = cap.sweep("bit_flip", 0.5, mus)
    assert [r.mu for r in records] == list(mus)
    assert all(r.family == "bit_flip" for r in records)


def test_sweep_endpoints_for_eta_08():
    records = cap.sweep("depolarizing", ETA08_P, [0.0, 1.0])
    assert records[0].ce_total == pytest.approx(CE_ETA08_MU0, abs=1e-9)
    assert records[-1].ce_total == pytest.approx(CE_ETA08_MU1, abs=1e-10)
