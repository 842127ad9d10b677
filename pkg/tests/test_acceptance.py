"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Plain-numpy / plain-math oracles are used wherever a criterion calls for an
independent evaluation; package entry points are only used for the quantity
under test.
"""

import math
import time

import numpy as np
import pytest

from paulimem import capacity as cap
from paulimem import channels as ch
from paulimem.cli import main, run_verification
from paulimem.numerics import von_neumann_entropy

GRID = np.round(np.linspace(0.0, 1.0, 11), 10)
FAMILY_NAMES = sorted(ch.FAMILIES)


def report(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[acceptance] criterion {number} {label}: {status}{suffix}")
    return ok


def independent_entropy(probs):
    """Scalar entropy via math.log2, independent of the package kernels."""
    return -sum(float(q) * math.log2(float(q)) for q in probs if q > 1e-12)


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # compile/load the jitted kernels once so timed criteria measure the
    # computation, not the JIT
    cap.numeric_spectrum("depolarizing", 0.1, 0.1)
    cap.coding_chis("depolarizing", 0.1, 0.1)


def test_criterion_1_spectrum_equivalence():
    t0 = time.perf_counter()
    worst = 0.0
    for name in FAMILY_NAMES:
        for p in GRID:
            for mu in GRID:
                numeric = cap.numeric_spectrum(name, p, mu).values
                closed = np.sort(cap.closed_form_spectrum(name, p, mu).values)[::-1]
                worst = max(worst, float(np.abs(numeric - closed).max()))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed < 5.0
    assert report(1, "spectrum equivalence", ok,
                  f"worst {worst:.2e}, {elapsed:.2f}s")


def test_criterion_2_entropy_identity():
    rho = ch.maximally_mixed(4)
    worst = 0.0
    for name in FAMILY_NAMES:
        for p in GRID:
            for mu in GRID:
                kset = ch.build_memory_kraus(name, p, mu)
                out = ch.apply_channel(kset.operators, rho)
                total = von_neumann_entropy(rho) + von_neumann_entropy(out)
                worst = max(worst, abs(total - 4.0))
    assert report(2, "entropy identity S(rho)+S(N(rho))=4", worst <= 1e-12,
                  f"worst {worst:.2e}")


def test_criterion_3_noiseless_anchor():
    worst = 0.0
    for name in FAMILY_NAMES:
        for mu in GRID:
            ce = cap.entanglement_assisted_capacity(name, 0.0, mu)
            worst = max(worst, abs(ce - 4.0))
    assert report(3, "noiseless capacity = 4", worst <= 1e-12, f"worst {worst:.2e}")


def test_criterion_4_closed_anchors():
    flip = cap.entanglement_assisted_capacity("bit_flip", 0.5, 1.0)
    dev_flip = abs(flip - 3.0)
    want_dep = 4.0 - independent_entropy([0.85, 0.05, 0.05, 0.05])
    dep = cap.entanglement_assisted_capacity(
        "depolarizing", ch.DEPOLARIZING.p_from_shrink(0.8), 1.0
    )
    dev_dep = abs(dep - want_dep)
    ok = dev_flip <= 1e-10 and dev_dep <= 1e-10
    assert report(4, "closed anchors (flip 3.0, depolarizing 4-H)", ok,
                  f"flip dev {dev_flip:.2e}, depolarizing dev {dev_dep:.2e}")


def _independent_single_use_spectrum(name, p):
    """(N1 x I) on a Bell pair, built and diagonalized with plain numpy."""
    paulis = {
        "0": np.eye(2, dtype=complex),
        "x": np.array([[0, 1], [1, 0]], dtype=complex),
        "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "z": np.array([[1, 0], [0, -1]], dtype=complex),
    }
    weights = dict(zip("0xyz", ch.FAMILIES[name].weights(p)))
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1 / np.sqrt(2)
    rho = np.outer(bell, bell.conj())
    out = np.zeros((4, 4), dtype=complex)
    for label, w in weights.items():
        op = np.kron(paulis[label], np.eye(2))
        out += w * (op @ rho @ op.conj().T)
    return np.linalg.eigvalsh(out)


def test_criterion_5_memoryless_factorization():
    worst = 0.0
    for name in FAMILY_NAMES:
        for p in GRID:
            ce = cap.entanglement_assisted_capacity(name, p, 0.0)
            single = _independent_single_use_spectrum(name, p)
            want = 2.0 * (2.0 - independent_entropy(single))
            worst = max(worst, abs(ce - want))
    assert report(5, "mu=0 factorization", worst <= 1e-9, f"worst {worst:.2e}")


def test_criterion_6_memory_monotonicity_at_p_half():
    mus = np.linspace(0.0, 1.0, 101)
    ok = True
    for name in FAMILY_NAMES:
        per_use = np.array(
            [cap.entanglement_assisted_capacity(name, 0.5, m) / 2 for m in mus]
        )
        monotone = bool(np.all(np.diff(per_use) >= -1e-12))
        at_max = int(np.argmax(per_use)) == len(mus) - 1
        ok = ok and monotone and at_max
    assert report(6, "capacity non-decreasing in memory, max at mu=1", ok)


def test_criterion_7_assisted_capacity_dominates():
    p = ch.DEPOLARIZING.p_from_shrink(0.8)
    mus = np.linspace(0.0, 1.0, 101)
    dominance = True
    diffs = []
    for mu in mus:
        chi_p, chi_e = cap.coding_chis("depolarizing", p, mu)
        ce_per_use = cap.entanglement_assisted_capacity("depolarizing", p, mu) / 2
        dominance = dominance and ce_per_use >= max(chi_p, chi_e) / 2 - 1e-12
        diffs.append(chi_e - chi_p)
    signs = np.sign(diffs)
    crossings = int(np.sum(np.diff(signs[signs != 0]) != 0))
    mu_t = cap.memory_threshold("depolarizing", p)
    bisected = mu_t is not None and 0.0 < mu_t < 1.0
    if bisected:
        chi_p, chi_e = cap.coding_chis("depolarizing", p, mu_t)
        bisected = abs(chi_e - chi_p) <= 1e-9
    ok = dominance and crossings == 1 and bisected
    assert report(7, "C_E dominance and single coding crossover", ok,
                  f"crossings {crossings}, mu_t {mu_t}")


def test_criterion_8_completeness():
    worst = 0.0
    for name in FAMILY_NAMES:
        for p in GRID:
            for mu in GRID:
                kset = ch.build_memory_kraus(name, p, mu)
                worst = max(worst, kset.completeness_defect())
                worst = max(
                    worst, ch.completeness_defect(ch.lift_to_purification(kset))
                )
    assert report(8, "Kraus completeness (two-use and lifted)", worst <= 1e-12,
                  f"worst {worst:.2e}")


def test_criterion_9_verify_command(capsys):
    run_verification(2)  # warm any remaining dispatch paths
    t0 = time.perf_counter()
    clean = main(["verify"])
    elapsed = time.perf_counter() - t0
    mutated = main(["verify", "--grid-steps", "11", "--inject-spectrum-bug"])
    capsys.readouterr()
    ok = clean == 0 and mutated == 1 and elapsed < 2.0
    with capsys.disabled():
        print()
        report(9, "verify exits 0 clean / 1 under seeded mutation", ok,
               f"{elapsed:.2f}s")
    assert ok
