"""Command-line driver: parameter sweeps, figure data, closed-form verification.

Subcommands
-----------
sweep    one family over a mu grid -> CSV of capacity records
figure1  depolarizing capacity vs coding-ensemble Holevo quantities -> CSV
figure2  flip / phase-damping / two-Pauli capacity vs memory -> CSV
verify   closed-form spectra against the numeric oracle -> report, exit code

Exit codes: 0 success, 1 verification failure, 2 usage/range/I-O error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

import numpy as np

from . import capacity as cap
from . import channels as ch
from .numerics import entropy_bits, von_neumann_entropy

HOLEVO_NOTE = (
    "chi columns are Holevo quantities of fixed ensembles "
    "(4 computational product states / 4 Bell states), an approximation "
    "to optimized classical coding capacities"
)

# worst-deviation tolerances enforced by `verify`
VERIFY_TOLS = {
    "completeness": 1e-12,
    "spectrum_agreement": 1e-10,
    "entropy_identity": 1e-12,
    "mu0_factorization": 1e-9,
}

_SHRINK_FLAGS = {
    "eta": "depolarizing",
    "chi": None,  # any flip family
    "zeta1": "two_pauli",
    "gamma": "phase_damping",
}


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
        return
    try:
        handle = open(path, "w", newline="")
    except OSError as exc:
        raise OSError(f"cannot write output file {path!r}: {exc}") from exc
    try:
        yield handle
    finally:
        handle.close()


def _write_csv(path: str, comments: list[str], header: list[str], rows) -> None:
    with _open_out(path) as fh:
        for line in comments:
            fh.write(f"# {line}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _mu_grid(args) -> np.ndarray:
    if args.mu_steps < 2:
        raise ValueError(f"--mu-steps must be >= 2, got {args.mu_steps}")
    if not (0.0 <= args.mu_start <= 1.0 and 0.0 <= args.mu_end <= 1.0):
        raise ValueError("mu grid bounds must lie in [0, 1]")
    return np.linspace(args.mu_start, args.mu_end, args.mu_steps)


def _resolve_family_p(args) -> tuple[ch.ChannelFamily, float, str, float]:
    """Resolve --family plus exactly one of --p/--eta/--chi/--zeta1/--gamma."""
    fam = ch.get_family(args.family)
    given = [
        (name, getattr(args, name))
        for name in ("p", "eta", "chi", "zeta1", "gamma")
        if getattr(args, name) is not None
    ]
    if len(given) != 1:
        raise ValueError(
            "exactly one of --p, --eta, --chi, --zeta1, --gamma must be given"
        )
    name, value = given[0]
    if name == "p":
        if not (0.0 <= value <= 1.0):
            raise ValueError(f"--p must lie in [0, 1], got {value}")
        return fam, float(value), "p", float(value)
    wanted = _SHRINK_FLAGS[name]
    if wanted is None:
        if fam.shrink_symbol != "chi":
            raise ValueError(f"--chi applies to flip families, not {fam.name!r}")
    elif fam.name != wanted:
        raise ValueError(f"--{name} applies to family {wanted!r}, not {fam.name!r}")
    return fam, fam.p_from_shrink(value), name, float(value)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_sweep(args) -> int:
    fam, p, param_name, param_value = _resolve_family_p(args)
    mus = _mu_grid(args)
    records = cap.sweep(fam, p, mus)
    comments = [
        f"family={fam.name}",
        f"fixed {param_name}={_fmt(param_value)} (p={_fmt(p)}, "
        f"{fam.shrink_symbol}={_fmt(fam.shrink(p))})",
        f"mu grid: {_fmt(mus[0])}..{_fmt(mus[-1])} in {len(mus)} steps",
        "ce columns: quantum mutual information at the maximally mixed "
        "input, bits; *_per_use = total / 2",
        HOLEVO_NOTE,
    ]
    header = [
        "family", "p", "mu", "shrink",
        "ce_total", "ce_per_use", "chi_product", "chi_entangled",
    ]
    rows = (
        [r.family, _fmt(r.p), _fmt(r.mu), _fmt(r.shrink),
         _fmt(r.ce_total), _fmt(r.ce_per_use),
         _fmt(r.chi_product), _fmt(r.chi_entangled)]
        for r in records
    )
    _write_csv(args.out, comments, header, rows)
    return 0


def cmd_figure1(args) -> int:
    fam = ch.DEPOLARIZING
    p = fam.p_from_shrink(args.eta)
    mus = _mu_grid(args)
    comments = [
        f"family=depolarizing eta={_fmt(args.eta)} (p={_fmt(p)})",
        "capacities are per channel use (totals over two uses divided by 2)",
        HOLEVO_NOTE,
    ]
    header = ["mu", "c_product_per_use", "c_entangled_per_use", "ce_per_use"]
    rows = []
    for mu in mus:
        chi_p, chi_e = cap.coding_chis(fam, p, float(mu))
        ce = cap.entanglement_assisted_capacity(fam, p, float(mu))
        rows.append([_fmt(mu), _fmt(chi_p / 2), _fmt(chi_e / 2), _fmt(ce / 2)])
    _write_csv(args.out, comments, header, rows)
    return 0


def cmd_figure2(args) -> int:
    if not (0.0 <= args.p <= 1.0):
        raise ValueError(f"--p must lie in [0, 1], got {args.p}")
    mus = _mu_grid(args)
    comments = [
        f"p={_fmt(args.p)}",
        "capacities are per channel use (totals over two uses divided by 2)",
        "flip column covers bit, phase and bit-phase flips: their capacity "
        "is an identical function of chi = 1 - 2p",
    ]
    header = ["mu", "ce_flip_per_use", "ce_phase_damping_per_use", "ce_two_pauli_per_use"]
    rows = []
    for mu in mus:
        row = [_fmt(mu)]
        for fam in (ch.BIT_FLIP, ch.PHASE_DAMPING, ch.TWO_PAULI):
            row.append(_fmt(cap.entanglement_assisted_capacity(fam, args.p, float(mu)) / 2))
        rows.append(row)
    _write_csv(args.out, comments, header, rows)
    return 0


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _mutated_depolarizing_spectrum(eta: float, mu: float) -> cap.Spectrum16:
    """Deliberately wrong closed form: the sign of one mu term is flipped."""
    vals = cap.depolarizing_spectrum(eta, mu).values.copy()
    a = 1 + 3 * eta
    vals[0] = a * (a * (1 - mu) - 4 * mu) / 16
    return cap.Spectrum16(vals, "closed_form")


def _closed_form(fam: ch.ChannelFamily, p: float, mu: float, mutate: bool):
    if mutate and fam.name == "depolarizing":
        return _mutated_depolarizing_spectrum(fam.shrink(p), mu)
    return cap.closed_form_spectrum(fam, p, mu)


def run_verification(grid_steps: int = 11, mutate_closed_form: bool = False):
    """Check every family over a (p, mu) grid; returns (ok, report_lines).

    Checks: Kraus completeness (two-use and lifted), closed-form vs numeric
    spectrum agreement, the entropy identity S(rho) + S(N(rho)) = 4, and the
    mu=0 factorization of the capacity into two single-use terms.
    """
    if grid_steps < 2:
        raise ValueError(f"grid_steps must be >= 2, got {grid_steps}")
    grid = np.linspace(0.0, 1.0, grid_steps)
    worst = {name: (0.0, None) for name in VERIFY_TOLS}

    def note(name, deviation, where):
        if deviation > worst[name][0]:
            worst[name] = (deviation, where)

    rho_in = ch.maximally_mixed(4)
    for fam in ch.FAMILIES.values():
        for p in grid:
            single = 2.0 - entropy_bits(cap.single_use_spectrum(fam, p))
            for mu in grid:
                where = (fam.name, float(p), float(mu))
                kset = ch.build_memory_kraus(fam, p, mu)
                lifted = ch.lift_to_purification(kset)
                note("completeness",
                     max(kset.completeness_defect(), ch.completeness_defect(lifted)),
                     where)

                numeric = cap.numeric_spectrum(fam, p, mu)
                closed = _closed_form(fam, p, mu, mutate_closed_form)
                closed_sorted = np.sort(closed.values)[::-1]
                note("spectrum_agreement",
                     float(np.abs(numeric.values - closed_sorted).max()), where)

                out = ch.apply_channel(kset.operators, rho_in)
                s_sum = von_neumann_entropy(rho_in) + von_neumann_entropy(out)
                note("entropy_identity", abs(s_sum - 4.0), where)

                if mu == 0.0:
                    ce = cap.capacity_from_spectrum(numeric)
                    note("mu0_factorization", abs(ce - 2.0 * single), where)

    lines = []
    ok = True
    for name, tol in VERIFY_TOLS.items():
        deviation, where = worst[name]
        passed = deviation <= tol
        ok = ok and passed
        status = "PASS" if passed else "FAIL"
        loc = ""
        if where is not None:
            fam_name, p, mu = where
            loc = f" at (family={fam_name}, p={_fmt(p)}, mu={_fmt(mu)})"
        lines.append(
            f"{status} {name}: worst deviation {deviation:.3e}{loc} "
            f"(tolerance {tol:.0e})"
        )
    lines.append("verification OK" if ok else "verification FAILED")
    return ok, lines


def cmd_verify(args) -> int:
    ok, lines = run_verification(args.grid_steps, args.inject_spectrum_bug)
    print("\n".join(lines))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _add_mu_args(sub, default_steps=101):
    sub.add_argument("--mu-start", type=float, default=0.0)
    sub.add_argument("--mu-end", type=float, default=1.0)
    sub.add_argument("--mu-steps", type=int, default=default_steps,
                     help="number of mu grid points (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulimem",
        description=(
            "Entanglement-assisted classical capacity of two consecutive "
            "uses of Pauli channels with Markov-correlated noise."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="capacity records over a mu grid (CSV)")
    sweep.add_argument("--family", required=True, choices=sorted(ch.FAMILIES))
    group = sweep.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=float, help="error probability in [0, 1]")
    group.add_argument("--eta", type=float, help="depolarizing shrinking factor")
    group.add_argument("--chi", type=float, help="flip shrinking factor")
    group.add_argument("--zeta1", type=float, help="two-Pauli shrinking factor")
    group.add_argument("--gamma", type=float, help="phase-damping shrinking factor")
    _add_mu_args(sweep)
    sweep.add_argument("--out", default="-", help="output CSV path (default stdout)")
    sweep.set_defaults(func=cmd_sweep)

    fig1 = sub.add_parser("figure1", help="depolarizing C_E vs coding chis (CSV)")
    fig1.add_argument("--eta", type=float, default=0.8)
    _add_mu_args(fig1)
    fig1.add_argument("--out", default="-")
    fig1.set_defaults(func=cmd_figure1)

    fig2 = sub.add_parser("figure2", help="flip/phase-damping/two-Pauli C_E (CSV)")
    fig2.add_argument("--p", type=float, default=0.5)
    _add_mu_args(fig2)
    fig2.add_argument("--out", default="-")
    fig2.set_defaults(func=cmd_figure2)

    verify = sub.add_parser(
        "verify", help="closed-form spectra against the numeric oracle"
    )
    verify.add_argument("--grid-steps", type=int, default=11)
    verify.add_argument(
        "--inject-spectrum-bug", action="store_true", help=argparse.SUPPRESS
    )
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
