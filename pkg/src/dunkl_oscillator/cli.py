"""Command-line front end: spectra, wavefunction grids, verification suites.

Output is deterministic: floats are printed with a fixed number of
significant digits (17 by default, enough to round-trip), rows come in a
fixed order, and files use UTF-8 with LF line endings and '.' decimals.

Exit codes: 0 success, 1 at least one verification check failed,
2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .angular_sector import AngularMode, SectorLabel, modes_for_sector
from .dunkl_calculus import Component, DunklParams
from .solution_builder import (
    IntegralityError,
    InvalidPairError,
    NegativeRadicandError,
    OscillatorConfig,
    Regime,
    RegimeError,
    build_spinor,
    classify_regime,
    energy,
    free_particle,
    pair_radial_indices,
)
from .verification import run_suite

THREADS_ENV_VAR = "DUNKL_OSC_THREADS"


@dataclass
class RunConfig:
    params: DunklParams
    config: OscillatorConfig
    sector: SectorLabel
    n_values: list[float]
    branches: list[int]
    k: int
    k_max: int
    fmt: str
    precision: int
    tol: float | None
    h: float
    threads: int
    negative_energies: bool
    grid_rho: int
    grid_phi: int
    free_energy: float | None
    suite: str


def _fmt(value: float, precision: int) -> str:
    return format(value, f".{precision}g")


def _parse_sector(text: str) -> SectorLabel:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise ValueError(f"sector must be 'SX,SY', got {text!r}")
    return SectorLabel(int(parts[0]), int(parts[1]))


def _parse_n_values(text: str, sector: SectorLabel) -> list[float]:
    def one(tok: str) -> float:
        v = float(tok)
        return v

    if ":" in text:
        lo, hi = (one(t) for t in text.split(":", 1))
    else:
        lo = hi = one(text)
    step = 1.0
    if sector.epsilon == -1 and abs(lo - round(lo)) < 0.25:
        lo += 0.5  # half-odd family starts at 1/2
    out = []
    v = lo
    while v <= hi + 1e-9:
        out.append(v)
        v += step
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunkl-oscillator",
        description="Spectra, wavefunctions and verification for the "
        "reflection-deformed relativistic oscillator in a magnetic field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mu-x", type=float, default=0.0)
        p.add_argument("--mu-y", type=float, default=0.0)
        p.add_argument("--omega", type=float, default=1.0)
        p.add_argument("--omega-c", type=float, default=0.0)
        p.add_argument("--sector", type=str, default="1,1", help="SX,SY with values +1/-1")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
        p.add_argument("--precision", type=int, default=17)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--h", type=float, default=1e-4)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--negative-energies", action="store_true")

    p_spec = sub.add_parser("spectrum", help="tabulate bound energies")
    common(p_spec)
    p_spec.add_argument(
        "--n", type=str, default="0:2",
        help="mode index or range lo:hi (snaps to the half-odd ladder in mixed-parity sectors)",
    )
    p_spec.add_argument("--branch", choices=("+", "-", "both"), default="both")
    p_spec.add_argument("--k-max", type=int, default=2)

    p_wf = sub.add_parser("wavefunction", help="export a state on a polar grid as CSV")
    common(p_wf)
    p_wf.add_argument("--n", type=str, default="1")
    p_wf.add_argument("--branch", choices=("+", "-"), default="+")
    p_wf.add_argument("--k", type=int, default=0)
    p_wf.add_argument("--grid-rho", type=int, default=12)
    p_wf.add_argument("--grid-phi", type=int, default=16)
    p_wf.add_argument("--energy", type=float, default=None,
                      help="free-particle energy (critical regime only)")

    p_ver = sub.add_parser("verify", help="run a verification suite, emit JSON")
    common(p_ver)
    p_ver.add_argument("--suite", choices=("kg", "angular", "ortho", "dirac", "nrlimit", "all"),
                       default="all")
    p_ver.add_argument("--n-max", type=float, default=2)
    p_ver.add_argument("--k-max", type=int, default=2)

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    if not 6 <= args.precision <= 17:
        raise ValueError("precision must be between 6 and 17 significant digits")
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV_VAR, "1"))
    if threads < 1:
        raise ValueError("threads must be >= 1")
    sector = _parse_sector(args.sector)
    branch_map = {"+": [1], "-": [-1], "both": [1, -1]}
    branches = branch_map.get(getattr(args, "branch", "both"), [1, -1])
    return RunConfig(
        params=DunklParams(args.mu_x, args.mu_y),
        config=OscillatorConfig(omega=args.omega, omega_c=args.omega_c),
        sector=sector,
        n_values=_parse_n_values(getattr(args, "n", "0:2"), sector),
        branches=branches,
        k=getattr(args, "k", 0),
        k_max=getattr(args, "k_max", 2),
        fmt=args.fmt,
        precision=args.precision,
        tol=args.tol,
        h=args.h,
        threads=threads,
        negative_energies=args.negative_energies,
        grid_rho=getattr(args, "grid_rho", 12),
        grid_phi=getattr(args, "grid_phi", 16),
        free_energy=getattr(args, "energy", None),
        suite=getattr(args, "suite", "all"),
    )


def _spectrum_rows(rc: RunConfig):
    regime = classify_regime(rc.config)
    rows = []
    for n in rc.n_values:
        for branch in rc.branches:
            if rc.sector.epsilon == 1 and n == 0 and branch == -1:
                continue
            try:
                mode = AngularMode(rc.sector, n if rc.sector.epsilon == -1 else int(n), branch, rc.params)
            except ValueError:
                continue
            for k in range(rc.k_max + 1):
                try:
                    e_up = energy(Component.UPPER, rc.sector, mode, k, rc.config, 1)
                except NegativeRadicandError:
                    e_up = None  # unphysical combination: marked, not dropped
                try:
                    kp = pair_radial_indices(rc.sector, regime, k, rc.params)
                    kp_txt = str(kp)
                except InvalidPairError:
                    kp_txt = "invalid"
                row = {
                    "sector": f"{rc.sector.s_x:+d}{rc.sector.s_y:+d}",
                    "n": n,
                    "branch": "+" if branch == 1 else "-",
                    "k": k,
                    "k_prime": kp_txt,
                    "E_plus": e_up,
                    "regime": regime.value,
                }
                if rc.negative_energies:
                    row["E_minus"] = None if e_up is None else -e_up
                rows.append(row)
    return rows


def cmd_spectrum(rc: RunConfig, out=sys.stdout) -> int:
    regime = classify_regime(rc.config)
    if regime is Regime.CRITICAL:
        out.write("regime=critical: no discrete spectrum; use "
                  "'wavefunction --energy E' for free-particle states\n")
        return 0
    rows = _spectrum_rows(rc)
    cols = ["sector", "n", "branch", "k", "k_prime", "E_plus"]
    if rc.negative_energies:
        cols.append("E_minus")
    cols.append("regime")
    if rc.fmt == "json":
        payload = []
        for row in rows:
            item = dict(row)
            for key in ("E_plus", "E_minus"):
                if key in item and item[key] is not None:
                    item[key] = float(_fmt(item[key], rc.precision))
                elif key in item:
                    item[key] = "unphysical"
            payload.append(item)
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0
    out.write(",".join(cols) + "\n")
    for row in rows:
        cells = []
        for col in cols:
            v = row[col]
            if v is None:
                cells.append("unphysical")
            elif isinstance(v, float):
                cells.append(_fmt(v, rc.precision))
            else:
                cells.append(str(v))
        out.write(",".join(cells) + "\n")
    return 0


def _wavefunction_grid(rc: RunConfig):
    regime = classify_regime(rc.config)
    if regime is Regime.POSITIVE:
        scale = math.sqrt(rc.config.hbar / (rc.config.m * rc.config.omega_tilde))
    elif regime is Regime.NEGATIVE:
        scale = math.sqrt(rc.config.hbar / (rc.config.m * rc.config.omega_bar))
    else:
        scale = rc.config.hbar / (rc.config.m * rc.config.c)
    rho = np.geomspace(0.1 * scale, 4.0 * scale, rc.grid_rho)
    phi = (np.arange(rc.grid_phi) + 0.5) * 2.0 * np.pi / rc.grid_phi
    return rho, phi


def cmd_wavefunction(rc: RunConfig, out=sys.stdout) -> int:
    regime = classify_regime(rc.config)
    n = rc.n_values[0]
    mode = AngularMode(rc.sector, n if rc.sector.epsilon == -1 else int(n), rc.branches[0], rc.params)
    if regime is Regime.CRITICAL:
        if rc.free_energy is None:
            raise ValueError("critical regime: supply --energy E >= m c^2")
        sol = free_particle(rc.sector, mode, rc.free_energy, rc.params, rc.config)
    else:
        sol = build_spinor(rc.sector, mode, rc.k, rc.config, 1)
    rho, phi = _wavefunction_grid(rc)
    out.write("rho,phi,re_upper,im_upper,re_lower,im_lower\n")
    p = rc.precision
    for r in rho:
        for f in phi:
            u = complex(sol.upper.eval_polar(r, f))
            lo = complex(sol.lower.eval_polar(r, f))
            out.write(
                f"{_fmt(r, p)},{_fmt(f, p)},{_fmt(u.real, p)},{_fmt(u.imag, p)},"
                f"{_fmt(lo.real, p)},{_fmt(lo.imag, p)}\n"
            )
    return 0


def cmd_verify(rc: RunConfig, out=sys.stdout) -> int:
    report = run_suite(
        rc.params,
        rc.config,
        suite=rc.suite,
        tol=rc.tol,
        h=rc.h,
        threads=rc.threads,
        n_max=2,
        k_max=rc.k_max,
    )
    out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        rc = _run_config(args)
        if args.command == "spectrum":
            return cmd_spectrum(rc)
        if args.command == "wavefunction":
            return cmd_wavefunction(rc)
        return cmd_verify(rc)
    except (ValueError, IntegralityError, InvalidPairError, NegativeRadicandError,
            RegimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
