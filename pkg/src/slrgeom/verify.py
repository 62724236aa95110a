"""Self-checks behind ``slrgeom verify``: table reproduction, tiling/mosaic
identities, and closed-form vs. integrated geodesics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from slrgeom import reference
from slrgeom.densities import covering_density, packing_density, verify_theorem_5_1
from slrgeom.geodesics import ode_deviation
from slrgeom.tilings import TilingParams, is_valid

IDENTITY_TOL = 1e-12
ODE_TOL = 1e-6
ODE_ALPHAS = tuple(round(0.2 * k, 10) for k in range(8))
ODE_S = tuple(np.linspace(0.05, 2.0, 40).tolist())

SUITES = ("tables", "identities", "ode")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<44s} worst={self.worst:.3e} tol={self.tolerance:.1e}"


def table_row_check(mode, row):
    p, q, *printed = row
    fn = packing_density if mode == "packing" else covering_density
    got = fn(TilingParams(p, q))
    computed = (got.radius, got.circle_area, got.base_area, got.density)
    worst = 0.0
    ok = True
    for want, have in zip(printed, computed):
        if want is None:
            continue
        err = abs(have - want)
        tol = reference.cell_tolerance(want)
        ok &= err <= tol
        # report errors in units of their tolerance so cells are comparable
        worst = max(worst, err / tol * reference.ABS_TOL)
    if printed[1] is None:
        err = abs(got.circle_area / got.base_area - printed[3])
        ok &= err <= reference.MISSING_AREA_TOL
        worst = max(worst, err / reference.MISSING_AREA_TOL * reference.ABS_TOL)
    return CheckResult(f"{mode} ({p},{q})", bool(ok), worst, reference.ABS_TOL)


def check_tables():
    return [table_row_check(mode, row)
            for mode in ("packing", "covering") for row in reference.TABLES[mode]]


def check_identities(p_max=50, q_max=50):
    worst = 0.0
    worst_pair = None
    for p in range(3, p_max + 1):
        for q in range(3, q_max + 1):
            if not is_valid(p, q):
                continue
            res = verify_theorem_5_1(TilingParams(p, q)).max_residual
            if res > worst:
                worst, worst_pair = res, (p, q)
    name = f"mosaic identities p,q<={max(p_max, q_max)} (worst at {worst_pair})"
    return [CheckResult(name, worst < IDENTITY_TOL, worst, IDENTITY_TOL)]


def check_ode(alphas=ODE_ALPHAS, s_values=ODE_S):
    out = []
    for a in alphas:
        dev = ode_deviation(a, s_values)
        out.append(CheckResult(f"geodesic ODE vs closed form alpha={a:.1f}",
                               dev < ODE_TOL, dev, ODE_TOL))
    return out


def run(suite):
    suites = SUITES if suite == "all" else (suite,)
    results = []
    for name in suites:
        results.extend({"tables": check_tables,
                        "identities": check_identities,
                        "ode": check_ode}[name]())
    return results
