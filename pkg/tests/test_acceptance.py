"""Acceptance gate: nine release criteria, one test and one report line each.

Run with -v -s to see the checklist.  Every criterion folds its runtime pin
into the pass condition, so a slow machine shows an honest FAIL line rather
than a silent overrun.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

from curvebox.arith import BoxRegion, integer_nth_root
from curvebox.curvecount import (
    count_points_curve,
    count_points_hyperelliptic,
    count_points_hyperelliptic_naive,
    count_points_naive,
)
from curvebox.reduction import (
    theorem3_critical_exponent,
    theorem3_exponents,
    theorem4_critical_exponent,
    theorem4_exponents,
)
from curvebox.rng import SplitMix64, random_modpoly, random_prime
from curvebox.verify import run_suite


def _line(num, label, ok, detail):
    print(f"criterion {num} ({label}): {'PASS' if ok else 'FAIL'}; {detail}")
    return ok


def test_criterion_1_oracle_equivalence():
    t0 = time.monotonic()
    rng = SplitMix64(11001)
    mismatches = 0
    for trial in range(120):
        q = 2 + rng.below(9999)
        box = BoxRegion(rng.range(-q, q), rng.range(-q, q), 1 + rng.below(100))
        f = random_modpoly(rng, q, 2 + trial % 2)
        n, _ = count_points_curve(f, box)
        if n != count_points_naive(f, box):
            mismatches += 1
    fast_cells = 0
    for trial in range(100):
        if trial % 2:
            # prime q with H^2 > q forces the square-root path
            q = random_prime(rng, 200, 5000)
            H = math.isqrt(q) + 1 + rng.below(9)
            fast_cells += 1
        else:
            q = 2 + rng.below(9999)
            H = 1 + rng.below(100)
        box = BoxRegion(rng.range(-q, q), rng.range(-q, q), H)
        f = random_modpoly(rng, q, 3)
        c0 = rng.below(q)
        n, _ = count_points_hyperelliptic(f, c0, box)
        if n != count_points_hyperelliptic_naive(f, c0, box):
            mismatches += 1
    dt = time.monotonic() - t0
    ok = mismatches == 0 and fast_cells >= 50 and dt < 30.0
    assert _line(
        1,
        "oracle equivalence",
        ok,
        f"220 instances, {mismatches} mismatches, {fast_cells} prime fast-path cells, {dt:.1f}s (pin 30s)",
    )


def test_criterion_2_geometry_of_numbers_suite():
    t0 = time.monotonic()
    res = run_suite("gon")[0]
    dt = time.monotonic() - t0
    ok = res.failures == 0 and res.checks >= 300 and dt < 120.0
    assert _line(
        2,
        "Minkowski / transference / point count",
        ok,
        f"{res.checks} checks, {res.failures} failures, {dt:.1f}s (pin 120s)",
    )


def test_criterion_3_central_inequality():
    t0 = time.monotonic()
    res = run_suite("n2din")[0]
    dt = time.monotonic() - t0
    # 4 moduli x 7 side lengths x 5 polynomials
    ok = res.failures == 0 and res.checks == 140 and dt < 120.0
    assert _line(
        3,
        "N^6 bounded by lattice points times J_23",
        ok,
        f"{res.checks} checks, {res.failures} failures, {dt:.1f}s (pin 120s)",
    )


def test_criterion_4_lift_soundness():
    t0 = time.monotonic()
    res = run_suite("lift")[0]
    dt = time.monotonic() - t0
    ok = res.failures == 0 and res.checks >= 200 and not res.notes and dt < 60.0
    assert _line(
        4,
        "lift covers all box solutions",
        ok,
        f"{res.checks} checks, {res.failures} failures, {dt:.1f}s (pin 60s)",
    )


def test_criterion_5_degree_d_regime_sweep():
    t0 = time.monotonic()
    rng = SplitMix64(11005)
    worst = Fraction(0)
    for _ in range(20):
        q = random_prime(rng, 10**5, 10**7)
        H = integer_nth_root(q * q, 5)
        for _ in range(3):
            f = random_modpoly(rng, q, 2)
            n, _ = count_points_curve(f, BoxRegion(0, 0, H))
            worst = max(worst, Fraction(n * n, H))
    dt = time.monotonic() - t0
    ok = worst <= 100 and dt < 60.0
    assert _line(
        5,
        "N over sqrt(H) at H = q^(2/5)",
        ok,
        f"60 instances, max ratio {math.sqrt(worst):.3f} (pin 10), {dt:.1f}s (pin 60s)",
    )


def test_criterion_6_hyperelliptic_regime_sweep():
    t0 = time.monotonic()
    rng = SplitMix64(11006)
    worst = Fraction(0)
    for _ in range(20):
        q = random_prime(rng, 10**7, 10**9)
        H = integer_nth_root(q, 7)
        for _ in range(3):
            f = random_modpoly(rng, q, 3)
            c0 = rng.below(q)
            n, _ = count_points_hyperelliptic(f, c0, BoxRegion(0, 0, H))
            worst = max(worst, Fraction(n**3, H))
    dt = time.monotonic() - t0
    ok = worst <= 1000 and dt < 120.0
    assert _line(
        6,
        "N over cbrt(H) at H = q^(1/7)",
        ok,
        f"60 instances, max ratio {worst ** (1 / 3) if worst else 0.0:.3f} (pin 10), {dt:.1f}s (pin 120s)",
    )


def test_criterion_7_vinogradov_properties():
    t0 = time.monotonic()
    res = run_suite("vino")[0]
    dt = time.monotonic() - t0
    ok = res.failures == 0 and res.checks >= 100 and dt < 60.0
    assert _line(
        7,
        "J lower bound, shift invariance, full enumeration",
        ok,
        f"{res.checks} checks, {res.failures} failures, {dt:.1f}s (pin 60s)",
    )


def test_criterion_8_exponent_identities():
    bad = 0
    for d in (2, 3, 4, 5):
        e = theorem3_critical_exponent(d)
        a, b = theorem3_exponents(d, e)
        if not (a == b == Fraction(2, d * (d * d + 1))):
            bad += 1
        # main term takes over strictly above the critical exponent
        a_hi, b_hi = theorem3_exponents(d, e + Fraction(1, 1000))
        a_lo, b_lo = theorem3_exponents(d, e - Fraction(1, 1000))
        if not (a_hi > b_hi and a_lo < b_lo):
            bad += 1
    e4 = theorem4_critical_exponent()
    a4, b4 = theorem4_exponents(e4)
    if not (a4 == b4 == Fraction(1, 21)):
        bad += 1
    ok = bad == 0
    assert _line(8, "bound terms coincide at the crossover", ok, f"{bad} exponent mismatches")


def test_criterion_9_sweep_determinism():
    t0 = time.monotonic()
    cmd = [
        sys.executable,
        "-m",
        "curvebox",
        "sweep",
        "--q",
        "101,169,211",
        "--d",
        "2",
        "--h",
        "5",
        "--per-cell",
        "2",
        "--seed",
        "20260822",
    ]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    dt = time.monotonic() - t0
    ok = (
        first.returncode == 0
        and second.returncode == 0
        and first.stdout == second.stdout
        and len(first.stdout.splitlines()) == 7
    )
    assert _line(
        9,
        "sweep is byte-deterministic",
        ok,
        f"{len(first.stdout)} bytes per run, identical={first.stdout == second.stdout}, {dt:.1f}s",
    )
