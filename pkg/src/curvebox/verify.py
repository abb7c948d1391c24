"""Seeded verification suites behind the verify subcommand.

Each suite replays one family of invariants at a fixed seed and reports
exact check/failure counts, so a build either passes a suite forever or
fails it forever.  The acceptance tests call the same functions; the
command line only formats the results.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .arith import BoxRegion, ModPoly
from .curvecount import (
    count_points_curve,
    vinogradov_count,
    vinogradov_count_full,
)
from .gon import (
    IntegerLattice,
    WeightedBody,
    bareiss_determinant,
    dual_body,
    dual_lattice,
    enumerate_lattice_points,
    successive_minima,
)
from .reduction import classify_case, count_congruence_box
from .rng import SplitMix64, random_modpoly

SUITE_NAMES = ("gon", "n2din", "lift", "vino")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: int
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _random_lattice(rng, n, spread=5):
    while True:
        rows = tuple(
            tuple(rng.range(-spread, spread) for _ in range(n)) for _ in range(n)
        )
        if bareiss_determinant(rows):
            return IntegerLattice(rows)


def suite_gon(seed: int = 101, lattices: int = 100) -> SuiteResult:
    """Minkowski second theorem, transference, and the point-count bound."""
    rng = SplitMix64(seed)
    checks = failures = 0
    for trial in range(lattices):
        n = 2 + rng.below(5)
        lat = _random_lattice(rng, n)
        if trial % 2:
            body = WeightedBody.box(tuple(Fraction(1 + rng.below(3)) for _ in range(n)))
        else:
            body = WeightedBody.box((Fraction(1),) * n)
        lams = successive_minima(lat, body).lambdas

        ratio = body.volume() / lat.covolume
        for lam in lams:
            ratio *= lam
        checks += 1
        if not Fraction(2**n, factorial(n)) <= ratio <= 2**n:
            failures += 1

        dlams = successive_minima(dual_lattice(lat), dual_body(body)).lambdas
        checks += 1
        if not all(lams[j] * dlams[n - 1 - j] >= 1 for j in range(n)):
            failures += 1

        inside = len(enumerate_lattice_points(lat, body))
        bound = 6**n
        for lam in lams:
            bound *= max(1, 1 / lam)
        checks += 1
        if not inside <= bound:
            failures += 1
    return SuiteResult("gon", checks, failures)


def suite_n2din(seed: int = 202) -> SuiteResult:
    """N^6 <= |L cap D| * J_{2,3}(X) across the quadratic grid."""
    rng = SplitMix64(seed)
    checks = failures = 0
    for q in (101, 127, 169, 200):
        for H in range(2, 9):
            for _ in range(5):
                f = random_modpoly(rng, q, 2)
                n, sx = count_points_curve(f, BoxRegion(0, 0, H))
                j = vinogradov_count(sx.offsets, 2, 3)
                ld = count_congruence_box(f, H)
                checks += 1
                if not n**6 <= ld * j:
                    failures += 1
    return SuiteResult("n2din", checks, failures)


def suite_lift(seed: int = 303, instances: int = 100) -> SuiteResult:
    """Lifted families cover every box solution with an in-range t."""
    rng = SplitMix64(seed)
    checks = failures = 0
    done = attempts = 0
    while done < instances and attempts < 20 * instances:
        attempts += 1
        q = 1000 + rng.below(10**6)
        d = 2 + rng.below(2)
        H = 2 + rng.below(5)
        f = random_modpoly(rng, q, d)
        report = classify_case(f, H)
        if report.case != "lift":
            continue
        done += 1
        lift = report.lift
        n_box = 0
        covered = True
        for x in range(1, H + 1):
            fx = sum(f.coeffs[i] * x**i for i in range(d + 1)) % q
            for y in range(1, H + 1):
                if (y - fx) % q:
                    continue
                n_box += 1
                t = lift.t_of(x, y)
                if t is None or not lift.t_range[0] <= t <= lift.t_range[1]:
                    covered = False
        checks += 2
        if not covered:
            failures += 1
        if not n_box <= lift.total_count():
            failures += 1
    if done < instances:
        return SuiteResult("lift", checks + 1, failures + 1, ("too few lift draws",))
    return SuiteResult("lift", checks, failures)


def _distinct_set(rng, size, lo=-40, hi=40):
    xs = set()
    while len(xs) < size:
        xs.add(rng.range(lo, hi))
    return tuple(sorted(xs))


def suite_vino(seed: int = 404) -> SuiteResult:
    """Shift invariance, the diagonal lower bound, and the full-scan oracle."""
    rng = SplitMix64(seed)
    checks = failures = 0
    for trial in range(50):
        k, s = (2, 3) if trial % 2 else (3, 6)
        xs = _distinct_set(rng, 2 + rng.below(11))
        c = rng.range(-20, 20)
        j = vinogradov_count(xs, k, s)
        checks += 2
        if j != vinogradov_count(tuple(x + c for x in xs), k, s):
            failures += 1
        if not j >= len(xs) ** s:
            failures += 1
        # the full scan is |X|^(2s) work, so keep it to small sets
        if k == 2 and len(xs) <= 6:
            checks += 1
            if j != vinogradov_count_full(xs, k, s):
                failures += 1
    xs = _distinct_set(rng, 3, -8, 8)
    checks += 1
    if vinogradov_count(xs, 3, 6) != vinogradov_count_full(xs, 3, 6):
        failures += 1
    return SuiteResult("vino", checks, failures)


def run_suite(name: str, seed=None) -> list:
    """Run one named suite, or all of them; unknown names raise ValueError."""
    table = {
        "gon": suite_gon,
        "n2din": suite_n2din,
        "lift": suite_lift,
        "vino": suite_vino,
    }
    if name == "all":
        names = SUITE_NAMES
    elif name in table:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r}; pick from gon, n2din, lift, vino, all")
    out = []
    for nm in names:
        out.append(table[nm]() if seed is None else table[nm](seed))
    return out
