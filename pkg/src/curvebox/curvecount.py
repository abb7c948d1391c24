"""Point counting for curves modulo q over boxes, and Vinogradov systems.

Counters come in pairs: a linear-time routine used by the pipeline and a
quadratic double loop kept as an oracle.  Both count lattice points (x, y)
in the half-open box (K, K+H] x (L, L+H].
"""
from dataclasses import dataclass
from itertools import product
from math import isqrt

from .arith import (
    BoxRegion,
    ModPoly,
    eval_poly_mod,
    interval_residue_count,
    is_probable_prime,
    sqrt_mod_prime,
)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SolutionSetX:
    """x-coordinates in a box that carry at least one solution.

    Offsets are relative to the left edge: x = base + u with u in [1, H].
    """

    base: int
    offsets: tuple[int, ...]

    def __len__(self):
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    def absolutes(self) -> tuple[int, ...]:
        return tuple(self.base + u for u in self.offsets)


def count_points_curve(f: ModPoly, box: BoxRegion) -> tuple[int, SolutionSetX]:
    """Count (x, y) in the box with y = f(x) (mod q), in O(H) time.

    Returns the total together with the set of x offsets that contribute.
    When H <= q each offset contributes exactly one point, so the total
    equals the size of the returned set.
    """
    q = f.q
    total = 0
    hits = []
    for u in range(1, box.H + 1):
        r = eval_poly_mod(f, box.K + u)
        c = interval_residue_count(box.L, box.H, r, q)
        if c:
            total += c
            hits.append(u)
    return total, SolutionSetX(box.K, tuple(hits))


def count_points_naive(f: ModPoly, box: BoxRegion) -> int:
    """Literal double loop over the box; O(H^2) oracle."""
    q = f.q
    total = 0
    for x in range(box.K + 1, box.K + box.H + 1):
        r = eval_poly_mod(f, x)
        for y in range(box.L + 1, box.L + box.H + 1):
            if (y - r) % q == 0:
                total += 1
    return total


def _hyper_counts_prime(f: ModPoly, c0: int, box: BoxRegion):
    # complete the square; valid only for prime modulus
    p = f.q
    for u in range(1, box.H + 1):
        r = eval_poly_mod(f, box.K + u)
        if p == 2:
            c = 0
            for rho in (0, 1):
                if (rho * rho - c0 * rho - r) % 2 == 0:
                    c += interval_residue_count(box.L, box.H, rho, 2)
            yield u, c
            continue
        half = c0 * ((p + 1) // 2) % p
        c = 0
        for s in sqrt_mod_prime((r + half * half) % p, p):
            c += interval_residue_count(box.L, box.H, (half + s) % p, p)
        yield u, c


def _hyper_counts_table(f: ModPoly, c0: int, box: BoxRegion):
    # one pass over the y side builds the residue histogram
    q = f.q
    table: dict = {}
    for v in range(1, box.H + 1):
        y = box.L + v
        key = (y * y - c0 * y) % q
        table[key] = table.get(key, 0) + 1
    for u in range(1, box.H + 1):
        r = eval_poly_mod(f, box.K + u)
        yield u, table.get(r, 0)


def count_points_hyperelliptic(
    f: ModPoly, c0: int, box: BoxRegion
) -> tuple[int, SolutionSetX]:
    """Count (x, y) in the box with y^2 - c0*y = f(x) (mod q).

    For prime q with H^2 > q the count per x goes through a square root
    mod q; otherwise a residue histogram of the y side is used.  Both run
    in O(H) arithmetic operations.
    """
    if box.H * box.H > f.q and is_probable_prime(f.q):
        pairs = _hyper_counts_prime(f, c0, box)
    else:
        pairs = _hyper_counts_table(f, c0, box)
    total = 0
    hits = []
    for u, c in pairs:
        if c:
            total += c
            hits.append(u)
    return total, SolutionSetX(box.K, tuple(hits))


def count_points_hyperelliptic_naive(f: ModPoly, c0: int, box: BoxRegion) -> int:
    """Double-loop oracle for the hyperelliptic counter."""
    q = f.q
    total = 0
    for x in range(box.K + 1, box.K + box.H + 1):
        r = eval_poly_mod(f, x)
        for y in range(box.L + 1, box.L + box.H + 1):
            if (y * y - c0 * y - r) % q == 0:
                total += 1
    return total


class BudgetExceeded(Exception):
    """Raised when a Vinogradov instance is larger than the allowed budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"instance size {needed} exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


def _distinct_xs(xs) -> tuple[int, ...]:
    out = tuple(int(x) for x in xs)
    if len(set(out)) != len(out):
        raise ValueError("x values must be distinct")
    return tuple(sorted(out))


def vinogradov_count(xs, k: int, s: int, budget: int = DEFAULT_BUDGET) -> int:
    """J_{k,s}(X): ordered 2s-tuples from X with equal power sums up to k.

    The work is organised as s convolutions of the map x -> (x, ..., x^k),
    so the cost is governed by the number of distinct power-sum vectors.
    The budget is still charged as |X|**s, the size of one side of the
    system, and BudgetExceeded is raised when that exceeds the budget.
    """
    if k < 1 or s < 1:
        raise ValueError("k and s must be positive")
    xs = _distinct_xs(xs)
    m = len(xs)
    if m**s > budget:
        raise BudgetExceeded(m**s, budget)
    step = {}
    for x in xs:
        step[tuple(x**j for j in range(1, k + 1))] = 1
    acc = dict(step)
    for _ in range(s - 1):
        nxt: dict = {}
        for key1, c1 in acc.items():
            for key2, c2 in step.items():
                key = tuple(a + b for a, b in zip(key1, key2))
                nxt[key] = nxt.get(key, 0) + c1 * c2
        acc = nxt
    return sum(c * c for c in acc.values())


def vinogradov_count_full(xs, k: int, s: int) -> int:
    """Oracle: scan all |X|^(2s) tuples and test the system directly."""
    xs = _distinct_xs(xs)
    count = 0
    for tup in product(xs, repeat=2 * s):
        for j in range(1, k + 1):
            if sum(x**j for x in tup[:s]) != sum(x**j for x in tup[s:]):
                break
        else:
            count += 1
    return count


@dataclass(frozen=True)
class VinogradovInstance:
    k: int
    s: int
    xs: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or self.s < 1:
            raise ValueError("k and s must be positive")
        object.__setattr__(self, "xs", _distinct_xs(self.xs))

    @property
    def in_critical_range(self) -> bool:
        # the regime s <= k(k+1)/2 where the near-diagonal bound applies
        return self.s <= self.k * (self.k + 1) // 2

    def count(self, budget: int = DEFAULT_BUDGET) -> int:
        return vinogradov_count(self.xs, self.k, self.s, budget)


def _eval_lift(w0: int, w, x: int) -> int:
    acc = 0
    for wi in reversed(w):
        acc = acc * x + wi
    return acc * x + w0


def count_lifted_points(z: int, w0: int, w, q: int, t: int, H: int) -> int:
    """Points (x, y) in [1,H]^2 with w0 + sum_i w[i-1]*x^i - z*y = t*q."""
    total = 0
    target = t * q
    for x in range(1, H + 1):
        num = _eval_lift(w0, w, x) - target
        if z == 0:
            if num == 0:
                total += H
        elif num % z == 0 and 1 <= num // z <= H:
            total += 1
    return total


def _quadratic_int_roots(a: int, b: int, c: int) -> tuple[int, ...]:
    """Integer roots of a*y^2 + b*y + c = 0, ascending, without multiplicity."""
    if a == 0:
        if b == 0:
            raise ValueError("degenerate equation")
        return ((-c) // b,) if c % b == 0 else ()
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    s = isqrt(disc)
    if s * s != disc:
        return ()
    roots = set()
    for root_part in (s, -s):
        num = -b + root_part
        if num % (2 * a) == 0:
            roots.add(num // (2 * a))
    return tuple(sorted(roots))


def count_lifted_points_quadratic(
    n: int, z1: int, w0: int, w, q: int, t: int, H: int
) -> int:
    """Points (x, y) in [1,H]^2 with n*y^2 - z1*y - (w0 + sum w_i x^i) = t*q."""
    total = 0
    target = t * q
    for x in range(1, H + 1):
        c = -(_eval_lift(w0, w, x) + target)
        if n == 0 and z1 == 0:
            if c == 0:
                total += H
            continue
        for y in _quadratic_int_roots(n, -z1, c):
            if 1 <= y <= H:
                total += 1
    return total
