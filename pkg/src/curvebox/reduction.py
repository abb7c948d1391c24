"""Congruence lattices for curves in boxes, short dual vectors, and bounds.

The pipeline for y = f(x) (mod q) over a unit-normalized box of side H:
build the congruence lattice and the weighted box body, read the case off
the successive minima, and in the lift case produce an integer curve that
every box solution must sit on.  All comparisons between powers of H and
q are exact integer comparisons; decimal output is floor-bracketed to a
fixed number of digits.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .arith import (
    ModPoly,
    integer_nth_root,
    interval_residue_count,
    least_absolute_residue,
)
from .curvecount import count_lifted_points, count_lifted_points_quadratic
from .gon import (
    DimensionTooLarge,
    IntegerLattice,
    WeightedBody,
    _enumerate_numerators,
    body_norm,
    dual_body,
    dual_lattice,
    successive_minima,
)


def size_constant(d: int) -> int:
    """The constant s = d(d+1)/2 used both as body constant and size cap."""
    return d * (d + 1) // 2


def build_congruence_lattice(f: ModPoly) -> IntegerLattice:
    """Lattice of (v0, ..., vd) with v0 + a1 v1 + ... + ad vd = 0 (mod q).

    Solution differences (y - y', x - x', ..., x^d - x'^d) of the curve
    y = f(x) (mod q) land in this lattice.  Covolume is q.
    """
    d, q = f.degree, f.q
    rows = [(q,) + (0,) * d]
    for i in range(1, d + 1):
        rows.append(tuple(-f.coeffs[i] if j == 0 else int(j == i) for j in range(d + 1)))
    return IntegerLattice(tuple(rows))


def build_body(d: int, H: int, c=None) -> WeightedBody:
    """Weighted box with sides (cH, cH, cH^2, ..., cH^d); default c = s."""
    if d < 2 or H < 1:
        raise ValueError("need degree >= 2 and H >= 1")
    if c is None:
        c = size_constant(d)
    return WeightedBody.box((Fraction(c) * H,) + tuple(Fraction(c) * H**i for i in range(1, d + 1)))


@dataclass(frozen=True)
class PowerThreshold:
    """The exact comparison of H**h_exp against q**q_exp."""

    h_exp: int
    q_exp: int

    def le(self, H: int, q: int) -> bool:
        return H**self.h_exp <= q**self.q_exp

    def ge(self, H: int, q: int) -> bool:
        return H**self.h_exp >= q**self.q_exp

    def crossing(self, q: int) -> int:
        """Largest H with H**h_exp <= q**q_exp."""
        return integer_nth_root(q**self.q_exp, self.h_exp)


def minkowski_first_threshold(d: int) -> PowerThreshold:
    """Threshold H^(d^2+d+2) vs q^2 for the unit-constant body.

    Once ge(H, q) holds the body volume reaches 2^(d+1) q, so the first
    minimum of build_body(d, H, 1) is at most 1.
    """
    return PowerThreshold(d * d + d + 2, 2)


def count_congruence_box(f: ModPoly, H: int, c=None, scale=1) -> int:
    """|L intersect scale*D| by direct residue counting.

    Iterates over the (v1, ..., vd) block of the box and counts the v0
    residue class in closed form, so the cost is the product of the last
    d box sides and is independent of q.
    """
    d, q = f.degree, f.q
    body = build_body(d, H, c)
    w0 = int(Fraction(scale) * body.weights[0])
    limits = [int(Fraction(scale) * w) for w in body.weights[1:]]
    total = 0
    for tail in product(*[range(-m, m + 1) for m in limits]):
        r = -sum(a * v for a, v in zip(f.coeffs[1:], tail)) % q
        total += interval_residue_count(-w0 - 1, 2 * w0 + 1, r, q)
    return total


@dataclass(frozen=True)
class ShortDualVector:
    """A shortest dual vector (z, w1, ..., wd) with wd != 0.

    Satisfies w_i = n*a_i and z = n (mod q), so w0 + sum w_i x^i - z*y
    vanishes mod q on every solution of y = f(x) (mod q), where w0 is the
    least absolute residue of n*a0.  norm is the dual-body gauge.
    """

    n: int
    z: int
    w: tuple
    w0: int
    norm: Fraction
    size_constant: int


def find_short_dual_vector(f: ModPoly, H: int, c=None, max_nodes=None) -> ShortDualVector:
    """Minimize the dual gauge over dual vectors with wd != 0.

    Radius doubling: every enumeration pass sees all dual points within
    the current radius, so the first pass that surfaces an admissible
    vector yields the global restricted minimum.  The reduced n=1 tuple
    and the vector q*e_d cap the search radius.
    """
    d, q = f.degree, f.q
    if c is None:
        c = size_constant(d)
    lat = build_congruence_lattice(f)
    dual = dual_lattice(lat)
    dbody = dual_body(build_body(d, H, c))
    g = q // dual.denom

    def gauge_of(zw) -> Fraction:
        return Fraction(c) * sum(abs(t) * H**max(1, i) for i, t in enumerate(zw)) / q

    cand1 = (1,) + tuple(least_absolute_residue(f.coeffs[i], q) for i in range(1, d + 1))
    cap = min(gauge_of(cand1), Fraction(c) * H**d)
    radius = min(Fraction(c * H), Fraction(c * H**d, q), cap)
    while True:
        best = None
        for numer in _enumerate_numerators(dual, dbody, radius * dual.denom, max_nodes):
            if numer[-1] == 0:
                continue
            norm = body_norm(numer, dbody) / dual.denom
            if best is None or (norm, numer) < best[:2]:
                best = (norm, numer)
        if best is not None:
            norm, numer = best
            zw = tuple(t * g for t in numer)
            if zw[0] < 0 or (zw[0] == 0 and zw[-1] < 0):
                zw = tuple(-t for t in zw)
            n = zw[0]
            return ShortDualVector(
                n=n,
                z=zw[0],
                w=zw[1:],
                w0=least_absolute_residue(n * f.coeffs[0], q),
                norm=norm,
                size_constant=c,
            )
        if radius >= cap:
            raise AssertionError("certificate vector not found within its own radius")
        radius = min(2 * radius, cap)


@dataclass(frozen=True)
class LiftedCurve:
    """Integer curve family w0 + sum w_i x^i - z*y = t*q over [1,H]^2.

    Every solution of y = f(x) (mod q) with x, y in [1, H] lies on the
    member with its own integer t, and t_range (inclusive) covers all
    values t can take on the box.
    """

    n: int
    z: int
    w0: int
    w: tuple
    q: int
    H: int
    t_range: tuple

    def t_of(self, x: int, y: int) -> Optional[int]:
        num = self.w0 + sum(wi * x**i for i, wi in enumerate(self.w, start=1)) - self.z * y
        if num % self.q:
            return None
        return num // self.q

    def count_for_t(self, t: int) -> int:
        return count_lifted_points(self.z, self.w0, self.w, self.q, t, self.H)

    def total_count(self) -> int:
        lo, hi = self.t_range
        return sum(self.count_for_t(t) for t in range(lo, hi + 1))


def _term_range(coeff: int, low_power: int, high_power: int) -> tuple:
    vals = (coeff * low_power, coeff * high_power)
    return min(vals), max(vals)


def lift_curve(f: ModPoly, H: int, short: Optional[ShortDualVector] = None) -> LiftedCurve:
    """Lift the short dual relation to an integer curve family on [1,H]^2."""
    q = f.q
    if short is None:
        short = find_short_dual_vector(f, H)
    lo = hi = short.w0
    for i, wi in enumerate(short.w, start=1):
        a, b = _term_range(wi, 1, H**i)
        lo += a
        hi += b
    a, b = _term_range(-short.z, 1, H)
    lo += a
    hi += b
    t_range = (-((-lo) // q), hi // q)
    return LiftedCurve(
        n=short.n, z=short.z, w0=short.w0, w=short.w, q=q, H=H, t_range=t_range
    )


@dataclass(frozen=True)
class CaseReport:
    """Outcome of the case split for one instance."""

    case: str
    lambdas: tuple
    spread_count: Optional[int] = None
    lift: object = None


def classify_case(f: ModPoly, H: int, c=None, with_spread_count: bool = False) -> CaseReport:
    """Spread when the last minimum is below 1, lift otherwise.

    Spread means all d+1 minima of the weighted body are small, so the
    lattice meets the body in a full-rank set; the optional count walks
    the coefficient box and can be expensive for large H.
    """
    d = f.degree
    if d > 5:
        raise DimensionTooLarge("case split supports degree at most 5")
    lat = build_congruence_lattice(f)
    body = build_body(d, H, c)
    prof = successive_minima(lat, body)
    if prof.lambdas[-1] < 1:
        spread = count_congruence_box(f, H, c) if with_spread_count else None
        return CaseReport(case="spread", lambdas=prof.lambdas, spread_count=spread)
    return CaseReport(case="lift", lambdas=prof.lambdas, lift=lift_curve(f, H))


def build_hyperelliptic_lattice(f: ModPoly, c0: int) -> IntegerLattice:
    """Lattice for y^2 - c0*y = f(x) (mod q) with f cubic; covolume q.

    Coordinates (v1, v2, v3, v4, v5) track differences of
    (x, x^2, x^3, y, y^2); membership is
    a1 v1 + a2 v2 + a3 v3 + c0 v4 + v5 = 0 (mod q).
    """
    if f.degree != 3:
        raise ValueError("hyperelliptic pipeline needs a cubic right side")
    q = f.q
    a1, a2, a3 = f.coeffs[1], f.coeffs[2], f.coeffs[3]
    rows = (
        (1, 0, 0, 0, -a1),
        (0, 1, 0, 0, -a2),
        (0, 0, 1, 0, -a3),
        (0, 0, 0, 1, -c0 % q),
        (0, 0, 0, 0, q),
    )
    return IntegerLattice(rows)


def build_hyperelliptic_body(H: int) -> WeightedBody:
    """Weighted box with sides 6*(H, H^2, H^3, H, H^2)."""
    if H < 1:
        raise ValueError("H must be positive")
    return WeightedBody.box(tuple(Fraction(6) * H**e for e in (1, 2, 3, 1, 2)))


@dataclass(frozen=True)
class ShortDualVectorQuadratic:
    """Shortest hyperelliptic dual vector (w1, w2, w3, z1, z2), z2 != 0.

    Satisfies w_i = a_i*n, z1 = c0*n, z2 = n (mod q) for n = z2, so
    n*y^2 - z1*y - (w0 + w1 x + w2 x^2 + w3 x^3) vanishes mod q on every
    curve point, with w0 the least absolute residue of n*a0.
    """

    n: int
    z1: int
    w: tuple
    w0: int
    norm: Fraction
    size_constant: int


def find_short_dual_vector_hyperelliptic(
    f: ModPoly, c0: int, H: int, max_nodes=None
) -> ShortDualVectorQuadratic:
    """Minimize the dual gauge over hyperelliptic dual vectors, z2 != 0."""
    q = f.q
    lat = build_hyperelliptic_lattice(f, c0)
    dual = dual_lattice(lat)
    dbody = dual_body(build_hyperelliptic_body(H))
    g = q // dual.denom
    exps = (1, 2, 3, 1, 2)

    def gauge_of(vec) -> Fraction:
        return Fraction(6) * sum(abs(t) * H**e for t, e in zip(vec, exps)) / q

    cand1 = tuple(least_absolute_residue(v, q) for v in (f.coeffs[1], f.coeffs[2], f.coeffs[3], c0, 1))
    cap = min(gauge_of(cand1), Fraction(6) * H**2)
    radius = min(Fraction(6 * H), Fraction(6 * H**2, q), cap)
    while True:
        best = None
        for numer in _enumerate_numerators(dual, dbody, radius * dual.denom, max_nodes):
            if numer[-1] == 0:
                continue
            norm = body_norm(numer, dbody) / dual.denom
            if best is None or (norm, numer) < best[:2]:
                best = (norm, numer)
        if best is not None:
            norm, numer = best
            vec = tuple(t * g for t in numer)
            if vec[-1] < 0:
                vec = tuple(-t for t in vec)
            n = vec[-1]
            return ShortDualVectorQuadratic(
                n=n,
                z1=vec[3],
                w=vec[:3],
                w0=least_absolute_residue(n * f.coeffs[0], q),
                norm=norm,
                size_constant=6,
            )
        if radius >= cap:
            raise AssertionError("certificate vector not found within its own radius")
        radius = min(2 * radius, cap)


@dataclass(frozen=True)
class LiftedQuadraticCurve:
    """Integer family n*y^2 - z1*y - (w0 + sum w_i x^i) = t*q over [1,H]^2."""

    n: int
    z1: int
    w0: int
    w: tuple
    q: int
    H: int
    t_range: tuple

    def t_of(self, x: int, y: int) -> Optional[int]:
        num = (
            self.n * y * y
            - self.z1 * y
            - (self.w0 + sum(wi * x**i for i, wi in enumerate(self.w, start=1)))
        )
        if num % self.q:
            return None
        return num // self.q

    def count_for_t(self, t: int) -> int:
        return count_lifted_points_quadratic(
            self.n, self.z1, self.w0, self.w, self.q, t, self.H
        )

    def total_count(self) -> int:
        lo, hi = self.t_range
        return sum(self.count_for_t(t) for t in range(lo, hi + 1))


def lift_hyperelliptic(
    f: ModPoly, c0: int, H: int, short: Optional[ShortDualVectorQuadratic] = None
) -> LiftedQuadraticCurve:
    """Lift the short hyperelliptic dual relation to an integer family."""
    q = f.q
    if short is None:
        short = find_short_dual_vector_hyperelliptic(f, c0, H)
    lo = hi = -short.w0
    a, b = _term_range(short.n, 1, H * H)
    lo += a
    hi += b
    a, b = _term_range(-short.z1, 1, H)
    lo += a
    hi += b
    for i, wi in enumerate(short.w, start=1):
        a, b = _term_range(-wi, 1, H**i)
        lo += a
        hi += b
    t_range = (-((-lo) // q), hi // q)
    return LiftedQuadraticCurve(
        n=short.n, z1=short.z1, w0=short.w0, w=short.w, q=q, H=H, t_range=t_range
    )


def classify_case_hyperelliptic(f: ModPoly, c0: int, H: int) -> CaseReport:
    """Spread when the fifth minimum is at most 1, lift otherwise."""
    lat = build_hyperelliptic_lattice(f, c0)
    body = build_hyperelliptic_body(H)
    prof = successive_minima(lat, body)
    if prof.lambdas[-1] <= 1:
        return CaseReport(case="spread", lambdas=prof.lambdas)
    return CaseReport(
        case="lift", lambdas=prof.lambdas, lift=lift_hyperelliptic(f, c0, H)
    )


def _root_of_ratio(num: int, den: int, root: int, prec: int = 6) -> Fraction:
    """Floor bracket of (num/den)**(1/root) to prec decimal digits."""
    if num < 0 or den <= 0 or root < 1:
        raise ValueError("need num >= 0, den > 0, root >= 1")
    scaled = num * 10 ** (root * prec) // den
    return Fraction(integer_nth_root(scaled, root), 10**prec)


def decimal_string(value: Fraction, prec: int = 6) -> str:
    """Fixed-point rendering; value is floored to prec digits first."""
    scaled = value.numerator * 10**prec // value.denominator
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 10**prec}.{scaled % 10**prec:0{prec}d}"


def theorem3_terms(d: int, H: int, q: int, prec: int = 6) -> tuple:
    """(H^(1+2/D)/q^(2/D), H^(1/d)) with D = d(d+1), floor-bracketed."""
    if d < 2 or H < 1 or q < 2:
        raise ValueError("need d >= 2, H >= 1, q >= 2")
    D = d * (d + 1)
    return (
        _root_of_ratio(H ** (D + 2), q * q, D, prec),
        _root_of_ratio(H, 1, d, prec),
    )


def theorem3_bound(d: int, H: int, q: int, prec: int = 6) -> Fraction:
    t1, t2 = theorem3_terms(d, H, q, prec)
    return t1 + t2


def theorem3_crossover(d: int) -> PowerThreshold:
    """Main term <= secondary term exactly when H^(d^2+1) <= q^2."""
    return PowerThreshold(d * d + 1, 2)


def theorem3_exponents(d: int, e: Fraction) -> tuple:
    """Exponents in q of both terms at H = q**e."""
    D = d * (d + 1)
    return ((e * (D + 2) - 2) / D, e / d)


def theorem3_critical_exponent(d: int) -> Fraction:
    """The e where both exponents agree, 2/(d^2+1)."""
    return Fraction(2, d * d + 1)


def theorem4_terms(H: int, q: int, prec: int = 6) -> tuple:
    """(H^(3/2)/q^(1/6), H^(1/3)) floor-bracketed."""
    if H < 1 or q < 2:
        raise ValueError("need H >= 1, q >= 2")
    return (_root_of_ratio(H**9, q, 6, prec), _root_of_ratio(H, 1, 3, prec))


def theorem4_bound(H: int, q: int, prec: int = 6) -> Fraction:
    t1, t2 = theorem4_terms(H, q, prec)
    return t1 + t2


def theorem4_crossover() -> PowerThreshold:
    """Main term <= secondary term exactly when H^7 <= q."""
    return PowerThreshold(7, 1)


def theorem4_exponents(e: Fraction) -> tuple:
    """Exponents in q of both terms at H = q**e."""
    return (Fraction(3, 2) * e - Fraction(1, 6), e / 3)


def theorem4_critical_exponent() -> Fraction:
    return Fraction(1, 7)


@dataclass(frozen=True)
class ReferenceBounds:
    """Earlier mod-p box bounds for comparison, by H regime."""

    regime: str
    value: Fraction
    refined: Fraction


def reference_refined_term_dominates(p: int, H: int) -> bool:
    """(H^15/p)^(1/12) >= H^(1/3), decided exactly as H^11 >= p."""
    return H**11 >= p


def reference_bounds(p: int, H: int, prec: int = 6) -> ReferenceBounds:
    """Prior prime-modulus bounds by regime, plus the refined two-term form.

    Regimes: H^8 < p gives H^(1/3); then H^23 < p^5 gives (H^10/p)^(1/6);
    then H^3 < p gives (H^19/p)^(1/16); beyond that the refined sum
    H^(1/3) + (H^15/p)^(1/12) is the quoted value.
    """
    if p < 2 or H < 1:
        raise ValueError("need p >= 2, H >= 1")
    refined = _root_of_ratio(H, 1, 3, prec) + _root_of_ratio(H**15, p, 12, prec)
    if H**8 < p:
        return ReferenceBounds("cube-root", _root_of_ratio(H, 1, 3, prec), refined)
    if H**23 < p**5:
        return ReferenceBounds("middle", _root_of_ratio(H**10, p, 6, prec), refined)
    if H**3 < p:
        return ReferenceBounds("upper", _root_of_ratio(H**19, p, 16, prec), refined)
    return ReferenceBounds("extended", refined, refined)
