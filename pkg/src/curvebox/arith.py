"""Exact modular and integer arithmetic primitives shared by all modules.

Everything here works on plain Python integers; nothing ever goes through
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd, isqrt

__all__ = [
    "xgcd",
    "mod_inverse",
    "least_nonnegative_residue",
    "least_absolute_residue",
    "integer_nth_root",
    "is_probable_prime",
    "sqrt_mod_prime",
    "ModPoly",
    "BoxRegion",
    "eval_poly_mod",
    "interval_residue_count",
    "shift_normalize",
    "shift_normalize_quadratic",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def mod_inverse(a: int, q: int) -> int:
    g, x, _ = xgcd(a % q, q)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {q}")
    return x % q


def least_nonnegative_residue(a: int, q: int) -> int:
    """Representative of a mod q in [0, q)."""
    return a % q


def least_absolute_residue(a: int, q: int) -> int:
    """Representative of a mod q in (-q/2, q/2]."""
    r = a % q
    if 2 * r > q:
        r -= q
    return r


def integer_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) for x >= 0, n >= 1, computed exactly."""
    if x < 0:
        raise ValueError("negative radicand")
    if n < 1:
        raise ValueError("root order must be positive")
    if n == 1 or x in (0, 1):
        return x
    if n == 2:
        return isqrt(x)
    # Newton iteration from an over-estimate; converges monotonically down.
    r = 1 << -(-x.bit_length() // n)
    while True:
        t = ((n - 1) * r + x // r ** (n - 1)) // n
        if t >= r:
            break
        r = t
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


# Deterministic Miller-Rabin witness set, valid for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all n below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_mod_prime(a: int, p: int) -> tuple[int, ...]:
    """All y in [0, p) with y*y = a (mod p), for prime p. Tonelli-Shanks."""
    a %= p
    if p == 2:
        return (a,)
    if a == 0:
        return (0,)
    if pow(a, (p - 1) // 2, p) != 1:
        return ()
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        c = pow(z, q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = s
        while t != 1:
            i, x = 0, t
            while x != 1:
                x = x * x % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            r = r * b % p
            c = b * b % p
            t = t * c % p
            m = i
    return tuple(sorted({r, p - r}))


@dataclass(frozen=True)
class ModPoly:
    """Polynomial a0 + a1*X + ... + ad*X^d over Z/qZ.

    Coefficients are kept reduced to [0, q).  The leading coefficient must be
    a unit mod q and the degree must be at least 2; q may be composite.
    """

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise ValueError("modulus q must be an integer >= 2")
        if len(self.coeffs) < 3:
            raise ValueError("degree must be at least 2")
        reduced = tuple(int(c) % self.q for c in self.coeffs)
        object.__setattr__(self, "coeffs", reduced)
        if gcd(reduced[-1], self.q) != 1:
            raise ValueError("leading coefficient not coprime to modulus q")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class BoxRegion:
    """Half-open square box (K, K+H] x (L, L+H] of side H >= 1."""

    K: int
    L: int
    H: int

    def __post_init__(self):
        if not isinstance(self.H, int) or self.H < 1:
            raise ValueError("box side H must be a positive integer")

    @property
    def normalized(self) -> bool:
        return self.K == 0 and self.L == 0

    def contains(self, x: int, y: int) -> bool:
        return self.K < x <= self.K + self.H and self.L < y <= self.L + self.H


def eval_poly_mod(f: ModPoly, x: int) -> int:
    """f(x) mod q by Horner; intermediates stay below q**2 after each step."""
    x %= f.q
    acc = 0
    for a in reversed(f.coeffs):
        acc = (acc * x + a) % f.q
    return acc


def interval_residue_count(lo: int, H: int, r: int, q: int) -> int:
    """|{y in (lo, lo+H] : y = r (mod q)}| in closed form."""
    if H < 1:
        raise ValueError("interval length H must be positive")
    if not 0 <= r < q:
        raise ValueError("residue r must lie in [0, q)")
    return (lo + H - r) // q - (lo - r) // q


def shift_normalize(f: ModPoly, box: BoxRegion) -> tuple[ModPoly, BoxRegion]:
    """Translate f so the box corner moves to the origin.

    Returns (g, unit box) with g(x) = f(x + K) - L mod q; the solutions of
    y = f(x) in (K, K+H] x (L, L+H] biject with those of y = g(x) in
    (0, H] x (0, H].  The leading coefficient is unchanged.
    """
    q, K, L = f.q, box.K, box.L
    d = f.degree
    out = [0] * (d + 1)
    for i, ai in enumerate(f.coeffs):
        for j in range(i + 1):
            out[j] = (out[j] + ai * comb(i, j) * pow(K, i - j, q)) % q
    out[0] = (out[0] - L) % q
    return ModPoly(q, tuple(out)), BoxRegion(0, 0, box.H)


def shift_normalize_quadratic(
    f: ModPoly, c0: int, box: BoxRegion
) -> tuple[ModPoly, int, BoxRegion]:
    """Normalize y**2 - c0*y = f(x) over a shifted box to corner (0, 0).

    Substituting x -> x + K, y -> y + L turns the congruence into
    y**2 - c0'*y = g(x) with c0' = c0 - 2L and g = f(. + K) - L**2 + c0*L.
    """
    q, K, L = f.q, box.K, box.L
    d = f.degree
    out = [0] * (d + 1)
    for i, ai in enumerate(f.coeffs):
        for j in range(i + 1):
            out[j] = (out[j] + ai * comb(i, j) * pow(K, i - j, q)) % q
    out[0] = (out[0] - L * L + c0 * L) % q
    new_c0 = (c0 - 2 * L) % q
    return ModPoly(q, tuple(out)), new_c0, BoxRegion(0, 0, box.H)
