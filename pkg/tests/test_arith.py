import pytest

from curvebox.arith import (
    BoxRegion,
    ModPoly,
    eval_poly_mod,
    integer_nth_root,
    interval_residue_count,
    is_probable_prime,
    least_absolute_residue,
    least_nonnegative_residue,
    mod_inverse,
    shift_normalize,
    shift_normalize_quadratic,
    sqrt_mod_prime,
    xgcd,
)
from curvebox.rng import SplitMix64


def test_xgcd_identity():
    rng = SplitMix64(11)
    for _ in range(200):
        a = rng.range(-500, 500)
        b = rng.range(-500, 500)
        g, x, y = xgcd(a, b)
        assert g >= 0
        assert a * x + b * y == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    with pytest.raises(ValueError):
        mod_inverse(6, 9)


def test_residue_conversions():
    assert least_absolute_residue(7, 10) == -3
    assert least_nonnegative_residue(-3, 10) == 7
    # boundary: q/2 itself stays positive for even q
    assert least_absolute_residue(5, 10) == 5
    assert least_absolute_residue(6, 10) == -4
    for a in range(-30, 30):
        for q in (2, 3, 7, 10, 13):
            r = least_absolute_residue(a, q)
            assert (r - a) % q == 0
            assert -q < 2 * r <= q


def test_integer_nth_root_exact():
    rng = SplitMix64(5)
    for _ in range(300):
        x = rng.below(10**12)
        n = 1 + rng.below(7)
        r = integer_nth_root(x, n)
        assert r**n <= x < (r + 1) ** n
    assert integer_nth_root(10**18, 3) == 10**6
    assert integer_nth_root(0, 5) == 0


def test_is_probable_prime_small():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 2000):
        if sieve[i]:
            for j in range(i * i, 2000, i):
                sieve[j] = False
    for n in range(2000):
        assert is_probable_prime(n) == sieve[n]
    assert is_probable_prime(10**9 + 7)
    assert not is_probable_prime(10**9 + 8)


def test_sqrt_mod_prime_exhaustive_small():
    for p in (2, 3, 5, 7, 11, 13, 17, 101, 103):
        for a in range(p):
            roots = sqrt_mod_prime(a, p)
            expect = tuple(sorted(y for y in range(p) if (y * y - a) % p == 0))
            assert roots == expect


def test_modpoly_validation():
    f = ModPoly(7, (0, 0, 1))
    assert eval_poly_mod(f, 0) == 0
    assert f.degree == 2
    with pytest.raises(ValueError, match="leading coefficient not coprime"):
        ModPoly(9, (1, 2, 3))
    with pytest.raises(ValueError, match="degree"):
        ModPoly(7, (1, 2))
    with pytest.raises(ValueError, match="modulus"):
        ModPoly(1, (1, 2, 3))
    # coefficients are reduced on construction
    assert ModPoly(7, (8, -1, 15)).coeffs == (1, 6, 1)


def test_box_region():
    with pytest.raises(ValueError, match="H"):
        BoxRegion(0, 0, 0)
    b = BoxRegion(2, -1, 3)
    assert b.contains(3, 0)
    assert not b.contains(2, 0)
    assert not b.contains(6, 0)


def test_eval_poly_mod():
    f = ModPoly(13, (0, 0, 1))
    assert eval_poly_mod(f, 5) == 12
    g = ModPoly(101, (5, 3, 1))
    for x in range(-10, 110):
        assert eval_poly_mod(g, x) == (x * x + 3 * x + 5) % 101


def test_interval_residue_count_fixed():
    assert interval_residue_count(0, 5, 3, 13) == 1
    assert interval_residue_count(0, 5, 9, 13) == 0


def test_interval_residue_count_matches_scan():
    rng = SplitMix64(77)
    for _ in range(300):
        q = 1 + rng.below(40)
        r = rng.below(q)
        lo = rng.range(-50, 50)
        H = 1 + rng.below(60)
        brute = sum(1 for y in range(lo + 1, lo + H + 1) if y % q == r)
        assert interval_residue_count(lo, H, r, q) == brute


def _brute_curve_count(f, box):
    n = 0
    for x in range(box.K + 1, box.K + box.H + 1):
        fx = eval_poly_mod(f, x)
        for y in range(box.L + 1, box.L + box.H + 1):
            if (y - fx) % f.q == 0:
                n += 1
    return n


def test_shift_normalize_preserves_count():
    rng = SplitMix64(42)
    for _ in range(40):
        q = 2 + rng.below(499)
        d = 2 + rng.below(2)
        coeffs = [rng.below(q) for _ in range(d + 1)]
        while xgcd(coeffs[-1], q)[0] != 1:
            coeffs[-1] = rng.below(q)
        f = ModPoly(q, tuple(coeffs))
        box = BoxRegion(rng.range(-60, 60), rng.range(-60, 60), 1 + rng.below(40))
        g, unit = shift_normalize(f, box)
        assert unit.normalized and unit.H == box.H
        assert g.coeffs[-1] == f.coeffs[-1]
        assert _brute_curve_count(f, box) == _brute_curve_count(g, unit)


def _brute_quad_count(f, c0, box):
    n = 0
    for x in range(box.K + 1, box.K + box.H + 1):
        fx = eval_poly_mod(f, x)
        for y in range(box.L + 1, box.L + box.H + 1):
            if (y * y - c0 * y - fx) % f.q == 0:
                n += 1
    return n


def test_shift_normalize_quadratic_preserves_count():
    rng = SplitMix64(43)
    for _ in range(25):
        q = 2 + rng.below(300)
        coeffs = [rng.below(q) for _ in range(4)]
        while xgcd(coeffs[-1], q)[0] != 1:
            coeffs[-1] = rng.below(q)
        f = ModPoly(q, tuple(coeffs))
        c0 = rng.below(q)
        box = BoxRegion(rng.range(-40, 40), rng.range(-40, 40), 1 + rng.below(25))
        g, c0n, unit = shift_normalize_quadratic(f, c0, box)
        assert _brute_quad_count(f, c0, box) == _brute_quad_count(g, c0n, unit)
