"""Seeded deterministic random generation for sweeps and test instances.

The generator is splitmix64 with the standard constants, so any other
implementation fed the same 64-bit seed reproduces the identical stream.
All sampling helpers use rejection, never modulo bias.
"""
from __future__ import annotations

from math import gcd

from .arith import ModPoly, is_probable_prime

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64: state += gamma; output = mix(state)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("upper bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def range(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def random_modpoly(rng: SplitMix64, q: int, d: int) -> ModPoly:
    """Uniform coefficients in [0, q), leading one redrawn until coprime."""
    coeffs = [rng.below(q) for _ in range(d + 1)]
    while gcd(coeffs[-1], q) != 1:
        coeffs[-1] = rng.below(q)
    return ModPoly(q, tuple(coeffs))


def random_prime(rng: SplitMix64, lo: int, hi: int) -> int:
    """A prime drawn uniformly-by-rejection from [lo, hi]."""
    while True:
        n = rng.range(lo, hi)
        if is_probable_prime(n):
            return n
