"""Integer helpers: gcd/lcm, trial-division factorization, totients."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class FactoredInteger:
    """n together with its prime factorization, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent) pairs

    def reconstruct(self) -> int:
        out = 1
        for p, k in self.factors:
            out *= p**k
        return out


def _check_positive(n: int, what: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{what} must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")


def gcd(a: int, b: int) -> int:
    _check_positive(a, "a")
    _check_positive(b, "b")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    _check_positive(a, "a")
    _check_positive(b, "b")
    return math.lcm(a, b)


def factorize(n: int) -> FactoredInteger:
    """Prime factorization by trial division."""
    _check_positive(n)
    rest = n
    factors = []
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            factors.append((p, k))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return FactoredInteger(n, tuple(factors))


def euler_phi(n: int) -> int:
    """Count of 1 <= x <= n with gcd(x, n) = 1."""
    _check_positive(n)
    out = 1
    for p, k in factorize(n).factors:
        out *= p ** (k - 1) * (p - 1)
    return out


def totatives(n: int) -> list[int]:
    """Ascending list of x in [1, n] coprime to n; totatives(1) == [1]."""
    _check_positive(n)
    return [x for x in range(1, n + 1) if math.gcd(x, n) == 1]
