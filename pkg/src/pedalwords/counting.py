"""Closed-form counts of primitive 2D words and of periodic pedal triangles.

All values are Python integers, so nothing overflows for large ``n``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import prod

from .errors import DomainError


def _require_positive(name: str, value: int):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division as ``((p, e), ...)`` with ascending ``p``."""
    _require_positive("n", n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def divisors(n: int) -> list[int]:
    """Divisors of ``n`` in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    _require_positive("n", n)
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def psi(k: int, m: int, n: int) -> int:
    """Number of primitive ``m x n`` words over a ``k``-letter alphabet."""
    _require_positive("k", k)
    _require_positive("m", m)
    _require_positive("n", n)
    total = 0
    for d1 in divisors(m):
        mu1 = mobius(d1)
        if not mu1:
            continue
        for d2 in divisors(n):
            mu2 = mobius(d2)
            if mu2:
                total += mu1 * mu2 * k ** (m * n // (d1 * d2))
    return total


def phi(n: int) -> int:
    """Triangles similar to their n-th pedal triangle: ``4**n - 2**n``."""
    _require_positive("n", n)
    return 4**n - 2**n


def chi_inclusion_exclusion(n: int) -> int:
    """Exact pedal period ``n`` count, by inclusion-exclusion over the distinct primes of ``n``."""
    primes = prime_factors(n)
    total = 0
    for size in range(len(primes) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(primes, size):
            total += sign * phi(n // prod(subset))
    return total


def chi_mobius(n: int) -> int:
    """Exact pedal period ``n`` count, as the Mobius inverse of ``phi``."""
    _require_positive("n", n)
    return sum(mobius(d) * (4 ** (n // d) - 2 ** (n // d)) for d in divisors(n))
