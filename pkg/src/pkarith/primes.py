"""Primality and factoring helpers for the supported (64-bit) range."""

from typing import Iterator

# Strong-pseudoprime bases making Miller-Rabin exact for all n < 3.3e24,
# which covers every value below the 2^63 modulus bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Exact primality test for 1 <= n < 2^64 (deterministic Miller-Rabin)."""
    if n < 1:
        raise ValueError(f"is_prime expects a positive integer, got {n}")
    if n >= 1 << 64:
        raise ValueError(f"{n} is outside the supported 64-bit range")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
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


def distinct_prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1 by trial division (ascending)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def odd_primes_in(lo: int, hi: int) -> Iterator[int]:
    """Odd primes p with lo <= p <= hi, ascending."""
    n = max(lo, 3)
    if n % 2 == 0:
        n += 1
    while n <= hi:
        if is_prime(n):
            yield n
        n += 2
