"""Orbits of the successor-inverse map and the prime triplet scan.

The map t(a) = -(a+1)^-1 has order 3 on the units mod p^k wherever it
is defined, so orbits are fixed points (nontrivial cubic roots of 1) or
3-cycles. A 3-cycle (a, b, c) satisfies the chain a+1 = -b^-1,
b+1 = -c^-1, c+1 = -a^-1 and the product relation abc = 1. The scan
looks for 3-cycles lying entirely inside the core, which at k = 2 is
exactly the p-th power residues; the first prime admitting one is 59.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import kernel
from .errors import ModulusOverflow, NotAUnit, UndefinedAtMinusOne
from .primes import odd_primes_in
from .residues import MODULUS_BOUND, PrimePowerModulus, Residue


@dataclass(frozen=True, slots=True)
class Triplet:
    """A canonical t-map 3-cycle: leading member is the cycle minimum."""

    a: Residue
    b: Residue
    c: Residue
    modulus: PrimePowerModulus

    @property
    def proper(self) -> bool:
        """False only for the degenerate a = b = c cubic-root case."""
        return not (self.a.value == self.b.value == self.c.value)

    def values(self) -> tuple[int, int, int]:
        return self.a.value, self.b.value, self.c.value

    def product(self) -> Residue:
        return self.a * self.b * self.c


@dataclass(frozen=True, slots=True)
class FixedPoint:
    """A fixed point of the t-map: a nontrivial cubic root of 1."""

    value: Residue
    modulus: PrimePowerModulus


@dataclass(frozen=True, slots=True)
class ScanRecord:
    """Per-prime scan outcome; counts are over canonical representatives."""

    p: int
    k: int
    degenerate_count: int
    proper_triplet_count: int
    first_proper: Optional[Triplet]
    elapsed: float


def t_map(a: Residue) -> Residue:
    """The successor-inverse map -(a+1)^-1 mod p^k."""
    if not a.is_unit:
        raise NotAUnit(f"{a.value} is divisible by {a.modulus.p}")
    if (a.value + 1) % a.modulus.p == 0:
        raise UndefinedAtMinusOne(f"{a.value} + 1 is not a unit mod {a.modulus.p}")
    return -a.shift(1).inverse()


def orbit_of(a: Residue) -> Triplet | FixedPoint:
    """The t-map orbit of a: a FixedPoint, or the canonical 3-cycle.

    The map has order 3, so the orbit always closes after at most three
    steps; that closure is asserted rather than assumed.
    """
    b = t_map(a)
    if b.value == a.value:
        return FixedPoint(a, a.modulus)
    c = t_map(b)
    closure = t_map(c)
    if closure.value != a.value:
        raise AssertionError(f"orbit of {a.value} failed to close: t^3 != id")
    cycle = (a, b, c)
    lead = min(range(3), key=lambda i: cycle[i].value)
    a, b, c = cycle[lead:] + cycle[:lead]
    return Triplet(a, b, c, a.modulus)


def _wrap_scan(p: int, k: int, fixed_values, triplet_values):
    modulus = PrimePowerModulus(p, k)
    fixed = [FixedPoint(Residue(v, modulus), modulus) for v in fixed_values]
    triplets = [
        Triplet(Residue(a, modulus), Residue(b, modulus), Residue(c, modulus), modulus)
        for a, b, c in triplet_values
    ]
    return triplets, fixed


def find_core_triplets(modulus: PrimePowerModulus) -> tuple[list[Triplet], list[FixedPoint]]:
    """All-core t-map orbits mod p^k: (proper 3-cycles, fixed points).

    Iterates the p-1 core elements and keeps only orbits whose members
    all lie in the core; at k = 2 those members are exactly the p-th
    power residues. Both lists are sorted by leading value.
    """
    if modulus.k < 2:
        raise ValueError("find_core_triplets needs k >= 2; at k = 1 the core is all units")
    fixed_values, triplet_values = kernel.scan_core_triplets(modulus.p, modulus.k)
    return _wrap_scan(modulus.p, modulus.k, fixed_values, triplet_values)


def _scan_one(args: tuple[int, int]) -> tuple[int, int, list, list, float]:
    p, k = args
    start = time.perf_counter()
    fixed_values, triplet_values = kernel.scan_core_triplets(p, k)
    return p, k, fixed_values, triplet_values, time.perf_counter() - start


def _record_from(p, k, fixed_values, triplet_values, elapsed) -> ScanRecord:
    triplets, fixed = _wrap_scan(p, k, fixed_values, triplet_values)
    return ScanRecord(
        p=p,
        k=k,
        degenerate_count=len(fixed),
        proper_triplet_count=len(triplets),
        first_proper=triplets[0] if triplets else None,
        elapsed=elapsed,
    )


def scan_prime_list(primes: list[int], k: int, jobs: int = 1) -> list[ScanRecord]:
    """Run find_core_triplets for each listed prime, in listed order.

    jobs > 1 fans the per-prime work out across processes; the output
    order still follows the input list.
    """
    if k < 2:
        raise ValueError("scan needs k >= 2")
    for p in primes:
        if p**k >= MODULUS_BOUND:
            raise ModulusOverflow(f"{p}^{k} exceeds the 2^63 modulus bound")
    work = [(p, k) for p in primes]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, work))
    else:
        results = [_scan_one(item) for item in work]
    return [_record_from(*result) for result in results]


def scan_primes(p_min: int, p_max: int, k: int, jobs: int = 1) -> list[ScanRecord]:
    """Run find_core_triplets for every prime in [p_min, p_max].

    Records come back in ascending prime order regardless of how the
    per-prime work is scheduled.
    """
    if not 3 <= p_min <= p_max:
        raise ValueError(f"need 3 <= p_min <= p_max, got [{p_min}, {p_max}]")
    if p_max**k >= MODULUS_BOUND:
        raise ModulusOverflow(f"{p_max}^{k} exceeds the 2^63 modulus bound")
    return scan_prime_list(list(odd_primes_in(p_min, p_max)), k, jobs)
