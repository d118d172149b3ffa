"""Subgroups of the core and the zero-sum theorem.

The core is cyclic of order p-1, so it has exactly one subgroup per
divisor d of p-1. Every such subgroup with more than one element sums
to 0 mod p^k; the trivial subgroup {1} sums to 1 and is reported as an
excluded case.
"""

from dataclasses import dataclass

from .errors import NotADivisor
from .groups import core_elements
from .residues import PrimePowerModulus, Residue


@dataclass(frozen=True, slots=True)
class CoreSubgroup:
    """The unique order-d subgroup of the core, in generator-power order."""

    order: int
    elements: tuple[Residue, ...]
    modulus: PrimePowerModulus


@dataclass(frozen=True, slots=True)
class DivisorCheck:
    """Zero-sum verdict for the order-d core subgroup."""

    d: int
    total: Residue
    passed: bool


@dataclass(frozen=True, slots=True)
class CoreTheoremReport:
    """Per-divisor zero-sum results over all divisors d > 1 of p-1."""

    modulus: PrimePowerModulus
    checks: tuple[DivisorCheck, ...]
    trivial_sum: Residue
    all_pass: bool


def divisors_of(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def core_subgroup(d: int, modulus: PrimePowerModulus) -> CoreSubgroup:
    """The unique subgroup of order d in the core; d must divide p-1."""
    p_minus_1 = modulus.p - 1
    if d < 1 or p_minus_1 % d != 0:
        raise NotADivisor(f"{d} does not divide {p_minus_1}")
    core = core_elements(modulus)
    step = p_minus_1 // d
    gen = pow(core.generator.value, step, modulus.m)
    elements = []
    e = 1
    for _ in range(d):
        elements.append(Residue(e, modulus))
        e = e * gen % modulus.m
    return CoreSubgroup(d, tuple(elements), modulus)


def subgroup_sum(s: CoreSubgroup) -> Residue:
    """Sum of all subgroup elements mod p^k; 0 for every order d > 1."""
    total = sum(e.value for e in s.elements) % s.modulus.m
    return Residue(total, s.modulus)


def verify_core_theorem(modulus: PrimePowerModulus) -> CoreTheoremReport:
    """Check the zero sum for every divisor d > 1 of p-1."""
    checks = []
    for d in divisors_of(modulus.p - 1):
        total = subgroup_sum(core_subgroup(d, modulus))
        if d == 1:
            trivial = total
            continue
        checks.append(DivisorCheck(d, total, total.value == 0))
    return CoreTheoremReport(
        modulus=modulus,
        checks=tuple(checks),
        trivial_sum=trivial,
        all_pass=all(c.passed for c in checks),
    )
