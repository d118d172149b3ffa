"""Successor-inverse orbits and the triplet scan."""

import pytest

from pkarith.errors import ModulusOverflow, NotAUnit, UndefinedAtMinusOne
from pkarith.groups import is_core_member
from pkarith.primes import odd_primes_in
from pkarith.residues import PrimePowerModulus, Residue
from pkarith.roots import cubic_roots_of_unity
from pkarith.triplets import (
    FixedPoint,
    Triplet,
    find_core_triplets,
    orbit_of,
    scan_primes,
    t_map,
)


def res(value, p, k):
    return Residue(value, PrimePowerModulus(p, k))


def chain_holds(t: Triplet) -> bool:
    m = t.modulus.m
    links = [(t.a, t.b), (t.b, t.c), (t.c, t.a)]
    return all(
        (x.value + 1 + pow(y.value, -1, m)) % m == 0 for x, y in links
    )


class TestTMap:
    def test_cubic_root_is_fixed(self):
        assert t_map(res(18, 7, 2)).value == 18

    def test_generic_value(self):
        assert t_map(res(2, 7, 2)).value == 16

    def test_undefined_at_minus_one_class(self):
        with pytest.raises(UndefinedAtMinusOne):
            t_map(res(48, 7, 2))
        with pytest.raises(UndefinedAtMinusOne):
            t_map(res(6, 7, 2))

    def test_rejects_non_unit(self):
        with pytest.raises(NotAUnit):
            t_map(res(14, 7, 2))

    @pytest.mark.parametrize("p", list(odd_primes_in(3, 101)))
    def test_order_three_exhaustively_mod_p2(self, p):
        mod = PrimePowerModulus(p, 2)
        for v in range(1, mod.m):
            if v % p == 0 or (v + 1) % p == 0:
                continue
            a = Residue(v, mod)
            assert t_map(t_map(t_map(a))).value == v


class TestOrbitOf:
    def test_three_cycle(self):
        orbit = orbit_of(res(2, 7, 2))
        assert isinstance(orbit, Triplet)
        assert orbit.values() == (2, 16, 23)
        assert orbit.product().value == 1
        assert orbit.proper
        assert chain_holds(orbit)

    def test_fixed_point_for_cubic_root(self):
        orbit = orbit_of(res(18, 7, 2))
        assert isinstance(orbit, FixedPoint)
        assert orbit.value.value == 18

    def test_orbit_of_one(self):
        orbit = orbit_of(res(1, 7, 2))
        assert orbit.values() == (1, 24, 47)
        assert (1 * 24 * 47) % 49 == 1

    def test_canonical_rotation_starts_at_minimum(self):
        for start in (2, 16, 23):
            assert orbit_of(res(start, 7, 2)).values() == (2, 16, 23)

    def test_fixed_points_are_cubic_roots(self):
        for p in odd_primes_in(7, 500):
            if p % 6 != 1:
                continue
            mod = PrimePowerModulus(p, 2)
            lo, hi = cubic_roots_of_unity(mod).nontrivial
            for root in (lo, hi):
                assert isinstance(orbit_of(root), FixedPoint)


class TestFindCoreTriplets:
    def test_mod_49_has_only_fixed_points(self):
        proper, fixed = find_core_triplets(PrimePowerModulus(7, 2))
        assert proper == []
        assert [f.value.value for f in fixed] == [18, 30]

    def test_mod_25_is_empty(self):
        proper, fixed = find_core_triplets(PrimePowerModulus(5, 2))
        assert proper == [] and fixed == []

    def test_onset_prime_59(self):
        proper, fixed = find_core_triplets(PrimePowerModulus(59, 2))
        assert fixed == []
        assert [t.values() for t in proper] == [
            (298, 1106, 805),
            (299, 1404, 1105),
            (2076, 3181, 2375),
            (2374, 3182, 2675),
        ]
        for t in proper:
            assert chain_holds(t)
            assert t.product().value == 1
            assert t.proper
            for member in (t.a, t.b, t.c):
                assert is_core_member(member)
            assert t.a.value == min(t.values())

    def test_rejects_k1(self):
        with pytest.raises(ValueError):
            find_core_triplets(PrimePowerModulus(7, 1))


class TestScanPrimes:
    def test_nothing_below_59(self):
        records = scan_primes(3, 57, 2)
        assert all(r.proper_triplet_count == 0 for r in records)
        assert all(r.first_proper is None for r in records)

    def test_onset_record(self):
        (record,) = scan_primes(59, 59, 2)
        assert record.proper_triplet_count == 4
        assert record.first_proper.values() == (298, 1106, 805)

    def test_degenerate_count_mod_49(self):
        (record,) = scan_primes(7, 7, 2)
        assert record.degenerate_count == 2
        assert record.proper_triplet_count == 0

    def test_ascending_order_and_determinism(self):
        first = scan_primes(3, 100, 2)
        second = scan_primes(3, 100, 2)
        assert [r.p for r in first] == sorted(r.p for r in first)
        stripped = lambda rs: [
            (r.p, r.k, r.degenerate_count, r.proper_triplet_count, r.first_proper)
            for r in rs
        ]
        assert stripped(first) == stripped(second)

    def test_parallel_matches_serial(self):
        serial = scan_primes(3, 150, 2)
        parallel = scan_primes(3, 150, 2, jobs=4)
        assert [r.p for r in serial] == [r.p for r in parallel]
        assert [r.proper_triplet_count for r in serial] == [
            r.proper_triplet_count for r in parallel
        ]
        assert [r.first_proper for r in serial] == [r.first_proper for r in parallel]

    def test_triplet_primes_below_200(self):
        records = scan_primes(3, 200, 2)
        assert [r.p for r in records if r.proper_triplet_count] == [59, 79, 83, 179, 193]

    def test_counts_match_first_proper_presence(self):
        for r in scan_primes(3, 120, 2):
            assert (r.proper_triplet_count > 0) == (r.first_proper is not None)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            scan_primes(10, 3, 2)
        with pytest.raises(ValueError):
            scan_primes(3, 10, 1)

    def test_overflow_rejected(self):
        with pytest.raises(ModulusOverflow):
            scan_primes(3, 4_000_000_000, 2)

    def test_higher_precision_scan(self):
        # at k = 3 the 59-triplets do not reappear; recorded as observed
        (record,) = scan_primes(59, 59, 3)
        assert record.k == 3
        assert record.proper_triplet_count == 0
