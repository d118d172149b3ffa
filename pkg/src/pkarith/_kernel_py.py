"""Pure-Python scan kernel, used when the compiled extension is absent.

Same contract as the compiled module: plain-integer inputs and outputs,
no package types, so both backends stay drop-in interchangeable.
"""

from .primes import distinct_prime_factors


def _smallest_primitive_root_mod_p(p: int) -> int:
    if p == 3:
        return 2
    cofactors = [(p - 1) // q for q in distinct_prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, c, p) != 1 for c in cofactors):
            return g
    raise AssertionError(f"no primitive root below {p}")


def scan_core_triplets(p: int, k: int) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Fixed points and proper 3-cycles of a -> -(a+1)^-1 on the core mod p^k.

    Returns (sorted fixed-point values, sorted canonical triplet tuples);
    a triplet is canonical when its leading member is the cycle minimum.
    """
    m = p**k
    g = _smallest_primitive_root_mod_p(p)
    if k >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    h = pow(g, p ** (k - 1), m)
    # exactly one core element per nonzero residue class mod p, so
    # membership is an O(1) lookup keyed by the class
    by_class = [0] * p
    core = []
    e = 1
    for _ in range(p - 1):
        core.append(e)
        by_class[e % p] = e
        e = e * h % m
    fixed = []
    triplets = []
    for a in core:
        if a % p == p - 1:
            continue  # a + 1 is not a unit; the map is undefined here
        b = m - pow(a + 1, -1, m)
        if by_class[b % p] != b:
            continue
        if b == a:
            fixed.append(a)
            continue
        c = m - pow(b + 1, -1, m)
        if by_class[c % p] != c:
            continue
        if a < b and a < c:
            triplets.append((a, b, c))
    fixed.sort()
    triplets.sort()
    return fixed, triplets
