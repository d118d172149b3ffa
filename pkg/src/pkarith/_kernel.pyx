# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel: fixed points and proper 3-cycles of the
successor-inverse map restricted to the core mod p^k.

Moduli stay below 2^63, so one 128-bit widening multiply covers every
intermediate product.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline u64 mulmod(u64 a, u64 b, u64 m) noexcept nogil:
    return <u64>((<u128>a * b) % m)


cdef u64 powmod(u64 base, u64 e, u64 m) noexcept nogil:
    cdef u64 r = 1 % m
    base %= m
    while e:
        if e & 1:
            r = mulmod(r, base, m)
        base = mulmod(base, base, m)
        e >>= 1
    return r


cdef u64 invmod(u64 a, u64 m) noexcept nogil:
    # extended Euclid; a must be a unit mod m
    cdef i64 t = 0, newt = 1
    cdef i64 r = <i64>m, newr = <i64>a
    cdef i64 q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <i64>m
    return <u64>t


cdef u64 primroot(i64 p, int k) noexcept nogil:
    # smallest primitive root mod p, lifted by p when it fails to
    # generate mod p^2 (Wieferich-style collapse)
    cdef i64 factors[16]
    cdef int nf = 0
    cdef i64 n = p - 1, q = 2
    cdef i64 g
    cdef int i, ok
    while q * q <= n:
        if n % q == 0:
            factors[nf] = q
            nf += 1
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        factors[nf] = n
        nf += 1
    for g in range(2, p):
        ok = 1
        for i in range(nf):
            if powmod(<u64>g, <u64>((p - 1) // factors[i]), <u64>p) == 1:
                ok = 0
                break
        if ok:
            break
    if k >= 2 and powmod(<u64>g, <u64>(p - 1), <u64>(p * p)) == 1:
        g += p
    return <u64>g


def scan_core_triplets(long long p, int k):
    """Fixed points and proper 3-cycles of a -> -(a+1)^-1 on the core mod p^k.

    Returns (sorted fixed-point values, sorted canonical triplet tuples);
    a triplet is canonical when its leading member is the cycle minimum.
    """
    cdef u64 m = 1
    cdef int i
    for i in range(k):
        m *= <u64>p
    cdef u64 g = primroot(p, k)
    cdef u64 pk1 = 1
    for i in range(k - 1):
        pk1 *= <u64>p
    cdef u64 h = powmod(g, pk1, m)
    cdef u64* by_class = <u64*>malloc(p * sizeof(u64))
    cdef u64* core = <u64*>malloc((p - 1) * sizeof(u64))
    if by_class == NULL or core == NULL:
        free(by_class)
        free(core)
        raise MemoryError()
    cdef u64 e = 1
    cdef i64 idx
    by_class[0] = 0  # class 0 holds no unit
    for idx in range(p - 1):
        core[idx] = e
        by_class[e % <u64>p] = e
        e = mulmod(e, h, m)
    fixed = []
    triplets = []
    cdef u64 a, b, c
    cdef u64 top = <u64>(p - 1)
    try:
        for idx in range(p - 1):
            a = core[idx]
            if a % <u64>p == top:
                continue  # a + 1 is not a unit; the map is undefined here
            b = m - invmod(a + 1, m)
            if by_class[b % <u64>p] != b:
                continue
            if b == a:
                fixed.append(a)
                continue
            c = m - invmod(b + 1, m)
            if by_class[c % <u64>p] != c:
                continue
            if a < b and a < c:
                triplets.append((a, b, c))
    finally:
        free(by_class)
        free(core)
    fixed.sort()
    triplets.sort()
    return fixed, triplets
