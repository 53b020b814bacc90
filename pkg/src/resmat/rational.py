"""Primes, quadratic symbols, CRT, and prime search over the rational integers."""

from __future__ import annotations

from math import gcd, isqrt

from .errors import SearchExhaustedError

# Deterministic Miller-Rabin base set, valid for all n < 3.3 * 10**24
# (covers everything below 2**63 with room to spare).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic primality test for n < 3.3e24 (Miller-Rabin, fixed bases)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(bound):
    """All primes <= bound, ascending (simple Eratosthenes sieve)."""
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, bound + 1) if sieve[i]]


def legendre(a, p):
    """Legendre symbol (a/p) in {0, 1, -1} by Euler's criterion.

    p must be an odd prime; only oddness and p >= 3 are checked here, since
    bulk sweeps cannot afford a primality test per call.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    v = pow(a, (p - 1) // 2, p)
    if v == p - 1:
        return -1
    return v  # 0 or 1


def jacobi(a, n):
    """Jacobi symbol (a/n) by the binary reciprocity algorithm, no factoring."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def crt(residues, moduli):
    """The unique x in [0, prod(moduli)) with x = residues[k] mod moduli[k]."""
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli must have equal length")
    if not moduli:
        raise ValueError("at least one congruence is required")
    x, m = residues[0] % moduli[0], moduli[0]
    for r, q in zip(residues[1:], moduli[1:]):
        if gcd(m, q) != 1:
            raise ValueError(f"moduli are not pairwise coprime: gcd({m},{q}) > 1")
        # x + m*t = r (mod q)
        t = (r - x) * pow(m, -1, q) % q
        x += m * t
        m *= q
    return x % m


def prime_in_progression(residue, modulus, limit, *, min_exclusive=None):
    """Smallest prime = residue (mod modulus) exceeding min_exclusive, <= limit.

    min_exclusive defaults to max(modulus, 2), so the prime found is coprime
    to (and distinct from) every prime dividing the modulus.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if gcd(residue, modulus) != 1:
        raise ValueError(
            f"residue {residue} is not coprime to modulus {modulus}"
        )
    if min_exclusive is None:
        min_exclusive = max(modulus, 2)
    min_exclusive = max(min_exclusive, 2)
    residue %= modulus
    candidate = residue + modulus * ((min_exclusive - residue) // modulus + 1)
    while candidate <= limit:
        if is_prime(candidate):
            return candidate
        candidate += modulus
    raise SearchExhaustedError(
        f"no prime = {residue} (mod {modulus}) in ({min_exclusive}, {limit}]",
        limit=limit,
    )


def sqrt_mod(a, p):
    """A square root of a modulo an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
