"""Splitting-configuration classes of prime triples and their frequencies."""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matrices import SignMatrix, canonical_form
from .qr import is_qr_matrix, qr_matrix_from_primes
from .rational import is_prime, legendre, sieve_primes

NUM_CLASSES = 10

MIN_PRODUCT_BOUND = 105  # 3 * 5 * 7, the smallest admissible triple product


@dataclass(frozen=True)
class ConfigClass:
    """One of the 10 splitting-configuration types of a prime triple.

    class_id is the 1-based index in ascending canonical-form order.
    """

    class_id: int
    representative: SignMatrix


@dataclass(frozen=True)
class FrequencyReport:
    """Per-class counts and frequencies, indexed by class_id - 1.

    Frequencies are exact rationals: counts[i] / total.
    """

    counts: tuple[int, ...]
    total: int

    @property
    def frequencies(self):
        if self.total == 0:
            return tuple(Fraction(0) for _ in self.counts)
        return tuple(Fraction(c, self.total) for c in self.counts)


def _code_of_signs(signs):
    # 6-bit encoding of a 3x3 sign matrix: pairs (0,1),(1,0),(0,2),(2,0),(1,2),(2,1)
    code = 0
    for t, (i, j) in enumerate(((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1))):
        if signs[i][j] == -1:
            code |= 1 << t
    return code


def _matrix_of_code(code):
    rows = [[0] * 3 for _ in range(3)]
    for t, (i, j) in enumerate(((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1))):
        rows[i][j] = -1 if (code >> t) & 1 else 1
    return SignMatrix.from_signs(rows)


@lru_cache(maxsize=1)
def _class_table():
    """Maps each QR 3x3 code to its class_id; also returns representatives."""
    reps = {}
    for code in range(64):
        mat = _matrix_of_code(code)
        if is_qr_matrix(mat).verdict:
            reps.setdefault(canonical_form(mat), []).append(code)
    ordered = sorted(reps, key=lambda m: m._key())
    assert len(ordered) == NUM_CLASSES
    table = {}
    for class_id, rep in enumerate(ordered, start=1):
        for code in reps[rep]:
            table[code] = class_id
    return table, tuple(ordered)


def class_representatives():
    """The 10 canonical class representatives in class_id order."""
    _, reps = _class_table()
    return [ConfigClass(i + 1, rep) for i, rep in enumerate(reps)]


def configuration_class(p, q, r):
    """The configuration class of a triple of distinct odd primes."""
    primes = (p, q, r)
    if len(set(primes)) != 3:
        raise ValueError(f"primes must be distinct: {primes}")
    for v in primes:
        if v % 2 == 0 or not is_prime(v):
            raise ValueError(f"not an odd prime: {v}")
    table, reps = _class_table()
    mat = qr_matrix_from_primes(primes)
    class_id = table[_code_of_signs(mat.signs())]
    return ConfigClass(class_id, reps[class_id - 1])


def exact_frequencies():
    """The exact model frequencies over the 64 equiprobable triple outcomes.

    Each prime is independently 1 or 3 mod 4, and each unordered pair has one
    free symbol bit; the reverse symbol is forced by quadratic reciprocity.
    """
    table, _ = _class_table()
    counts = [0] * NUM_CLASSES
    for classes in itertools.product((1, 3), repeat=3):
        for bits in itertools.product((1, -1), repeat=3):
            rows = [[0] * 3 for _ in range(3)]
            for (i, j), b in zip(((0, 1), (0, 2), (1, 2)), bits):
                rows[i][j] = b
                both3 = classes[i] == 3 and classes[j] == 3
                rows[j][i] = -b if both3 else b
            code = _code_of_signs(rows)
            counts[table[code] - 1] += 1
    return FrequencyReport(tuple(counts), 64)


def empirical_scan(product_bound):
    """Classify every triple of distinct odd primes p < q < r with pqr <= bound."""
    if product_bound < MIN_PRODUCT_BOUND:
        raise ValueError(
            f"product bound must be >= {MIN_PRODUCT_BOUND}, got {product_bound}"
        )
    table, _ = _class_table()
    primes = sieve_primes(product_bound // 15)[1:]  # odd primes only
    counts = [0] * NUM_CLASSES
    total = 0
    pair_cache = {}

    def pair_bits(ai, bi):
        key = (ai, bi)
        hit = pair_cache.get(key)
        if hit is None:
            p, q = primes[ai], primes[bi]
            hit = (legendre(p, q) == -1, legendre(q, p) == -1)
            pair_cache[key] = hit
        return hit

    for ai in range(len(primes)):
        p = primes[ai]
        if ai + 2 >= len(primes) or p * primes[ai + 1] * primes[ai + 2] > product_bound:
            break
        for bi in range(ai + 1, len(primes)):
            q = primes[bi]
            if bi + 1 >= len(primes) or p * q * primes[bi + 1] > product_bound:
                break
            max_r = product_bound // (p * q)
            hi = bisect_right(primes, max_r)
            pq_n, pq_d = pair_bits(ai, bi)
            for ci in range(bi + 1, hi):
                pr_n, pr_d = pair_bits(ai, ci)
                qr_n, qr_d = pair_bits(bi, ci)
                code = (
                    pq_n
                    | (pq_d << 1)
                    | (pr_n << 2)
                    | (pr_d << 3)
                    | (qr_n << 4)
                    | (qr_d << 5)
                )
                counts[table[code] - 1] += 1
                total += 1
    return FrequencyReport(tuple(counts), total)
