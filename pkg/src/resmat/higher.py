"""Cubic and quartic residue matrices: membership, block form, and witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import (
    EisensteinInt,
    GaussianInt,
    cubic_symbol,
    gcd_element,
    is_primary,
    is_prime_element,
    primary_generator,
    quartic_symbol,
    same_ideal,
)
from .errors import NotAResidueMatrixError, SearchExhaustedError
from .matrices import SignMatrix
from .qr import _block_decomposition, split_size
from .rational import is_prime, sqrt_mod

DEFAULT_NORM_LIMIT = 10**6


@dataclass(frozen=True)
class QuarticDecision:
    """Membership verdict for quartic sign matrices.

    pairwise_ok records the m_jk = +-m_kj condition; diag is the diagonal of
    M * conj(M) (real parts, each off-term +-1 when pairwise_ok holds).
    """

    verdict: bool
    s: int | None
    pairwise_ok: bool
    diag: tuple[int, ...]


def _validate_primary_primes(primes, ring):
    primes = list(primes)
    for p in primes:
        if not isinstance(p, ring):
            raise ValueError(f"expected {ring.__name__} elements, got {p!r}")
        if not is_prime_element(p) or not is_primary(p):
            raise ValueError(f"not a primary prime element: {p}")
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            if same_ideal(primes[i], primes[j]):
                raise ValueError(
                    f"prime ideals must be distinct: {primes[i]}, {primes[j]}"
                )
    return primes


def cubic_matrix(primes):
    """The matrix of cubic symbols (pi_i / pi_j)_3 for primary Eisenstein primes."""
    primes = _validate_primary_primes(primes, EisensteinInt)
    n = len(primes)
    ent = tuple(
        tuple(
            None if i == j else cubic_symbol(primes[i], primes[j]) for j in range(n)
        )
        for i in range(n)
    )
    return SignMatrix(3, ent)


def is_cubic_residue_matrix(matrix):
    """A cubic sign matrix is a cubic residue matrix iff it is symmetric."""
    if matrix.m != 3:
        raise ValueError("expected a cubic (m=3) sign matrix")
    return matrix.is_symmetric()


def quartic_matrix(primes):
    """The matrix of quartic symbols (pi_j / pi_k)_4 for primary Gaussian primes."""
    primes = _validate_primary_primes(primes, GaussianInt)
    n = len(primes)
    ent = tuple(
        tuple(
            None if i == j else quartic_symbol(primes[i], primes[j]) for j in range(n)
        )
        for i in range(n)
    )
    return SignMatrix(4, ent)


def is_quartic_residue_matrix(matrix):
    """Membership: the pairwise +- condition plus the diag(M conj(M)) pattern."""
    if matrix.m != 4:
        raise ValueError("expected a quartic (m=4) sign matrix")
    n = matrix.n
    pairwise_ok = True
    diag = []
    for i in range(n):
        total = 0
        for j in range(n):
            if i == j:
                continue
            d = (matrix.entries[i][j] - matrix.entries[j][i]) % 4
            if d == 0:
                total += 1
            elif d == 2:
                total -= 1
            else:
                pairwise_ok = False  # term is +-i; real part 0
        diag.append(total)
    diag = tuple(diag)
    s = split_size(diag) if pairwise_ok else None
    return QuarticDecision(pairwise_ok and s is not None, s, pairwise_ok, diag)


def quartic_block_form(matrix):
    """Permutation and split size realizing the quartic block form."""
    dec = is_quartic_residue_matrix(matrix)
    if not dec.verdict:
        raise NotAResidueMatrixError(
            f"pairwise_ok={dec.pairwise_ok}, diag={dec.diag}: not a quartic residue matrix"
        )
    return _block_decomposition(dec.diag, dec.s)


# --- deterministic witness search ---
#
# The existence argument is Chebotarev's theorem; computationally we scan
# degree-1 split primes in ascending norm (rational p = 1 mod 3 resp. 1 mod 4)
# and accept the first candidate whose symbols match.  For each rational
# prime both conjugate ideals are offered, the one whose residue field sends
# w (resp. i) to the larger root first; this pins down, e.g., -2-3w as the
# first Eisenstein candidate and -1+2i as the first Gaussian one.


def _degree_one_primary_primes(kind, norm_limit):
    if kind == "eisenstein":
        residue, ring, disc = 1, EisensteinInt, 3

        def roots(p):
            r = sqrt_mod(p - 3, p)  # sqrt(-3)
            a = (r - 1) * pow(2, -1, p) % p
            return (a, (-1 - a) % p)

        def element(r):
            return EisensteinInt(0, 1) - EisensteinInt(r, 0)
    else:
        residue, ring, disc = 1, GaussianInt, 4

        def roots(p):
            r = sqrt_mod(p - 1, p)  # sqrt(-1)
            return (r, p - r)

        def element(r):
            return GaussianInt(-r, 1)  # i - r

    p = 2
    while True:
        p += 1
        if p > norm_limit:
            return
        if p % disc != residue % disc or not is_prime(p):
            continue
        for r in sorted(roots(p), reverse=True):
            q = gcd_element(ring(p, 0), element(r))
            yield primary_generator(q)


def _scan_witnesses(matrix, kind, norm_limit, class_filter=None):
    n = matrix.n
    chosen = []
    symbol = cubic_symbol if kind == "eisenstein" else quartic_symbol
    for k in range(n):
        for cand in _degree_one_primary_primes(kind, norm_limit):
            if any(same_ideal(cand, q) for q in chosen):
                continue
            if class_filter is not None and not class_filter(k, cand):
                continue
            ok = all(
                symbol(cand, qj) == matrix.entries[k][j]
                and symbol(qj, cand) == matrix.entries[j][k]
                for j, qj in enumerate(chosen)
            )
            if ok:
                chosen.append(cand)
                break
        else:
            raise SearchExhaustedError(
                f"no prime of norm <= {norm_limit} realizes column {k + 1}",
                limit=norm_limit,
            )
    return chosen


def cubic_witness(matrix, norm_limit=DEFAULT_NORM_LIMIT):
    """Distinct primary Eisenstein primes whose cubic matrix equals the input."""
    if not is_cubic_residue_matrix(matrix):
        raise NotAResidueMatrixError("matrix is not symmetric")
    chosen = _scan_witnesses(matrix, "eisenstein", norm_limit)
    assert cubic_matrix(chosen) == matrix
    return chosen


def quartic_witness(matrix, norm_limit=DEFAULT_NORM_LIMIT):
    """Distinct primary Gaussian primes whose quartic matrix equals the input.

    Skew-block indices get generators = 3+2i mod 4, the rest = 1 mod 4.
    """
    bd = quartic_block_form(matrix)
    skew = set(bd.perm[: bd.s])

    def class_filter(k, cand):
        want = (3, 2) if k in skew else (1, 0)
        return (cand.a % 4, cand.b % 4) == want

    chosen = _scan_witnesses(matrix, "gaussian", norm_limit, class_filter)
    assert quartic_matrix(chosen) == matrix
    return chosen
