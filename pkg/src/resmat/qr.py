"""Quadratic residue matrices: membership, block form, witnesses, and counts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import (
    NotAResidueMatrixError,
    SearchExhaustedError,
    UnsupportedDimensionError,
)
from .matrices import BlockDecomposition, SignMatrix, orbit_class_count
from .rational import is_prime, jacobi, legendre

COUNT_MIN_N = 2
COUNT_MAX_N = 6


@dataclass(frozen=True)
class QrDecision:
    """Membership verdict for the squared-diagonal criterion.

    diag holds the diagonal of M^2 over the integers; s is the valid split
    size (smallest when several match) and is None for non-members.
    """

    verdict: bool
    s: int | None
    diag: tuple[int, ...]


def qr_matrix_from_primes(primes):
    """The sign matrix of Legendre symbols (p_i / p_j) for distinct odd primes."""
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError(f"primes must be distinct: {primes}")
    for p in primes:
        if p % 2 == 0 or not is_prime(p):
            raise ValueError(f"not an odd prime: {p}")
    n = len(primes)
    rows = tuple(
        tuple(0 if i == j else legendre(primes[i], primes[j]) for j in range(n))
        for i in range(n)
    )
    return SignMatrix.from_signs(rows)


def square_diagonal(matrix):
    """Diagonal of M^2 over the integers, for an m=2 sign matrix."""
    signs = matrix.signs()
    n = matrix.n
    return tuple(
        sum(signs[i][j] * signs[j][i] for j in range(n)) for i in range(n)
    )


def split_size(diag):
    """The smallest s matching the s-multiset diagonal pattern, or None.

    The pattern is s occurrences of n+1-2s and n-s occurrences of n-1; the
    only ambiguity is the fully symmetric diagonal (all n-1), where s=1.
    """
    n = len(diag)
    off = [d for d in diag if d != n - 1]
    if not off:
        return 1
    s = len(off)
    if s <= n and all(d == n + 1 - 2 * s for d in off):
        return s
    return None


def is_qr_matrix(matrix):
    """Membership test via the diagonal of M^2."""
    if matrix.m != 2:
        raise ValueError("QR membership is defined for m=2 sign matrices")
    diag = square_diagonal(matrix)
    s = split_size(diag)
    return QrDecision(s is not None, s, diag)


def block_form(matrix):
    """A permutation and split size realizing the skew/symmetric block form.

    Indices with squared-diagonal entry n+1-2s come first, in stable order;
    for a fully symmetric matrix (s=1) the first index is designated as the
    1x1 skew block.
    """
    dec = is_qr_matrix(matrix)
    if not dec.verdict:
        raise NotAResidueMatrixError(f"diag(M^2) = {dec.diag} matches no split size")
    return _block_decomposition(dec.diag, dec.s)


def _block_decomposition(diag, s):
    n = len(diag)
    if all(d == n - 1 for d in diag):
        skew = [0]
    else:
        skew = [i for i, d in enumerate(diag) if d == n + 1 - 2 * s]
    rest = [i for i in range(n) if i not in skew]
    return BlockDecomposition(tuple(skew + rest), s)


def witness_primes(matrix, limit):
    """Distinct odd primes whose QR matrix equals the input exactly.

    Follows the constructive induction: column by column, take the smallest
    odd prime (deterministic) in the required mod-4 class whose Legendre
    symbols against all earlier primes match the matrix in both directions.
    Each column condition is a union of CRT progressions modulo 4 and the
    earlier primes, so qualifying primes exist by Dirichlet's theorem.
    """
    bd = block_form(matrix)
    skew = set(bd.perm[: bd.s])
    signs = matrix.signs()
    primes = []
    for k in range(matrix.n):
        target = 3 if k in skew else 1
        p = 1
        while True:
            p += 2
            if p > limit:
                raise SearchExhaustedError(
                    f"no prime <= {limit} realizes column {k + 1}", limit=limit
                )
            if p % 4 != target or p in primes or not is_prime(p):
                continue
            if all(
                legendre(p, pj) == signs[k][j] and legendre(pj, p) == signs[j][k]
                for j, pj in enumerate(primes)
            ):
                break
        primes.append(p)
    assert qr_matrix_from_primes(primes) == matrix
    return primes


def jacobi_matrix(values):
    """The sign matrix of Jacobi symbols for pairwise-coprime odd values > 1."""
    values = list(values)
    for v in values:
        if v <= 1 or v % 2 == 0:
            raise ValueError(f"values must be odd and > 1: {v}")
    for a, b in itertools.combinations(values, 2):
        if gcd(a, b) != 1:
            raise ValueError(f"values are not pairwise coprime: {a}, {b}")
    n = len(values)
    rows = tuple(
        tuple(0 if i == j else jacobi(values[i], values[j]) for j in range(n))
        for i in range(n)
    )
    return SignMatrix.from_signs(rows)


# --- exhaustive counting ---
#
# diag(M^2)_i depends only on the pair products t_ij = M[i][j]*M[j][i], and
# every assignment of the n(n-1)/2 pair products is realized by exactly
# 2^(n(n-1)/2) sign matrices (upper triangle free, lower forced).  So the
# membership census runs over 2^(n(n-1)/2) product masks instead of all
# 2^(n(n-1)) matrices, with popcounts giving the diagonal.


def _pair_list(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _valid_product_masks(n):
    pairs = _pair_list(n)
    touch = [0] * n
    for t, (i, j) in enumerate(pairs):
        touch[i] |= 1 << t
        touch[j] |= 1 << t
    valid = []
    for mask in range(1 << len(pairs)):
        diag = tuple((n - 1) - 2 * (mask & touch[i]).bit_count() for i in range(n))
        if split_size(diag) is not None:
            valid.append(mask)
    return valid


def _check_count_range(n):
    if not COUNT_MIN_N <= n <= COUNT_MAX_N:
        raise UnsupportedDimensionError(
            f"counting supports {COUNT_MIN_N} <= n <= {COUNT_MAX_N}, got {n}"
        )


def count_qr_matrices(n):
    """Number of n x n QR matrices (4, 40, 768, 27648, 1900544 for n = 2..6)."""
    _check_count_range(n)
    k = n * (n - 1) // 2
    return len(_valid_product_masks(n)) << k


def _packed_qr_matrices(n):
    """All QR matrices packed as n(n-1)-bit ints (bit set = entry -1)."""
    pairs = _pair_list(n)
    pos = {
        (i, j): t
        for t, (i, j) in enumerate((i, j) for i in range(n) for j in range(n) if i != j)
    }
    upper = [pos[(i, j)] for (i, j) in pairs]
    lower = [pos[(j, i)] for (i, j) in pairs]
    k = len(pairs)
    out = []
    for tmask in _valid_product_masks(n):
        for u in range(1 << k):
            x = 0
            for t in range(k):
                ub = (u >> t) & 1
                x |= ub << upper[t]
                x |= (ub ^ ((tmask >> t) & 1)) << lower[t]
            out.append(x)
    return out


def _full_conjugation_appliers(n):
    pos = {
        (i, j): t
        for t, (i, j) in enumerate((i, j) for i in range(n) for j in range(n) if i != j)
    }
    appliers = []
    for sigma in itertools.permutations(range(n)):
        pm = [pos[(sigma[i], sigma[j])] for (i, j) in pos]

        def f(x, pm=pm):
            y = 0
            for dst, src in enumerate(pm):
                y |= ((x >> src) & 1) << dst
            return y

        appliers.append(f)
    return appliers


def count_qr_classes(n):
    """Permutation-equivalence classes of n x n QR matrices."""
    _check_count_range(n)
    return orbit_class_count(_packed_qr_matrices(n), _full_conjugation_appliers(n))


# --- graph encoding of QR matrices ---


@dataclass(frozen=True)
class ConfigGraph:
    """Partially-directed edge-labeled graph encoding a QR matrix.

    Vertices 0..n-1 are colored red (skew block: primes = 3 mod 4) or blue.
    Each red-red pair carries one directed edge (i, j) meaning (p_i/p_j) = +1
    and (p_j/p_i) = -1; every other pair carries a +1/-1 label, the common
    symbol value.  Colorings are canonical: either >= 2 red vertices, or the
    single red vertex 0 (the designated skew index of a symmetric matrix).
    """

    n: int
    red: frozenset[int]
    directed: frozenset[tuple[int, int]]
    labels: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        if not self.red or not self.red <= set(range(self.n)):
            raise ValueError("red set must be a nonempty subset of the vertices")
        if len(self.red) == 1 and self.red != {0}:
            raise ValueError("a lone red vertex must be vertex 0")
        want_directed = {
            (i, j) for i in self.red for j in self.red if i < j
        }
        got = {(min(i, j), max(i, j)) for (i, j) in self.directed}
        if got != want_directed or len(self.directed) != len(want_directed):
            raise ValueError("exactly one directed edge per red-red pair required")
        want_labeled = {
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (i, j) not in want_directed
        }
        label_pairs = [pair for pair, _ in self.labels]
        if set(label_pairs) != want_labeled or len(label_pairs) != len(want_labeled):
            raise ValueError("exactly one labeled edge per non-red-red pair required")
        if any(v not in (1, -1) for _, v in self.labels):
            raise ValueError("edge labels must be +1 or -1")


def to_config_graph(matrix):
    """Encode a QR matrix as its configuration graph."""
    bd = block_form(matrix)
    red = frozenset(bd.perm[: bd.s])
    signs = matrix.signs()
    directed = set()
    labels = []
    for i in range(matrix.n):
        for j in range(i + 1, matrix.n):
            if i in red and j in red:
                directed.add((i, j) if signs[i][j] == 1 else (j, i))
            else:
                labels.append(((i, j), signs[i][j]))
    return ConfigGraph(matrix.n, red, frozenset(directed), tuple(labels))


def from_config_graph(graph):
    """Decode a configuration graph back to its QR matrix."""
    n = graph.n
    rows = [[0] * n for _ in range(n)]
    for (i, j) in graph.directed:
        rows[i][j] = 1
        rows[j][i] = -1
    for (i, j), v in graph.labels:
        rows[i][j] = rows[j][i] = v
    return SignMatrix.from_signs(rows)


def enumerate_config_graphs(n):
    """All configuration graphs on n labeled vertices (canonical colorings)."""
    red_sets = [frozenset({0})]
    for size in range(2, n + 1):
        red_sets.extend(frozenset(c) for c in itertools.combinations(range(n), size))
    for red in red_sets:
        rr = [(i, j) for i in sorted(red) for j in sorted(red) if i < j]
        other = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if not (i in red and j in red)
        ]
        for orient in itertools.product((False, True), repeat=len(rr)):
            directed = frozenset(
                (j, i) if flip else (i, j) for (i, j), flip in zip(rr, orient)
            )
            for labs in itertools.product((1, -1), repeat=len(other)):
                yield ConfigGraph(n, red, directed, tuple(zip(other, labs)))
