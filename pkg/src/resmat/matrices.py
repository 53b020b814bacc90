"""Sign matrices over roots of unity and permutation-equivalence machinery.

Entries are exponents of a fixed primitive m-th root of unity (never floats),
with ``None`` as the distinguished zero diagonal entry.  The entry order used
for canonical forms is ZERO < zeta^0 < zeta^1 < ... so canonical forms are
bit-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import UnsupportedDimensionError

# The zero diagonal entry.  Off-diagonal entries are ints in [0, m).
ZERO = None

CANONICAL_DIMENSION_LIMIT = 8

_SIGN_TO_EXP = {1: 0, -1: 1}
_EXP_TO_SIGN = {0: 1, 1: -1}


def _entry_key(e):
    return -1 if e is None else e


@dataclass(frozen=True)
class SignMatrix:
    """n x n matrix with zero diagonal and m-th roots of unity elsewhere.

    m = 2 gives ordinary sign matrices (exponent 0 is +1, exponent 1 is -1);
    m = 3 and m = 4 give the cubic and quartic "cyclotomic" variants.
    """

    m: int
    entries: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        if self.m not in (2, 3, 4):
            raise ValueError(f"modulus must be 2, 3 or 4, got {self.m}")
        n = len(self.entries)
        if n < 1:
            raise ValueError("matrix must have dimension >= 1")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, e in enumerate(row):
                if i == j:
                    if e is not None:
                        raise ValueError(f"diagonal entry ({i},{j}) must be zero")
                elif not isinstance(e, int) or not 0 <= e < self.m:
                    raise ValueError(
                        f"off-diagonal entry ({i},{j}) must be an exponent in "
                        f"[0,{self.m}), got {e!r}"
                    )

    @property
    def n(self):
        return len(self.entries)

    @classmethod
    def from_signs(cls, rows):
        """Build an m=2 matrix from rows of 0 / +1 / -1 values."""
        ent = tuple(
            tuple(None if i == j else _SIGN_TO_EXP[v] for j, v in enumerate(row))
            for i, row in enumerate(rows)
        )
        return cls(2, ent)

    def signs(self):
        """Rows of 0 / +1 / -1 values (m=2 only)."""
        if self.m != 2:
            raise ValueError("signs() is only defined for m=2")
        return tuple(
            tuple(0 if e is None else _EXP_TO_SIGN[e] for e in row)
            for row in self.entries
        )

    def transpose(self):
        n = self.n
        return SignMatrix(
            self.m, tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n))
        )

    def conj_entries(self):
        """Entrywise complex conjugation: exponent negation mod m."""
        return SignMatrix(
            self.m,
            tuple(
                tuple(None if e is None else (-e) % self.m for e in row)
                for row in self.entries
            ),
        )

    def negate(self):
        """Entrywise multiplication by -1 off the diagonal (m even)."""
        if self.m % 2 != 0:
            raise ValueError("-1 is not an m-th root of unity for odd m")
        half = self.m // 2
        return SignMatrix(
            self.m,
            tuple(
                tuple(None if e is None else (e + half) % self.m for e in row)
                for row in self.entries
            ),
        )

    def is_symmetric(self):
        n = self.n
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def _key(self):
        return tuple(_entry_key(e) for row in self.entries for e in row)


@dataclass(frozen=True)
class BlockDecomposition:
    """A permutation and split size realizing the skew/symmetric block form.

    Applying ``perm`` to the source matrix puts the s skew-block indices
    first, so the conjugate has an s x s skew-symmetric upper-left block and
    an (n-s) x (n-s) symmetric lower-right block.
    """

    perm: tuple[int, ...]
    s: int


# Permutations are tuples of 0-based images: sigma[i] is the image of i.


def identity_perm(n):
    return tuple(range(n))


def compose(sigma, tau):
    """The permutation acting as tau after sigma in conjugation.

    Satisfies conjugate(M, compose(sigma, tau)) ==
    conjugate(conjugate(M, tau), sigma).
    """
    return tuple(tau[sigma[i]] for i in range(len(sigma)))


def inverse_perm(sigma):
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v] = i
    return tuple(inv)


def _check_perm(sigma, n):
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {sigma!r}")


def conjugate(matrix, sigma):
    """Simultaneous row/column permutation: result[i][j] = M[sigma(i)][sigma(j)]."""
    n = matrix.n
    _check_perm(sigma, n)
    ent = tuple(
        tuple(matrix.entries[sigma[i]][sigma[j]] for j in range(n)) for i in range(n)
    )
    return SignMatrix(matrix.m, ent)


def canonical_form(matrix):
    """Lexicographically least conjugate over all n! permutations.

    Idempotent and constant on permutation-equivalence orbits.
    """
    n = matrix.n
    if n > CANONICAL_DIMENSION_LIMIT:
        raise UnsupportedDimensionError(
            f"canonical form is a factorial scan, limited to n <= "
            f"{CANONICAL_DIMENSION_LIMIT} (got {n})"
        )
    best = None
    best_mat = None
    for sigma in itertools.permutations(range(n)):
        cand = conjugate(matrix, sigma)
        key = cand._key()
        if best is None or key < best:
            best = key
            best_mat = cand
    return best_mat


def equivalence_classes(matrices):
    """Partition matrices by permutation equivalence.

    Returns (canonical representative, orbit count) pairs in ascending
    canonical order.
    """
    matrices = list(matrices)
    if not matrices:
        return []
    n, m = matrices[0].n, matrices[0].m
    classes = {}
    for mat in matrices:
        if mat.n != n or mat.m != m:
            raise ValueError("all matrices must share the same n and m")
        rep = canonical_form(mat)
        classes[rep] = classes.get(rep, 0) + 1
    return sorted(classes.items(), key=lambda kv: kv[0]._key())


# --- packed enumeration of symmetric / skew-symmetric sign-matrix classes ---
#
# A symmetric sign matrix is determined by one bit per unordered pair (bit set
# means entry -1); a skew-symmetric one by one orientation bit per pair (bit
# set means M[i][j] = +1 for i < j).  Conjugation acts by permuting pairs,
# plus an orientation flip in the skew case when the pair order reverses.


def _pair_positions(n):
    return {
        (i, j): t
        for t, (i, j) in enumerate((i, j) for i in range(n) for j in range(i + 1, n))
    }


def _symmetric_maps(n):
    pos = _pair_positions(n)
    maps = []
    for sigma in itertools.permutations(range(n)):
        maps.append(
            [pos[tuple(sorted((sigma[i], sigma[j])))] for (i, j) in pos]
        )
    return maps


def _skew_maps(n):
    pos = _pair_positions(n)
    maps = []
    for sigma in itertools.permutations(range(n)):
        entry = []
        for (i, j) in pos:
            a, b = sigma[i], sigma[j]
            flip = a > b
            entry.append((pos[(min(a, b), max(a, b))], flip))
        maps.append(entry)
    return maps


def orbit_class_count(packed, apply_maps):
    """Number of orbits of a conjugation-closed set of packed matrices.

    apply_maps is a list of callables, one per permutation, mapping a packed
    matrix to its conjugate.  Work is proportional to (#classes) * n!.
    """
    seen = set()
    classes = 0
    for x in packed:
        if x in seen:
            continue
        classes += 1
        for f in apply_maps:
            seen.add(f(x))
    return classes


def count_symmetric_classes(n):
    """Permutation-equivalence classes of symmetric n x n sign matrices."""
    if not 1 <= n <= CANONICAL_DIMENSION_LIMIT:
        raise UnsupportedDimensionError(f"n must be in 1..8, got {n}")
    if n == 1:
        return 1
    maps = _symmetric_maps(n)

    def applier(pm):
        def f(x):
            y = 0
            for dst, src in enumerate(pm):
                y |= ((x >> src) & 1) << dst
            return y

        return f

    k = n * (n - 1) // 2
    return orbit_class_count(range(1 << k), [applier(pm) for pm in maps])


def count_skew_classes(n):
    """Permutation-equivalence classes of skew-symmetric n x n sign matrices."""
    if not 1 <= n <= CANONICAL_DIMENSION_LIMIT:
        raise UnsupportedDimensionError(f"n must be in 1..8, got {n}")
    if n == 1:
        return 1
    maps = _skew_maps(n)

    def applier(pm):
        def f(x):
            y = 0
            for dst, (src, flip) in enumerate(pm):
                bit = (x >> src) & 1
                if flip:
                    bit ^= 1
                y |= bit << dst
            return y

        return f

    k = n * (n - 1) // 2
    return orbit_class_count(range(1 << k), [applier(pm) for pm in maps])
