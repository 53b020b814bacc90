"""Exact arithmetic in Z[i] and Z[w], primary generators, and power residue symbols.

w is the primitive cube root of unity with w**2 = -1 - w; all coordinates are
in the (1, i) resp. (1, w) basis.  Exponents of roots of unity (never complex
values) cross every interface: a cubic symbol is an exponent in {0,1,2}
denoting w**e, a quartic symbol an exponent in {0,1,2,3} denoting i**e.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt

from .errors import RamifiedPrimeError
from .rational import is_prime


@dataclass(frozen=True)
class GaussianInt:
    """a + b*i in Z[i]."""

    a: int
    b: int

    def __add__(self, other):
        return GaussianInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return GaussianInt(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return GaussianInt(-self.a, -self.b)

    def __mul__(self, other):
        return GaussianInt(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def conj(self):
        return GaussianInt(self.a, -self.b)

    def norm(self):
        return self.a * self.a + self.b * self.b

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_unit(self):
        return self.norm() == 1

    def units(self):
        # 1, i, -1, -i
        return (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))

    def root_of_unity(self, e):
        return self.units()[e % 4]

    def one(self):
        return GaussianInt(1, 0)

    def scale(self, k):
        return GaussianInt(self.a * k, self.b * k)

    def __str__(self):
        return _format_element(self.a, self.b, "i")


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w in Z[w], with w**2 + w + 1 = 0."""

    a: int
    b: int

    def __add__(self, other):
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        # (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def conj(self):
        # conj(w) = w**2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_unit(self):
        return self.norm() == 1

    def units(self):
        # 1, w, w^2, -1, -w, -w^2
        return (
            EisensteinInt(1, 0),
            EisensteinInt(0, 1),
            EisensteinInt(-1, -1),
            EisensteinInt(-1, 0),
            EisensteinInt(0, -1),
            EisensteinInt(1, 1),
        )

    def root_of_unity(self, e):
        return self.units()[e % 3]

    def one(self):
        return EisensteinInt(1, 0)

    def scale(self, k):
        return EisensteinInt(self.a * k, self.b * k)

    def __str__(self):
        return _format_element(self.a, self.b, "w")


def _format_element(a, b, letter):
    if b == 0:
        return str(a)
    unit = letter if abs(b) == 1 else f"{abs(b)}{letter}"
    if a == 0:
        return unit if b > 0 else f"-{unit}"
    sign = "+" if b > 0 else "-"
    return f"{a}{sign}{unit}"


_ELEMENT_RE = re.compile(
    r"""^\s*
        (?:(?P<a>[+-]?\d+)\s*)?                    # rational part
        (?:(?P<sign>[+-])?\s*(?P<b>\d*)\s*(?P<letter>[iw]))?  # i/w part
        \s*$""",
    re.VERBOSE,
)


def parse_element(text, kind):
    """Parse 'a+bi' / 'a-bi' / 'a+bw' syntax (optional spaces) exactly.

    kind is 'gaussian' or 'eisenstein'.
    """
    m = _ELEMENT_RE.match(text)
    if not m or (m.group("a") is None and m.group("letter") is None):
        raise ValueError(f"cannot parse element: {text!r}")
    a = int(m.group("a")) if m.group("a") is not None else 0
    if m.group("letter") is None:
        b = 0
    else:
        expected = "i" if kind == "gaussian" else "w"
        if m.group("letter") != expected:
            raise ValueError(
                f"expected {expected!r} in a {kind} element, got {text!r}"
            )
        b = int(m.group("b")) if m.group("b") else 1
        if m.group("sign") == "-":
            b = -b
        elif m.group("sign") is None and m.group("a") is not None:
            if m.group("b"):
                raise ValueError(f"missing sign between parts: {text!r}")
            # "2i" / "-3w": the leading integer is the coefficient
            a, b = 0, a
    if kind == "gaussian":
        return GaussianInt(a, b)
    if kind == "eisenstein":
        return EisensteinInt(a, b)
    raise ValueError(f"unknown element kind: {kind!r}")


def _ramified(x):
    """The rational prime ramified in x's ring: 2 for Z[i], 3 for Z[w]."""
    return 2 if isinstance(x, GaussianInt) else 3


def _inert_class(x):
    """Residue of inert rational primes: 3 mod 4 for Z[i], 2 mod 3 for Z[w]."""
    return (3, 4) if isinstance(x, GaussianInt) else (2, 3)


def _round_div(num, den):
    # nearest integer to num/den, den > 0
    return (2 * num + den) // (2 * den)


def divmod_exact(x, q):
    """Euclidean division in Z[i] / Z[w] by coordinate rounding.

    Returns (quotient, remainder) with norm(remainder) < norm(q).
    """
    n = q.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero element")
    t = x * q.conj()
    quo = type(x)(_round_div(t.a, n), _round_div(t.b, n))
    rem = x - quo * q
    return quo, rem


def mod(x, q):
    return divmod_exact(x, q)[1]


def divides(q, x):
    return mod(x, q).is_zero()


def gcd_element(x, y):
    """A greatest common divisor in Z[i] / Z[w] (up to units)."""
    while not y.is_zero():
        x, y = y, mod(x, y)
    return x


def norm(x):
    """Norm to Q: a^2 + b^2 for Z[i], a^2 - ab + b^2 for Z[w]."""
    return x.norm()


def is_prime_element(x):
    """Whether x is a prime element of its ring.

    True iff norm(x) is a rational prime, or x is a unit multiple of an inert
    rational prime (p = 3 mod 4 for Z[i], p = 2 mod 3 for Z[w]).
    """
    if x.is_zero() or x.is_unit():
        raise ValueError(f"zero or unit is neither prime nor composite: {x}")
    n = x.norm()
    if is_prime(n):
        return True
    r, mdl = _inert_class(x)
    p = isqrt(n)
    if p * p != n or not is_prime(p) or p % mdl != r % mdl:
        return False
    return x.a % p == 0 and x.b % p == 0


def is_primary(x):
    """2-primary (Z[i]: 1 or 3+2i mod 4) or 3-primary (Z[w]: 1 mod 3) test."""
    if isinstance(x, GaussianInt):
        return (x.a % 4, x.b % 4) in ((1, 0), (3, 2))
    return x.a % 3 == 1 and x.b % 3 == 0


def primary_generator(x):
    """The unique primary associate of a prime element x.

    Raises RamifiedPrimeError when x divides the ramified prime (2 resp. 3).
    """
    if not is_prime_element(x):
        raise ValueError(f"not a prime element: {x}")
    if x.norm() % _ramified(x) == 0:
        raise RamifiedPrimeError(f"{x} divides {_ramified(x)}; no primary associate")
    hits = [x * u for u in x.units() if is_primary(x * u)]
    assert len(hits) == 1, f"expected exactly one primary associate of {x}, got {hits}"
    return hits[0]


def same_ideal(x, y):
    """Whether x and y generate the same ideal (are unit multiples)."""
    if type(x) is not type(y):
        return False
    return any(x * u == y for u in x.units())


def _pow_mod(x, e, q):
    result = mod(x.one(), q)
    base = mod(x, q)
    while e:
        if e & 1:
            result = mod(result * base, q)
        base = mod(base * base, q)
        e >>= 1
    return result


def _residue_symbol(x, q, m):
    if type(x) is not type(q):
        raise ValueError("operands must live in the same ring")
    if not is_prime_element(q) or not is_primary(q):
        raise ValueError(f"modulus must be a primary prime element, got {q}")
    nq = q.norm()
    if divides(q, x):
        raise ValueError(f"{x} is divisible by {q}; symbol undefined")
    r = _pow_mod(x, (nq - 1) // m, q)
    for e in range(m):
        if divides(q, r - q.root_of_unity(e)):
            return e
    raise AssertionError(
        f"power of {x} mod {q} is not a root of unity; invalid input slipped through"
    )


def cubic_symbol(x, q):
    """Exponent e in {0,1,2} with x^((Nq-1)/3) = w**e mod q, q primary in Z[w]."""
    if not isinstance(q, EisensteinInt):
        raise ValueError("cubic symbol needs an Eisenstein modulus")
    return _residue_symbol(x, q, 3)


def quartic_symbol(x, q):
    """Exponent e in {0,1,2,3} with x^((Nq-1)/4) = i**e mod q, q primary in Z[i]."""
    if not isinstance(q, GaussianInt):
        raise ValueError("quartic symbol needs a Gaussian modulus")
    return _residue_symbol(x, q, 4)


def check_quartic_reciprocity(p, q):
    """Verify (p/q)_4 * conj((q/p)_4) == (-1)^((Np-1)/4 * (Nq-1)/4)."""
    if same_ideal(p, q):
        raise ValueError("reciprocity needs distinct prime ideals")
    lhs = (quartic_symbol(p, q) - quartic_symbol(q, p)) % 4
    rhs = 2 * (((p.norm() - 1) // 4) * ((q.norm() - 1) // 4) % 2)
    return lhs == rhs
