"""Exact coefficient arithmetic over prime fields F_p and the rationals.

Elements are plain Python values: integers in ``[0, p)`` for a prime field,
:class:`fractions.Fraction` for the rationals.  A field object bundles the
operations, so the polynomial layer never needs to know which representation
it is holding.  All values are immutable and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction


class ZeroInversion(ZeroDivisionError):
    """Raised when inverting the zero element of a field."""


class ZeroDenominator(ZeroDivisionError):
    """Raised when a rational is built with denominator zero."""


# Witness set sufficient for deterministic Miller-Rabin below 3.3 * 10^24,
# far beyond the word-sized moduli we accept.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_PRIME = 2**31 - 1  # products of two reduced values must fit a 64-bit int


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for word-sized integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo the prime ``p``.  Raises ZeroInversion on 0."""
    a %= p
    if a == 0:
        raise ZeroInversion(f"0 is not invertible mod {p}")
    g, x, _ = extended_gcd(a, p)
    if g != 1:  # impossible for prime p, kept as a guard
        raise ZeroInversion(f"{a} is not invertible mod {p}")
    return x % p


def rational_normalize(numerator: int, denominator: int) -> Fraction:
    """Reduced fraction with positive denominator; zero is 0/1."""
    if denominator == 0:
        raise ZeroDenominator("denominator must be nonzero")
    return Fraction(numerator, denominator)


class PrimeField:
    """The field F_p for a word-sized prime p.  Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
        if p > MAX_PRIME:
            raise ValueError(f"modulus {p} exceeds the word-size bound {MAX_PRIME}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    characteristic = property(lambda self: self.p)

    def element(self, value) -> int:
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        return int(value) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        return mod_inverse(a, self.p)

    def div(self, a: int, b: int) -> int:
        return a * mod_inverse(b, self.p) % self.p

    def random(self, rng) -> int:
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """The rationals, with Fraction elements (always reduced, denominator > 0)."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def element(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroInversion("0 is not invertible")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroInversion("division by zero")
        return a / b

    def random(self, rng) -> Fraction:
        return Fraction(rng.randrange(-9, 10), rng.randrange(1, 10))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str):
    """Parse a field selector: ``q`` for the rationals, ``fp:<p>`` for F_p."""
    spec = spec.strip().lower()
    if spec in ("q", "qq"):
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unrecognized field selector {spec!r} (expected 'q' or 'fp:<p>')")
