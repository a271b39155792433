"""Exact arithmetic in Z, quadratic integer rings Z[w], and the localization Z[W].

Everything here is built on Python's arbitrary-precision integers; no value
ever passes through floating point. Division-like operations are exactness
checked: a quotient is returned only when it exists in the ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DenominatorNotInW,
    GcdReductionError,
    RingMismatchError,
    UnsupportedRingError,
    ZeroInputError,
)

# Quadratic fields whose ring of integers is norm-Euclidean, so gcd by
# nearest-quotient descent is available and unique factorization holds.
NORM_EUCLIDEAN_D = frozenset(
    {-11, -7, -3, -2, -1, 2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41, 57, 73}
)

_MAX_ABS_D = 10**6
_MAX_W_DENOMINATOR = 10**12


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n (n must be nonzero)."""
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        p += 1 if p == 2 else 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Factor n >= 1 by trial division, returning {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = 5
    while q * q <= n:
        for p in (q, q + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_w_prime(p: int) -> bool:
    """The primes whose reciprocals are adjoined to form Z[W]: 2 and p = 1 mod 4."""
    return p == 2 or p % 4 == 1


class IntegerRing:
    """The rational integers, used as a polynomial coefficient ring."""

    zero = 0
    one = 1

    def coerce(self, value) -> int:
        if isinstance(value, QuadInt):
            raise RingMismatchError(
                "quadratic integer used where a rational integer is required"
            )
        if not isinstance(value, int):
            raise TypeError(f"exact integer required, got {type(value).__name__}")
        return value

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash(IntegerRing)

    def __str__(self) -> str:
        return "Z"

    def __repr__(self) -> str:
        return "ZZ"


ZZ = IntegerRing()


@dataclass(frozen=True)
class QuadRing:
    """The ring of integers Z[w] of Q(sqrt d) for square-free d.

    w = sqrt(d) when d = 2, 3 (mod 4) and (1 + sqrt(d))/2 when d = 1 (mod 4);
    elements are written a + b*w with integer coordinates a, b.
    """

    d: int

    def __post_init__(self) -> None:
        if self.d in (0, 1):
            raise ValueError("d must differ from 0 and 1")
        if abs(self.d) > _MAX_ABS_D:
            raise ValueError(f"|d| is capped at {_MAX_ABS_D}")
        if not is_squarefree(self.d):
            raise ValueError(f"d = {self.d} is not square-free")

    @property
    def half_mode(self) -> bool:
        """True when w = (1 + sqrt d)/2, i.e. d = 1 (mod 4)."""
        return self.d % 4 == 1

    @property
    def zero(self) -> "QuadInt":
        return QuadInt(0, 0, self)

    @property
    def one(self) -> "QuadInt":
        return QuadInt(1, 0, self)

    @property
    def omega(self) -> "QuadInt":
        return QuadInt(0, 1, self)

    def element(self, a: int, b: int = 0) -> "QuadInt":
        return QuadInt(a, b, self)

    def coerce(self, value) -> "QuadInt":
        if isinstance(value, QuadInt):
            if value.ring != self:
                raise RingMismatchError(
                    f"element of {value.ring} used where {self} is required"
                )
            return value
        if isinstance(value, int):
            return QuadInt(value, 0, self)
        raise TypeError(f"cannot interpret {type(value).__name__} in {self}")

    def __str__(self) -> str:
        return f"Q(sqrt {self.d})"


@dataclass(frozen=True, eq=False)
class QuadInt:
    """Element a + b*w of a quadratic integer ring."""

    a: int
    b: int
    ring: QuadRing

    def _coerce(self, other):
        if isinstance(other, QuadInt):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine elements of {self.ring} and {other.ring}"
                )
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.ring)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.a + other.a, self.b + other.b, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.a - other.a, self.b - other.b, self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.ring)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, e = self.a, self.b, other.a, other.b
        if self.ring.half_mode:
            # w**2 = w + (d - 1)/4, from the minimal polynomial of w
            t = (self.ring.d - 1) // 4
            return QuadInt(a * c + b * e * t, a * e + b * c + b * e, self.ring)
        return QuadInt(a * c + self.ring.d * b * e, a * e + b * c, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            raise ValueError("negative powers leave the ring")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadInt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (
                self.ring == other.ring and self.a == other.a and self.b == other.b
            )
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.ring.d))

    def conjugate(self) -> "QuadInt":
        """The image under the nontrivial field automorphism; fixes exactly Z."""
        if self.ring.half_mode:
            # sigma(w) = 1 - w
            return QuadInt(self.a + self.b, -self.b, self.ring)
        return QuadInt(self.a, -self.b, self.ring)

    def norm(self) -> int:
        """The rational integer self * conjugate(self)."""
        a, b, d = self.a, self.b, self.ring.d
        if self.ring.half_mode:
            return a * a + a * b + b * b * (1 - d) // 4
        return a * a - d * b * b

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def divides(self, other) -> "QuadInt | None":
        """Return q with other == self * q, or None when no such q is in the ring.

        Computed as other * conjugate(self) / norm(self), with both coordinates
        checked for exact divisibility.
        """
        if not self:
            raise ZeroDivisionError("zero divides only zero")
        other = self.ring.coerce(other)
        n = self.norm()
        num = other * self.conjugate()
        if num.a % n or num.b % n:
            return None
        return QuadInt(num.a // n, num.b // n, self.ring)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+d}w"

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b}, d={self.ring.d})"


def _round_half_to_zero(num: int, den: int) -> int:
    """Nearest integer to num/den with ties rounded toward zero (den nonzero)."""
    if den < 0:
        num, den = -num, -den
    if num >= 0:
        return (2 * num + den - 1) // (2 * den)
    return -((-2 * num + den - 1) // (2 * den))


def _reduction_step(x: QuadInt, y: QuadInt) -> QuadInt:
    """One division step: a remainder r = x - q*y with |norm(r)| < |norm(y)|."""
    n = y.norm()
    num = x * y.conjugate()
    q = QuadInt(_round_half_to_zero(num.a, n), _round_half_to_zero(num.b, n), x.ring)
    r = x - q * y
    bound = abs(n)
    if abs(r.norm()) < bound:
        return r
    # Coordinatewise nearest rounding is not norm-decreasing for every
    # whitelisted d: in the real fields the |norm| < 1 region is hyperbolic,
    # so the good quotient can sit several lattice steps away. Widen the
    # search deterministically, keeping the smallest remainder of the first
    # radius that yields one.
    for radius in (1, 2, 4, 8, 16, 32, 64):
        best = None
        best_norm = bound
        for da in range(-radius, radius + 1):
            for db in range(-radius, radius + 1):
                cand = x - (q + QuadInt(da, db, x.ring)) * y
                cand_norm = abs(cand.norm())
                if cand_norm < best_norm:
                    best, best_norm = cand, cand_norm
        if best is not None:
            return best
    raise GcdReductionError(
        f"no norm-decreasing remainder near the rounded quotient (d = {x.ring.d})"
    )


def quad_gcd(x: QuadInt, y: QuadInt) -> QuadInt:
    """A greatest common divisor (unique up to units) by norm-Euclidean descent.

    Requires the ring's d to lie on the norm-Euclidean whitelist; raises
    UnsupportedRingError otherwise and ZeroInputError when both arguments
    vanish.
    """
    if not isinstance(x, QuadInt) or not isinstance(y, QuadInt):
        raise TypeError("quad_gcd expects quadratic integers")
    if x.ring != y.ring:
        raise RingMismatchError(
            f"cannot take a gcd across {x.ring} and {y.ring}"
        )
    if x.ring.d not in NORM_EUCLIDEAN_D:
        raise UnsupportedRingError(
            f"gcd needs a norm-Euclidean ring; d = {x.ring.d} is not whitelisted"
        )
    if not x and not y:
        raise ZeroInputError("gcd(0, 0) is undefined")
    while y:
        x, y = y, _reduction_step(x, y)
    return x


@dataclass(frozen=True)
class WRational:
    """Reduced fraction whose denominator factors over {2} and primes = 1 mod 4.

    Construction normalizes the sign into the numerator, divides out the gcd,
    and trial-factors the reduced denominator to validate membership.
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if den > _MAX_W_DENOMINATOR:
            raise ValueError(f"reduced denominator exceeds {_MAX_W_DENOMINATOR}")
        for p in factorize(den):
            if not is_w_prime(p):
                raise DenominatorNotInW(
                    f"prime {p} divides the denominator but is 3 mod 4"
                )
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def _coerce(self, other):
        if isinstance(other, WRational):
            return other
        if isinstance(other, int):
            return WRational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return WRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return WRational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return WRational(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return WRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.num != 0

    def is_unit(self) -> bool:
        """True when the inverse also lies in the ring, i.e. every prime factor
        of the reduced numerator is 2 or 1 mod 4."""
        if self.num == 0:
            raise ZeroInputError("zero is not a unit candidate")
        return all(is_w_prime(p) for p in factorize(abs(self.num)))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"
