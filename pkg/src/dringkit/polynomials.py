"""Dense univariate polynomials over Z or a quadratic integer ring.

Coefficients are stored in ascending powers and the leading coefficient is
always nonzero; the zero polynomial has an empty coefficient tuple and degree
None. All arithmetic is exact and stays inside the coefficient ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import RingMismatchError, ZeroPolynomialError
from .rings import NORM_EUCLIDEAN_D, ZZ, IntegerRing, QuadInt, QuadRing, quad_gcd

CoefficientRing = Union[IntegerRing, QuadRing]
Element = Union[int, QuadInt]


@dataclass(frozen=True)
class Poly:
    """coeffs[i] holds the coefficient of x**i."""

    coeffs: tuple = ()
    ring: CoefficientRing = ZZ

    def __post_init__(self) -> None:
        normalized = [self.ring.coerce(c) for c in self.coeffs]
        while normalized and not normalized[-1]:
            normalized.pop()
        object.__setattr__(self, "coeffs", tuple(normalized))

    @classmethod
    def zero(cls, ring: CoefficientRing = ZZ) -> "Poly":
        return cls((), ring)

    @classmethod
    def one(cls, ring: CoefficientRing = ZZ) -> "Poly":
        return cls((1,), ring)

    @classmethod
    def x(cls, ring: CoefficientRing = ZZ) -> "Poly":
        return cls((0, 1), ring)

    @classmethod
    def constant(cls, value, ring: CoefficientRing = ZZ) -> "Poly":
        return cls((value,), ring)

    @classmethod
    def monomial(cls, coeff, power: int, ring: CoefficientRing = ZZ) -> "Poly":
        return cls((0,) * power + (coeff,), ring)

    def degree(self) -> int | None:
        """Index of the leading coefficient; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def leading_coefficient(self) -> Element:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"cannot combine polynomials over {self.ring} and {other.ring}"
            )

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.ring)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_ring(other)
            if not self.coeffs or not other.coeffs:
                return Poly((), self.ring)
            out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, c in enumerate(self.coeffs):
                if not c:
                    continue
                for j, d in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + c * d
            return Poly(out, self.ring)
        scalar = self.ring.coerce(other)
        return Poly([c * scalar for c in self.coeffs], self.ring)

    __rmul__ = __mul__

    def evaluate(self, point) -> Element:
        """Horner evaluation at a point coerced into the coefficient ring."""
        point = self.ring.coerce(point)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    __call__ = evaluate

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            sign, body = _term_text(c, power)
            if not parts:
                parts.append(body if sign > 0 else "-" + body)
            else:
                parts.append((" + " if sign > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _term_text(c: Element, power: int) -> tuple[int, str]:
    """Sign and unsigned text of one printed term."""
    if power == 0:
        var = ""
    elif power == 1:
        var = "x"
    else:
        var = f"x^{power}"
    if isinstance(c, QuadInt):
        sign = 1 if (c.a > 0 or (c.a == 0 and c.b > 0)) else -1
        m = c if sign > 0 else -c
        inside = str(m.a) if m.b == 0 else f"{m.a}{m.b:+d}w"
        return sign, f"[{inside}]{var}"
    sign = 1 if c > 0 else -1
    m = abs(c)
    if not var:
        return sign, str(m)
    return sign, var if m == 1 else f"{m}{var}"


@dataclass(frozen=True)
class PseudoDivResult:
    """Witness of multiplier * f == g * q + r with r == 0 or deg r < deg g.

    The multiplier is lc(g)**s and s = max(deg f - deg g + 1, 0).
    """

    multiplier: Element
    quotient: Poly
    remainder: Poly
    s: int


def content(p: Poly) -> Element:
    """Gcd of the coefficients: positive over Z, an arbitrary associate over Z[w]."""
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no content")
    if p.ring == ZZ:
        return math.gcd(*p.coeffs)
    g = p.ring.zero
    for c in p.coeffs:
        if not c:
            continue
        g = c if not g else quad_gcd(g, c)
    return g


def is_primitive(p: Poly) -> bool:
    """True when the content is a unit (tested via the norm over Z[w])."""
    c = content(p)
    return c == 1 if p.ring == ZZ else c.is_unit()


def primitive_part(p: Poly) -> tuple[Element, Poly]:
    """Split p as content * primitive polynomial of the same degree."""
    c = content(p)
    if p.ring == ZZ:
        return c, Poly([value // c for value in p.coeffs], ZZ)
    parts = []
    for value in p.coeffs:
        q = c.divides(value)
        assert q is not None, "content must divide every coefficient"
        parts.append(q)
    return c, Poly(parts, p.ring)


def pseudo_divide(f: Poly, g: Poly) -> PseudoDivResult:
    """Fraction-free division of f by g, entirely inside the coefficient ring.

    Scales f by lc(g)**s with s = max(deg f - deg g + 1, 0) and performs the
    usual division; the identity lc(g)**s * f == g*q + r is re-checked before
    returning.
    """
    f._check_ring(g)
    if not g:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    ring = f.ring
    n = g.degree()
    if not f or f.degree() < n:
        return PseudoDivResult(ring.one, Poly.zero(ring), f, 0)
    s = f.degree() - n + 1
    lead = g.leading_coefficient()
    q = Poly.zero(ring)
    r = f
    steps = 0
    while r and r.degree() >= n:
        t = Poly.monomial(r.leading_coefficient(), r.degree() - n, ring)
        q = q * lead + t
        r = r * lead - t * g
        steps += 1
    if steps != s:
        pad = lead ** (s - steps)
        q = q * pad
        r = r * pad
    multiplier = lead**s
    assert f * multiplier == g * q + r, "pseudo-division identity failed"
    return PseudoDivResult(multiplier, q, r, s)


def exact_divide(f: Poly, g: Poly) -> Poly | None:
    """The quotient q with f == g * q when g divides f in R[x], else None.

    Implemented by leading-coefficient elimination with an exactness check at
    every step, independently of pseudo_divide so the two can cross-validate.
    """
    f._check_ring(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    if not f:
        return Poly.zero(ring)
    n = g.degree()
    if f.degree() < n:
        return None
    lead = g.leading_coefficient()
    q = Poly.zero(ring)
    r = f
    while r and r.degree() >= n:
        c = _exact_coeff_quotient(r.leading_coefficient(), lead, ring)
        if c is None:
            return None
        t = Poly.monomial(c, r.degree() - n, ring)
        q = q + t
        r = r - t * g
    return q if not r else None


def _exact_coeff_quotient(value: Element, lead: Element, ring: CoefficientRing):
    if ring == ZZ:
        quot, rem = divmod(value, lead)
        return quot if rem == 0 else None
    return lead.divides(value)


def field_divide(f: Poly, g: Poly) -> tuple[Element, Poly] | None:
    """Fraction-free division over the fraction field: (den, q) with den*f == g*q.

    Returns None when f/g is not a polynomial over the fraction field. Over Z
    the pair is reduced (gcd(den, content(q)) == 1, den > 0); over a
    norm-Euclidean quadratic ring it is reduced up to units; other quadratic
    rings get the raw pseudo-division scaling.
    """
    result = pseudo_divide(f, g)
    if result.remainder:
        return None
    ring = f.ring
    den, q = result.multiplier, result.quotient
    if not q:
        return ring.one, q
    if ring == ZZ:
        if den < 0:
            den, q = -den, -q
        t = math.gcd(den, content(q))
        return den // t, Poly([c // t for c in q.coeffs], ZZ)
    if ring.d in NORM_EUCLIDEAN_D:
        t = quad_gcd(ring.coerce(den), content(q))
        reduced_den = t.divides(den)
        assert reduced_den is not None
        parts = []
        for c in q.coeffs:
            piece = t.divides(c)
            assert piece is not None
            parts.append(piece)
        return reduced_den, Poly(parts, ring)
    return den, q
