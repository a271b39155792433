"""Coefficientwise conjugation and norm polynomials for quadratic rings.

The Galois group of a quadratic extension is {identity, conjugation}, so the
norm of a polynomial is the product of the polynomial with its conjugate; the
result always lands in Z[x] and that integrality is asserted rather than
trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NormIntegralityError, RingMismatchError, UnsupportedRingError
from .polynomials import Poly
from .rings import ZZ, QuadInt, QuadRing

STATUS_HOLDS = "holds"
STATUS_VACUOUS = "vacuous"
STATUS_VIOLATION = "violation"


def conjugate_poly(p: Poly) -> Poly:
    """Apply the ring conjugation to every coefficient; fixes Z-polynomials."""
    if p.ring == ZZ:
        return p
    return Poly([c.conjugate() for c in p.coeffs], p.ring)


def norm_poly(p: Poly) -> Poly:
    """The product p * conjugate_poly(p), projected onto Z[x].

    Every coefficient of the product has zero w-part; the projection checks
    this and raises NormIntegralityError on a violation, which would indicate
    an arithmetic bug rather than bad input.
    """
    if not isinstance(p.ring, QuadRing):
        raise UnsupportedRingError("norm polynomials need quadratic coefficients")
    product = p * conjugate_poly(p)
    values = []
    for i, c in enumerate(product.coeffs):
        if c.b != 0:
            raise NormIntegralityError(f"coefficient of x^{i} kept w-part {c.b}")
        values.append(c.a)
    return Poly(values, ZZ)


@dataclass(frozen=True)
class NormPair:
    """A quadratic-coefficient polynomial together with its norm over Z."""

    source: Poly
    norm: Poly

    @classmethod
    def of(cls, p: Poly) -> "NormPair":
        return cls(p, norm_poly(p))


@dataclass(frozen=True)
class TransferSample:
    """Divisibility bookkeeping at one integer sample point.

    element_divides / norm_divides are None when the respective divisor value
    vanishes at the point.
    """

    point: int
    divisor_value: QuadInt
    dividend_value: QuadInt
    divisor_norm: int
    dividend_norm: int
    element_divides: bool | None
    norm_divides: bool | None
    status: str


@dataclass(frozen=True)
class TransferReport:
    """Outcome of checking that elementwise divisibility transfers to norms."""

    dividend_norm_poly: Poly
    divisor_norm_poly: Poly
    samples: tuple[TransferSample, ...]
    verdict: str


def norm_transfer_check(f: Poly, g: Poly, samples: Iterable[int]) -> TransferReport:
    """At each integer sample b with g(b) != 0 and g(b) | f(b) in the quadratic
    ring, require norm(g)(b) | norm(f)(b) in Z.

    Samples where the divisor vanishes or does not divide carry no obligation
    and are marked vacuous. Records are sorted by sample point and duplicates
    are dropped, so the report does not depend on evaluation order.
    """
    if f.ring != g.ring:
        raise RingMismatchError(
            f"cannot compare polynomials over {f.ring} and {g.ring}"
        )
    if not g:
        raise ZeroDivisionError("the divisor polynomial is zero")
    dividend_norm = norm_poly(f)
    divisor_norm = norm_poly(g)
    records = []
    for point in sorted(set(int(b) for b in samples)):
        gval = g.evaluate(point)
        fval = f.evaluate(point)
        gnorm = divisor_norm.evaluate(point)
        fnorm = dividend_norm.evaluate(point)
        assert gnorm == gval.norm() and fnorm == fval.norm(), (
            "norm evaluation disagreed with elementwise norm"
        )
        if not gval:
            records.append(
                TransferSample(point, gval, fval, gnorm, fnorm, None, None, STATUS_VACUOUS)
            )
            continue
        element_divides = gval.divides(fval) is not None
        norm_divides = fnorm % gnorm == 0
        if not element_divides:
            status = STATUS_VACUOUS
        elif norm_divides:
            status = STATUS_HOLDS
        else:
            status = STATUS_VIOLATION
        records.append(
            TransferSample(
                point, gval, fval, gnorm, fnorm, element_divides, norm_divides, status
            )
        )
    verdict = (
        "VIOLATION"
        if any(r.status == STATUS_VIOLATION for r in records)
        else "CONSISTENT"
    )
    return TransferReport(dividend_norm, divisor_norm, tuple(records), verdict)
