"""Executable divisibility experiments: pointwise checks, certification,
prime searches, and the recurrence and unit demos.

The statements behind these procedures quantify over all but finitely many
integers; the procedures substitute finite, reproducible sample windows and
say so in their reports.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    ConstantDivisorError,
    ConstantPolynomialError,
    EmptySampleSetError,
    NotPrimitiveError,
    SearchCapExceededError,
    SearchPreconditionError,
    UnsupportedRingError,
    ZeroInputError,
)
from .polynomials import Poly, exact_divide, is_primitive
from .rings import ZZ, QuadInt, WRational

DEFAULT_WINDOW = 20
GROWTH_SCAN_CAP = 10**6
DEFAULT_DEMO_SEED = 1729
W_PRIMES_UNDER_100 = (2, 5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97)

SAMPLE_WINDOW_NOTE = (
    "pointwise divisibility was checked on a finite sample window; the "
    "underlying statements quantify over all but finitely many integers"
)


def default_samples() -> list[int]:
    """The symmetric integer window used when callers do not supply samples."""
    return list(range(-DEFAULT_WINDOW, DEFAULT_WINDOW + 1))


def _value_divides(gval, fval) -> bool:
    if isinstance(gval, QuadInt):
        return gval.divides(fval) is not None
    return fval % gval == 0


@dataclass(frozen=True)
class EvalDivReport:
    """Tally of the pointwise checks g(k) | f(k) over a sample list.

    Failures hold (point, divisor value, dividend value) triples; vacuous
    counts the samples where the divisor vanished.
    """

    checked: int
    vacuous: int
    failures: tuple
    verdict: str

    @property
    def divisible(self) -> int:
        return self.checked - self.vacuous - len(self.failures)


def eval_divisibility(f: Poly, g: Poly, samples: Iterable) -> EvalDivReport:
    """Check g(k) | f(k) at every sample, skipping (and counting) zeros of g."""
    f._check_ring(g)
    if not g:
        raise ZeroDivisionError("the divisor polynomial is zero")
    points = list(samples)
    if not points:
        raise EmptySampleSetError("need at least one sample point")
    vacuous = 0
    failures = []
    for k in points:
        gval = g.evaluate(k)
        if not gval:
            vacuous += 1
            continue
        fval = f.evaluate(k)
        if not _value_divides(gval, fval):
            failures.append((k, gval, fval))
    verdict = "ALL_DIVIDE" if not failures else "FAILED"
    return EvalDivReport(len(points), vacuous, tuple(failures), verdict)


@dataclass(frozen=True)
class DivisibilityCertificate:
    """Verdict on g | f in R[x], with a verified quotient or a witness point.

    The quotient is present exactly when the verdict is DIVIDES. A witness is
    a point k with g(k) != 0 and g(k) not dividing f(k); it may be absent on
    NOT_DIVIDES when the bounded scan found none.
    """

    verdict: str
    quotient: Poly | None
    witness: int | None


def witness_scan_order(bound: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ...: small witnesses first, so reports stay readable."""
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def certify_divisibility(f: Poly, g: Poly, search_bound: int = 1000) -> DivisibilityCertificate:
    """Decide g | f in R[x] for primitive nonconstant g over Z (or a
    norm-Euclidean quadratic ring).

    On success the quotient is re-verified by multiplication. On failure the
    integers 0, 1, -1, 2, -2, ... with |k| <= search_bound are scanned for a
    witness with g(k) != 0 and g(k) not dividing f(k). For such a divisor,
    pointwise divisibility at every integer forces polynomial divisibility,
    so a witness always exists somewhere in Z, though not necessarily within
    the bound.
    """
    f._check_ring(g)
    if not g:
        raise ZeroDivisionError("the divisor polynomial is zero")
    if g.degree() == 0:
        raise ConstantDivisorError("the divisor must be nonconstant")
    if not is_primitive(g):
        raise NotPrimitiveError("the divisor must be primitive (unit content)")
    quotient = exact_divide(f, g)
    if quotient is not None:
        assert g * quotient == f, "certified quotient failed re-expansion"
        return DivisibilityCertificate("DIVIDES", quotient, None)
    for k in witness_scan_order(search_bound):
        gval = g.evaluate(k)
        if gval and not _value_divides(gval, f.evaluate(k)):
            return DivisibilityCertificate("NOT_DIVIDES", None, k)
    return DivisibilityCertificate("NOT_DIVIDES", None, None)


def degree_dichotomy_check(f: Poly, g: Poly, samples: Iterable) -> str:
    """Pointwise divisibility on the samples should force f == 0 or
    deg g <= deg f.

    Returns CONSISTENT when that holds, REFUTES_SAMPLES when divisibility
    already fails on the samples, and VIOLATION when the samples pass yet the
    degree comparison fails; no integer instance can produce a VIOLATION, so
    one would mean an arithmetic bug.
    """
    report = eval_divisibility(f, g, samples)
    if report.verdict == "FAILED":
        return "REFUTES_SAMPLES"
    if not f or f.degree() >= g.degree():
        return "CONSISTENT"
    return "VIOLATION"


def growth_witness(f: Poly, g: Poly) -> int:
    """Least k >= 1 with g(k) != 0 and |g(k)| > |f(k)| > 0, given f != 0 and
    deg g > deg f.

    Strict growth separation at k forces g(k) to not divide f(k). Scans
    upward from 1; raises SearchCapExceededError past the cap, which is only
    possible if f vanished at every scanned point.
    """
    if f.ring != ZZ or g.ring != ZZ:
        raise UnsupportedRingError("growth comparison needs integer coefficients")
    if not f:
        raise SearchPreconditionError("the dividend must be nonzero")
    if not g or g.degree() <= f.degree():
        raise SearchPreconditionError("the divisor's degree must exceed the dividend's")
    for k in range(1, GROWTH_SCAN_CAP + 1):
        gval = g.evaluate(k)
        if gval != 0 and abs(gval) > abs(f.evaluate(k)) > 0:
            return k
    raise SearchCapExceededError(
        f"no point below {GROWTH_SCAN_CAP} separated the growth of the two polynomials"
    )


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by a sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, flag in enumerate(flags) if flag]


@dataclass(frozen=True)
class PrimeSolvabilityRecord:
    """A prime p together with the least root of f in [0, p) modulo p."""

    prime: int
    root: int


def sf_search(f: Poly, prime_limit: int) -> list[PrimeSolvabilityRecord]:
    """All primes p <= prime_limit at which f has a root mod p, with the least
    root each, in ascending prime order.

    Residues are scanned exhaustively per prime, which is fine at desk scale;
    every hit is re-verified in full precision before being recorded.
    """
    if f.ring != ZZ:
        raise UnsupportedRingError("the prime search runs over integer polynomials")
    if not f or f.degree() < 1:
        raise ConstantPolynomialError("the prime search needs a nonconstant polynomial")
    if prime_limit < 2:
        raise ValueError("prime_limit must be at least 2")
    records = []
    for p in primes_up_to(prime_limit):
        reduced = [c % p for c in f.coeffs]
        for k in range(p):
            acc = 0
            for c in reversed(reduced):
                acc = (acc * k + c) % p
            if acc == 0:
                assert f.evaluate(k) % p == 0, "modular root failed the exact recheck"
                records.append(PrimeSolvabilityRecord(p, k))
                break
    return records


def sf_difference_growth(
    f: Poly, c: int, limits: Sequence[int]
) -> list[tuple[int, int]]:
    """Sizes of {p prime: f has a root mod p, p does not divide c} below each
    limit, ascending.

    The underlying set is infinite for nonconstant f and nonzero c, but no
    finite computation decides that; this reports the monotone counts instead
    of a verdict.
    """
    if c == 0:
        raise ZeroInputError("c must be nonzero")
    bounds = sorted(int(limit) for limit in limits)
    if not bounds:
        raise ValueError("need at least one limit")
    found = [r.prime for r in sf_search(f, bounds[-1]) if c % r.prime != 0]
    return [(bound, sum(1 for p in found if p <= bound)) for bound in bounds]


@dataclass(frozen=True)
class ZWUnitReport:
    """Outcome of evaluating x**2 + 1 at seeded random points of Z[W].

    Any entry in failures would be a genuine counterexample to the unit claim
    and must be surfaced loudly by callers; none exists.
    """

    trials: int
    seed: int
    failures: tuple

    @property
    def passes(self) -> int:
        return self.trials - len(self.failures)

    @property
    def all_units(self) -> bool:
        return not self.failures


def zw_unit_demo(trials: int, seed: int = DEFAULT_DEMO_SEED) -> ZWUnitReport:
    """Evaluate x**2 + 1 at seeded random elements of Z[W] and test every value
    for unit-ness.

    Arguments are a/b with |a| <= 10**4 and b a product of at most two of the
    allowed primes below 100, so numerators stay in trial-division range.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        a = rng.randint(-10_000, 10_000)
        b = math.prod(
            rng.choice(W_PRIMES_UNDER_100) for _ in range(rng.randint(0, 2))
        )
        argument = WRational(a, b)
        value = argument * argument + 1
        if not value.is_unit():
            failures.append((argument, value))
    return ZWUnitReport(trials, seed, tuple(failures))


@dataclass(frozen=True)
class ChebPair:
    """Index n with the polynomials p_n, q_n of the coupled recurrences
    p_{n+1} = 2x*p_n - p_{n-1} (p_0 = 1, p_1 = x) and likewise for q
    (q_0 = 0, q_1 = 1)."""

    n: int
    p: Poly
    q: Poly


def cheb_generate(n_max: int) -> list[ChebPair]:
    """Pairs for n = 0..n_max with exact integer coefficients.

    Each p_n with n >= 1 is checked to be primitive before returning.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    two_x = Poly((0, 2), ZZ)
    ps = [Poly.one(ZZ), Poly.x(ZZ)]
    qs = [Poly.zero(ZZ), Poly.one(ZZ)]
    while len(ps) <= n_max:
        ps.append(two_x * ps[-1] - ps[-2])
        qs.append(two_x * qs[-1] - qs[-2])
    pairs = [ChebPair(n, ps[n], qs[n]) for n in range(n_max + 1)]
    for pair in pairs[1:]:
        assert is_primitive(pair.p), f"p_{pair.n} lost primitivity"
    return pairs


@dataclass(frozen=True)
class ChebCertifyReport:
    """Both halves of the p_n | q_{2n} check: pointwise evaluation and the
    polynomial certificate."""

    n: int
    evaluation: EvalDivReport
    certificate: DivisibilityCertificate
    passed: bool


def cheb_certify(n: int, eval_range: Iterable[int] | None = None) -> ChebCertifyReport:
    """Check p_n | q_{2n} twice: pointwise on the sample range (skipping zeros
    of p_n) and as polynomials with a multiplication-verified quotient."""
    if n < 1:
        raise ValueError("n must be at least 1")
    pairs = cheb_generate(2 * n)
    divisor = pairs[n].p
    dividend = pairs[2 * n].q
    samples = list(eval_range) if eval_range is not None else default_samples()
    evaluation = eval_divisibility(dividend, divisor, samples)
    certificate = certify_divisibility(dividend, divisor)
    passed = evaluation.verdict == "ALL_DIVIDE" and certificate.verdict == "DIVIDES"
    return ChebCertifyReport(n, evaluation, certificate, passed)
