"""Quadratic integer arithmetic and the Z[W] localization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dringkit import (
    NORM_EUCLIDEAN_D,
    DenominatorNotInW,
    QuadRing,
    RingMismatchError,
    UnsupportedRingError,
    WRational,
    ZeroInputError,
    quad_gcd,
)
from helpers import TEST_QUAD_DS

GAUSS = QuadRing(-1)
EISEN = QuadRing(-3)
GOLDEN = QuadRing(5)

coords = st.integers(min_value=-1000, max_value=1000)


# --- descriptors ---------------------------------------------------------


@pytest.mark.parametrize("d,half", [(-1, False), (-2, False), (2, False), (3, False),
                                    (-3, True), (5, True), (13, True), (-7, True)])
def test_basis_mode_follows_d_mod_4(d, half):
    assert QuadRing(d).half_mode is half


@pytest.mark.parametrize("d", [0, 1, 4, 8, 12, -4, 45, -9, 10**6 + 1])
def test_invalid_descriptors_rejected(d):
    with pytest.raises(ValueError):
        QuadRing(d)


def test_descriptor_equality_is_by_d():
    assert QuadRing(-1) == QuadRing(-1)
    assert QuadRing(-1) != QuadRing(5)


# --- addition / multiplication -------------------------------------------


def test_add_componentwise():
    assert GAUSS.element(1, 2) + GAUSS.element(3, 4) == GAUSS.element(4, 6)


def test_add_identity_and_inverse():
    x = GOLDEN.element(7, -3)
    assert x + GOLDEN.zero == x
    assert GOLDEN.element(1, 1) + GOLDEN.element(-1, -1) == GOLDEN.zero


def test_mixed_rings_raise():
    with pytest.raises(RingMismatchError):
        GAUSS.element(1, 0) + GOLDEN.element(1, 0)
    with pytest.raises(RingMismatchError):
        GAUSS.element(1, 0) * EISEN.element(1, 1)


def test_sqrt_mode_multiplication():
    # w = sqrt(-1), so w*w = -1
    assert GAUSS.omega * GAUSS.omega == GAUSS.element(-1, 0)


def test_half_mode_multiplication():
    # w = (1 + sqrt 5)/2 satisfies w^2 = w + 1
    assert GOLDEN.omega * GOLDEN.omega == GOLDEN.element(1, 1)


def test_multiplicative_identity():
    x = EISEN.element(4, -9)
    assert x * EISEN.one == x
    assert 1 * x == x


def test_int_coercion_in_arithmetic():
    assert GAUSS.element(2, 3) + 5 == GAUSS.element(7, 3)
    assert 2 * GAUSS.element(1, 1) == GAUSS.element(2, 2)


# --- conjugation ----------------------------------------------------------


def test_conjugate_sqrt_mode():
    assert GAUSS.element(3, 4).conjugate() == GAUSS.element(3, -4)


def test_conjugate_half_mode():
    # sigma((1 + sqrt 5)/2) = (1 - sqrt 5)/2 = 1 - w
    assert GOLDEN.omega.conjugate() == GOLDEN.element(1, -1)


@settings(max_examples=200)
@given(a=coords, b=coords, d=st.sampled_from(TEST_QUAD_DS + (-2, 2)))
def test_conjugate_is_an_involution(a, b, d):
    x = QuadRing(d).element(a, b)
    assert x.conjugate().conjugate() == x


@settings(max_examples=200)
@given(a=coords, b=coords, c=coords, e=coords, d=st.sampled_from(TEST_QUAD_DS + (-2, 2)))
def test_conjugate_is_a_ring_homomorphism(a, b, c, e, d):
    ring = QuadRing(d)
    x, y = ring.element(a, b), ring.element(c, e)
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@settings(max_examples=200)
@given(a=coords, b=coords, d=st.sampled_from(TEST_QUAD_DS + (-2, 2)))
def test_fixed_points_of_conjugation_are_the_integers(a, b, d):
    x = QuadRing(d).element(a, b)
    assert (x.conjugate() == x) == (b == 0)


# --- norms ----------------------------------------------------------------


def test_norm_examples():
    assert GAUSS.element(3, 4).norm() == 25
    assert EISEN.element(1, 1).norm() == 3
    assert GOLDEN.zero.norm() == 0


@settings(max_examples=200)
@given(a=coords, b=coords, d=st.sampled_from(TEST_QUAD_DS + (-2, 2)))
def test_norm_is_self_times_conjugate(a, b, d):
    x = QuadRing(d).element(a, b)
    product = x * x.conjugate()
    assert product.b == 0
    assert product.a == x.norm()


@pytest.mark.parametrize("d", TEST_QUAD_DS)
def test_norm_multiplicativity_bulk(d):
    ring = QuadRing(d)
    rng = random.Random(90_000 + d)
    for _ in range(1000):
        x = ring.element(rng.randint(-999, 999), rng.randint(-999, 999))
        y = ring.element(rng.randint(-999, 999), rng.randint(-999, 999))
        assert (x * y).norm() == x.norm() * y.norm()


# --- exact division -------------------------------------------------------


def test_divides_splits_two_over_gaussians():
    q = GAUSS.element(1, 1).divides(GAUSS.element(2, 0))
    assert q == GAUSS.element(1, -1)


def test_divides_self_gives_one():
    x = GOLDEN.element(8, -5)
    assert x.divides(x) == GOLDEN.one


def test_divides_absent_when_norms_obstruct():
    assert GAUSS.element(3, 0).divides(GAUSS.element(1, 1)) is None


def test_divides_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        GAUSS.zero.divides(GAUSS.one)


@pytest.mark.parametrize("d", TEST_QUAD_DS)
def test_divides_round_trip_and_refusal(d):
    ring = QuadRing(d)
    rng = random.Random(91_000 + d)
    for _ in range(300):
        g = ring.element(rng.randint(-40, 40), rng.randint(-40, 40))
        if not g:
            continue
        q = ring.element(rng.randint(-40, 40), rng.randint(-40, 40))
        f = g * q
        assert g.divides(f) == q
        result = g.divides(f + 1)
        if result is not None:
            assert g * result == f + 1
        else:
            # the defining check: (f+1) * conj(g) is not coordinatewise
            # divisible by norm(g)
            num = (f + 1) * g.conjugate()
            n = g.norm()
            assert num.a % n != 0 or num.b % n != 0


# --- units ----------------------------------------------------------------


def test_unit_examples():
    assert GAUSS.omega.is_unit()
    assert not GAUSS.zero.is_unit()
    assert QuadRing(2).element(1, 1).is_unit()  # norm 1 - 2 = -1


# --- gcd ------------------------------------------------------------------


def _is_associate(x, y):
    return x.divides(y) is not None and y.divides(x) is not None


def test_gcd_of_two_and_one_plus_i():
    g = quad_gcd(GAUSS.element(2, 0), GAUSS.element(1, 1))
    assert _is_associate(g, GAUSS.element(1, 1))


def test_gcd_with_zero_and_self():
    x = GAUSS.element(3, 7)
    assert quad_gcd(x, GAUSS.zero) == x
    assert _is_associate(quad_gcd(x, x), x)


def test_gcd_rejects_unsupported_ring():
    ring = QuadRing(-5)
    with pytest.raises(UnsupportedRingError):
        quad_gcd(ring.element(2, 0), ring.element(1, 1))


def test_gcd_rejects_double_zero():
    with pytest.raises(ZeroInputError):
        quad_gcd(GAUSS.zero, GAUSS.zero)


@pytest.mark.parametrize("d", sorted(NORM_EUCLIDEAN_D))
def test_gcd_divides_both_inputs_across_whitelist(d):
    ring = QuadRing(d)
    rng = random.Random(92_000 + d)
    for _ in range(25):
        x = ring.element(rng.randint(-60, 60), rng.randint(-60, 60))
        y = ring.element(rng.randint(-60, 60), rng.randint(-60, 60))
        if not x and not y:
            continue
        g = quad_gcd(x, y)
        assert g.divides(x) is not None
        assert g.divides(y) is not None


@pytest.mark.parametrize("d", [-1, -3, -7, 2, 5])
def test_gcd_is_maximal_among_small_common_divisors(d):
    ring = QuadRing(d)
    rng = random.Random(93_000 + d)
    for _ in range(20):
        x = ring.element(rng.randint(-10, 10), rng.randint(-10, 10))
        y = ring.element(rng.randint(-10, 10), rng.randint(-10, 10))
        if not x or not y or abs(x.norm()) > 200 or abs(y.norm()) > 200:
            continue
        g = quad_gcd(x, y)
        for a in range(-15, 16):
            for b in range(-15, 16):
                cand = ring.element(a, b)
                if not cand:
                    continue
                if cand.divides(x) is not None and cand.divides(y) is not None:
                    assert cand.divides(g) is not None


# --- Z[W] -----------------------------------------------------------------


def test_wrational_construction_examples():
    assert WRational(3, 5) == WRational(3, 5)
    assert WRational(6, 4) == WRational(3, 2)
    with pytest.raises(DenominatorNotInW):
        WRational(1, 3)
    with pytest.raises(ZeroDivisionError):
        WRational(1, 0)


def test_wrational_sign_normalization():
    x = WRational(3, -5)
    assert (x.num, x.den) == (-3, 5)


def test_wrational_reduction_can_remove_bad_primes():
    # 3/3 reduces to 1/1 before the denominator is factored
    assert WRational(3, 3) == WRational(1, 1)


def test_wrational_unit_examples():
    assert WRational(5, 2).is_unit()
    assert not WRational(3, 1).is_unit()
    assert WRational(1, 1).is_unit()
    assert WRational(-5, 2).is_unit()  # -1 is invertible
    assert not WRational(-3, 1).is_unit()
    with pytest.raises(ZeroInputError):
        WRational(0, 1).is_unit()


def test_wrational_arithmetic():
    half = WRational(1, 2)
    assert half + half == WRational(1, 1)
    assert WRational(3, 5) * WRational(3, 5) == WRational(9, 25)
    assert WRational(3, 5) * WRational(3, 5) + 1 == WRational(34, 25)
    assert 1 + half == WRational(3, 2)
