"""Shared generators for randomized tests.

Random polynomials use coefficients uniform in [-50, 50] and degrees uniform
in [1, 12] unless stated otherwise, always from an explicitly seeded RNG so
every run sees the same instances.
"""

import random

from dringkit import Poly, QuadRing, ZZ, primitive_part


def rand_coeff(rng: random.Random, ring, bound: int = 50):
    if ring == ZZ:
        return rng.randint(-bound, bound)
    return ring.element(rng.randint(-bound, bound), rng.randint(-bound, bound))


def rand_nonzero_coeff(rng: random.Random, ring, bound: int = 50):
    while True:
        c = rand_coeff(rng, ring, bound)
        if c:
            return c


def rand_poly(rng: random.Random, ring=ZZ, min_deg: int = 1, max_deg: int = 12,
              bound: int = 50) -> Poly:
    degree = rng.randint(min_deg, max_deg)
    coeffs = [rand_coeff(rng, ring, bound) for _ in range(degree)]
    coeffs.append(rand_nonzero_coeff(rng, ring, bound))
    return Poly(coeffs, ring)


def rand_primitive(rng: random.Random, ring=ZZ, min_deg: int = 1, max_deg: int = 12,
                   bound: int = 50) -> Poly:
    """A random primitive polynomial, obtained by stripping the content."""
    _, prim = primitive_part(rand_poly(rng, ring, min_deg, max_deg, bound))
    return prim


def brute_is_prime(n: int) -> bool:
    """Trial-division primality check, independent of the library sieve."""
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


TEST_QUAD_DS = (-1, -3, 5)
