"""Seeded trial generators shared by the unit and acceptance tests."""

import random
from fractions import Fraction

from sympy import primerange

from sqrtpoly.poly import DensePoly

PRIMES_TO_10007 = list(primerange(3, 10008))


def random_power_trials(count, seed, max_deg=8, max_t=6, max_p=10007):
    """(f, t, p) with 1 <= deg f <= max_deg, 2 <= t <= max_t and deg(f)*t < p."""
    rng = random.Random(seed)
    primes = [q for q in PRIMES_TO_10007 if q <= max_p]
    out = []
    while len(out) < count:
        p = rng.choice(primes)
        t = rng.randint(2, max_t)
        d = rng.randint(1, max_deg)
        if d * t >= p:
            continue
        if rng.random() < 0.5:
            # sparse supports produce long zero runs in the power
            coeffs = [rng.randrange(1, p) if rng.random() < 0.3 else 0 for _ in range(d)]
        else:
            coeffs = [rng.randrange(p) for _ in range(d)]
        coeffs.append(rng.randrange(1, p))
        out.append((DensePoly(coeffs, p), t, p))
    return out


def _rational(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_rational_polys(count, seed, constant, max_deg=5):
    """Rational f with the given constant term, 1 <= deg f <= max_deg, sometimes sparse."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, max_deg)
        sparse = rng.random() < 0.4
        coeffs = [Fraction(constant)]
        for _k in range(1, d):
            coeffs.append(Fraction(0) if sparse and rng.random() < 0.7 else _rational(rng))
        lead = _rational(rng)
        while lead == 0:
            lead = _rational(rng)
        coeffs.append(lead)
        out.append(coeffs)
    return out


EXPONENTS = [(1, 2), (1, 3), (2, 3), (-1, 2)]
