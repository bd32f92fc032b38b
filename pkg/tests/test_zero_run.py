import random
from fractions import Fraction
from math import factorial

import pytest
from sympy import binomial, divisors, primerange

from suites import EXPONENTS, random_power_trials, random_rational_polys
from sqrtpoly.errors import HypothesisViolated, PreconditionError
from sqrtpoly.field import get_field
from sqrtpoly.poly import DensePoly, lagrange_basis
from sqrtpoly.zero_run import (
    HIGH_DEGREE,
    IDENTITY,
    TWISTED,
    RationalSeries,
    abc_check,
    binomial_series,
    check_binomial_consistency,
    check_exp_consistency,
    check_power_run,
    default_order,
    exp_series,
    two_value_classify,
    zero_runs,
)


def test_zero_runs_examples():
    assert zero_runs([1, 0, 2, 0, 1]).max_run == 1
    d = 5
    square = DensePoly.monomial(d, 101) + 1
    rep = zero_runs((square * square).coeffs)
    assert (rep.max_run, rep.b, rep.l) == (d - 1, 0, d)
    assert zero_runs([0, 0, 0, 1]).max_run == 0
    assert zero_runs([0, 3, 0, 0, 0, 2, 0]).to_json() == {
        "max_run": 3, "b": 1, "l": 5, "d": None, "bound_ok": None,
    }
    with pytest.raises(PreconditionError):
        zero_runs([0, 0])


def test_check_power_run_examples():
    rep = check_power_run(DensePoly([1, 0, 1], 13), 2)
    assert rep.power.coeffs == (1, 0, 2, 0, 1)
    assert rep.max_run == 1 and rep.bound_ok
    rep = check_power_run(DensePoly([1, 0, 0, 1], 31), 3)
    assert rep.max_run == 2 == rep.d - 1
    rep = check_power_run(DensePoly([1, 1], 13), 5)
    assert all(rep.power.coeffs) and rep.max_run == 0
    assert [int(binomial(5, k)) % 13 for k in range(6)] == list(rep.power.coeffs)


def test_hypothesis_violated():
    f = DensePoly([1, 0, 0, 1], 7)
    with pytest.raises(HypothesisViolated):
        check_power_run(f, 3)
    rep = check_power_run(f, 3, strict=False)
    assert not rep.hypothesis_ok and rep.to_json()["bound_ok"] is None


def test_triple_splits_at_gap():
    rep = check_power_run(DensePoly([1, 0, 1], 13), 2)
    a, b, c = rep.triple()
    assert a + b == c
    assert a.coeffs == (1,) and b.coeffs == (0, 0, 2, 0, 1)


def test_lemma_randomized():
    for f, t, p in random_power_trials(300, seed=11):
        rep = check_power_run(f, t, p)
        assert rep.max_run <= f.degree - 1 or rep.max_run == 0
        if rep.b is not None:
            assert f.degree + rep.b >= rep.l


@pytest.mark.parametrize("d", range(1, 9))
@pytest.mark.parametrize("t", [1, 2, 3, 5])
def test_tightness_family(d, t):
    p = 10007
    rng = random.Random(d * 10 + t)
    f = DensePoly.monomial(d, p, rng.randrange(1, p)) + rng.randrange(1, p)
    assert check_power_run(f, t, p).max_run == d - 1


def test_abc_examples():
    p = 13
    a = DensePoly([1, 0, 2], p)
    b = DensePoly.monomial(4, p)
    rep = abc_check(a, b, a + b)
    assert (rep.max_degree, rep.radical_degree) == (4, 5)
    rep = abc_check(DensePoly([1], p), DensePoly([0, 1], p), DensePoly([1, 1], p))
    assert rep.max_degree == 1 and rep.radical_degree - 1 == 1
    x = DensePoly([0, 1], p)
    with pytest.raises(PreconditionError):
        abc_check(x, x, x + x)
    with pytest.raises(PreconditionError):
        abc_check(x, x, x)


def test_abc_on_lemma_triples():
    checked = 0
    for f, t, p in random_power_trials(200, seed=5):
        rep = check_power_run(f, t, p)
        if rep.b is None:
            continue
        abc_check(*rep.triple())
        checked += 1
    assert checked > 100


# -- characteristic zero ---------------------------------------------------


def gen_binomial(alpha, n):
    """C(alpha, n) by the falling-factorial definition."""
    out = Fraction(1)
    for k in range(n):
        out *= (alpha - k) / Fraction(k + 1)
    return out


def test_binomial_examples():
    h = binomial_series([1, 1], 1, 2, 4)
    assert h.fractions() == [Fraction(1), Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]
    h = binomial_series([1, 1], 1, 2, 30)
    assert h.fractions() == [gen_binomial(Fraction(1, 2), n) for n in range(30)]
    assert binomial_series([1, 1], 2, 1, 8).fractions() == [1, 2, 1, 0, 0, 0, 0, 0]
    h = binomial_series([1, 0, 1], 1, 2, 12)
    assert all(c == 0 for c in h.coeffs[1::2])
    assert h.zero_runs(2).max_run == 1
    with pytest.raises(PreconditionError):
        binomial_series([2, 1], 1, 2)


def test_binomial_default_order():
    assert binomial_series([1, 1, 1], 1, 3).order == default_order(2, 3) == 64


def test_exp_examples():
    h = exp_series([0, 1], 12)
    assert h.fractions() == [Fraction(1, factorial(n)) for n in range(12)]
    assert h.zero_runs(1).max_run == 0
    h = exp_series([0, 0, 1], 12)
    assert h.fractions() == [Fraction(1, factorial(n // 2)) if n % 2 == 0 else 0 for n in range(12)]
    assert h.zero_runs(2).max_run == 1
    with pytest.raises(PreconditionError):
        exp_series([1, 1])


@pytest.mark.parametrize("r,s", EXPONENTS)
def test_binomial_consistency_small(r, s):
    for f in random_rational_polys(10, seed=r * 7 + s, constant=1):
        h = binomial_series(f, r, s, 60)
        assert check_binomial_consistency(f, r, s, h)
        d = len(f) - 1
        assert h.zero_runs(d).max_run <= d - 1


def test_exp_consistency_small():
    for f in random_rational_polys(10, seed=3, constant=0):
        h = exp_series(f, 60)
        assert check_exp_consistency(f, h, product=True)
        d = len(f) - 1
        assert h.zero_runs(d).max_run <= d - 1


def test_consistency_detects_tampering():
    h = binomial_series([1, 1], 1, 2, 10)
    bad = RationalSeries(h.coeffs[:5] + (h.coeffs[5] + 1,) + h.coeffs[6:], 10)
    assert not check_binomial_consistency([1, 1], 1, 2, bad)


def test_series_text():
    assert binomial_series([1, 1], 1, 2, 3).to_text() == "1/1,1/2,-1/8"


# -- two-value classification ---------------------------------------------


def test_classify_examples():
    p = 13
    f = DensePoly([6, 0, 0, 0, 1, 0, 0, 0, 1], p)
    C = DensePoly([12], p)
    assert f.eval_int(1) == 8 and 64 % 13 == 12
    assert two_value_classify(f, C, 12, p) == HIGH_DEGREE
    assert two_value_classify(DensePoly([5], p), C, 12, p) == IDENTITY
    for q in (7, 11, 19, 23):
        m = (q - 1) // 2
        f = DensePoly.monomial((q + 1) // 4, q)
        assert two_value_classify(f, DensePoly([0, 1], q), m, q) == TWISTED
    with pytest.raises(HypothesisViolated):
        two_value_classify(DensePoly([0, 1], p), C, 12, p)


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37, 43, 61])
def test_tightness_example_cube_roots(p):
    # X^(2m/3) + X^(m/3) - 1/2 squares to 9/4 on every subgroup of order divisible by 3
    for m in divisors(p - 1):
        if m % 3:
            continue
        half = pow(2, -1, p)
        f = DensePoly.monomial(2 * m // 3, p) + DensePoly.monomial(m // 3, p) - half
        C = DensePoly([9 * half * half], p)
        assert two_value_classify(f, C, m, p) == HIGH_DEGREE
        assert 3 * f.degree == 2 * m


def test_classify_exhaustive_small_primes():
    checked = 0
    for p in primerange(3, 62):
        g = get_field(p).generator
        for m in divisors(p - 1):
            if m > 12:
                continue
            h = pow(g, (p - 1) // m, p)
            nodes = [pow(h, j, p) for j in range(m)]
            basis = lagrange_basis(nodes, p)
            for c0 in sorted({x * x % p for x in range(1, p)})[:2]:
                s = min(x for x in range(p) if x * x % p == c0)
                C = DensePoly([c0], p)
                for mask in range(1 << m):
                    vals = [p - s if mask >> j & 1 else s for j in range(m)]
                    coeffs = [sum(v * row[k] for v, row in zip(vals, basis)) for k in range(m)]
                    f = DensePoly(coeffs, p)
                    assert two_value_classify(f, C, m, p) in (IDENTITY, TWISTED, HIGH_DEGREE)
                    checked += 1
    assert checked > 5000
