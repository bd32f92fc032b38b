import random

import pytest
from hypothesis import given, settings, strategies as st

from sqrtpoly.errors import DuplicateNode, ModulusMismatch, ParseError, PreconditionError
from sqrtpoly.field import FieldElement, get_field
from sqrtpoly.poly import (
    NEG_INF,
    DensePoly,
    _schoolbook,
    delta_alpha,
    gcd,
    interpolate,
    parse_coeffs,
    radical,
)

P = 10007
polys = st.lists(st.integers(0, P - 1), max_size=70).map(lambda c: DensePoly(c, P))


def test_ring_examples():
    f = DensePoly([1, 1], 7)
    assert (f * f).coeffs == (1, 2, 1)
    assert DensePoly.monomial(6, 13).mod_cyclic(6).coeffs == (1,)
    g = DensePoly([1, 0, 1], 13)
    assert (g**2).coeffs == (1, 0, 2, 0, 1)
    assert (g**0).coeffs == (1,)


def test_zero_poly_and_trim():
    z = DensePoly([0, 0], 13)
    assert z.coeffs == () and z.degree is NEG_INF
    assert NEG_INF < -1 and NEG_INF < 0 and not NEG_INF > -10**9
    assert NEG_INF != -1
    with pytest.raises(TypeError):
        range(z.degree)
    assert DensePoly([3, 0, 13], 13).degree == 0


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        DensePoly([1], 13) + DensePoly([1], 17)
    with pytest.raises(ModulusMismatch):
        DensePoly([1, 1], 13).evaluate(FieldElement(1, 17))


def test_derivative_examples():
    assert DensePoly.monomial(13, 13).derivative().is_zero()
    f = DensePoly([0, 0, 3, 0, 0, 11], 13)
    assert f.derivative().coeffs == (0, 6, 0, 0, 3)
    assert DensePoly([5], 13).derivative().is_zero()


def test_evaluate_examples():
    f = DensePoly([0, 0, 3, 0, 0, 11], 13)
    assert f(3).value == 9
    assert f.evaluate(FieldElement(3, 13)).value == 9
    g = DensePoly([4, 7, 1], 13)
    assert g(0).value == 4
    assert g(1).value == 12


@settings(max_examples=60)
@given(polys, polys)
def test_karatsuba_matches_schoolbook(f, g):
    expected = [c % P for c in _schoolbook(f.coeffs, g.coeffs)] if f.coeffs and g.coeffs else []
    assert (f * g).coeffs == DensePoly(expected, P).coeffs


@settings(max_examples=40)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == f.degree + g.degree


@settings(max_examples=40)
@given(polys, polys, st.integers(0, P - 1))
def test_derivative_linear_and_product_rule(f, g, c):
    assert (f + g * c).derivative() == f.derivative() + g.derivative() * c
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@pytest.mark.parametrize("p,m", [(13, 6), (13, 4), (17, 8), (31, 5), (101, 25)])
def test_mod_cyclic_agrees_on_roots_of_unity(p, m):
    rng = random.Random(p * m)
    f = DensePoly([rng.randrange(p) for _ in range(3 * m + 5)], p)
    red = f.mod_cyclic(m)
    assert red.degree < m
    h = pow(get_field(p).generator, (p - 1) // m, p)
    a = 1
    for _ in range(m):
        assert red.eval_int(a) == f.eval_int(a)
        a = a * h % p


def test_interpolate_examples():
    assert interpolate([(1, 2), (2, 3)], 5).coeffs == (1, 1)
    assert interpolate([(4, 9)], 13).coeffs == (9,)
    F = get_field(13)
    assert interpolate([(F(1), F(2)), (F(2), F(3))]).coeffs == (1, 1)
    with pytest.raises(DuplicateNode):
        interpolate([(1, 2), (14, 3)], 13)


def test_interpolate_sign_assignments_round_trip():
    p = 13
    S = sorted({x * x % p for x in range(1, p)})
    rng = random.Random(0)
    for _ in range(20):
        pts = []
        for a in S:
            r = min(x for x in range(p) if x * x % p == a)
            pts.append((a, r if rng.random() < 0.5 else p - r))
        f = interpolate(pts, p)
        assert all(f.eval_int(a) == b for a, b in pts)


@pytest.mark.parametrize("seed", range(10))
def test_interpolate_evaluate_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 32)
    nodes = rng.sample(range(P), n)
    f = DensePoly([rng.randrange(P) for _ in range(n)], P)
    assert interpolate([(a, f.eval_int(a)) for a in nodes], P) == f


@pytest.mark.parametrize("p", [13, 17, 29])
def test_delta_alpha_on_squares(p):
    m = (p - 1) // 2
    S = sorted({x * x % p for x in range(1, p)})
    for alpha in S:
        d = delta_alpha(alpha, m, p)
        assert d.degree == m - 1
        for beta in S:
            assert d.eval_int(beta) == (1 if beta == alpha else 0)
        assert d == interpolate([(b, int(b == alpha)) for b in S], p)
    with pytest.raises(PreconditionError):
        delta_alpha(0, m, p)


def test_gcd_and_radical_examples():
    p = 101
    x = DensePoly([0, 1], p)
    assert radical(x * x) == x
    f = DensePoly([1, 1], p) ** 3 * DensePoly([2, 1], p)
    assert radical(f) == DensePoly([1, 1], p) * DensePoly([2, 1], p)
    g = DensePoly([6, 0, 3], p)
    assert gcd(g, DensePoly.zero(p)) == g.monic()
    with pytest.raises(PreconditionError):
        gcd(DensePoly.zero(p), DensePoly.zero(p))


def test_divmod_reconstructs():
    rng = random.Random(3)
    for _ in range(30):
        f = DensePoly([rng.randrange(P) for _ in range(rng.randint(0, 40))], P)
        g = DensePoly([rng.randrange(P) for _ in range(rng.randint(1, 20))], P)
        if g.is_zero():
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree


@pytest.mark.parametrize("seed", range(15))
def test_radical_divides_and_is_squarefree(seed):
    rng = random.Random(seed)
    p = 31
    f = DensePoly([1], p)
    for _ in range(rng.randint(1, 4)):
        factor = DensePoly([rng.randrange(p) for _ in range(rng.randint(1, 3))] + [1], p)
        f = f * factor ** rng.randint(1, 3)
    assert f.degree < p
    rad = radical(f)
    assert (f % rad).is_zero()
    assert gcd(rad, rad.derivative()).degree == 0


def test_parse_coeffs(tmp_path):
    assert parse_coeffs("0,0,3,0,0,11", 13).coeffs == (0, 0, 3, 0, 0, 11)
    assert parse_coeffs("[0, 0, 3, 0, 0, 11]", 13).coeffs == (0, 0, 3, 0, 0, 11)
    path = tmp_path / "f.txt"
    path.write_text("1,0,1\n")
    assert parse_coeffs(f"@{path}", 13).coeffs == (1, 0, 1)
    for bad in ("", "1,,2", "x", "[]", "@/nonexistent/file"):
        with pytest.raises(ParseError):
            parse_coeffs(bad, 13)
    assert DensePoly([0, 0, 3, 0, 0, 11], 13).to_string() == "0,0,3,0,0,11"
