"""Consecutive zero coefficients in powers, rational powers and exponentials.

Over F_p, if deg f <= d and d*t < p then f**t has no run of d consecutive
zero coefficients between two nonzero ones. The same cap holds in
characteristic zero for the power series of f**(r/s) and exp(f). The
helpers here compute those expansions exactly and measure the runs.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from gmpy2 import mpq

from .errors import HypothesisViolated, PreconditionError, TheoremViolation
from .field import check_modulus, get_field
from .poly import DensePoly, gcd, radical


@dataclass(frozen=True)
class ZeroRunReport:
    """Longest interior zero run; ``b`` and ``l`` are the nonzero exponents around it."""

    max_run: int
    b: Optional[int]
    l: Optional[int]
    d: Optional[int] = None

    @property
    def bound_ok(self) -> Optional[bool]:
        if self.d is None:
            return None
        return self.max_run <= max(self.d - 1, 0)

    def to_json(self) -> dict:
        out = asdict(self)
        out["bound_ok"] = self.bound_ok
        return out


def zero_runs(coeffs: Sequence, d: Optional[int] = None) -> ZeroRunReport:
    """Measure the widest gap between consecutive nonzero coefficients.

    Leading and trailing zeros are ignored. Ties go to the lowest gap.
    """
    support = [k for k, c in enumerate(coeffs) if c != 0]
    if not support:
        raise PreconditionError("all-zero coefficient sequence has no interior runs")
    if len(support) == 1:
        return ZeroRunReport(0, None, None, d)
    best = (0, support[0], support[1])
    for b, l in zip(support, support[1:]):
        if l - b - 1 > best[0]:
            best = (l - b - 1, b, l)
    return ZeroRunReport(best[0], best[1], best[2], d)


@dataclass(frozen=True)
class PowerRunReport(ZeroRunReport):
    t: int = 1
    p: int = 0
    hypothesis_ok: bool = True
    power: Optional[DensePoly] = None

    def to_json(self) -> dict:
        return {
            "max_run": self.max_run,
            "b": self.b,
            "l": self.l,
            "d": self.d,
            "t": self.t,
            "p": self.p,
            "hypothesis_ok": self.hypothesis_ok,
            "bound_ok": self.bound_ok if self.hypothesis_ok else None,
        }

    def triple(self) -> tuple[DensePoly, DensePoly, DensePoly]:
        """(B, A*X^l, f^t) split at the widest gap, common factor removed."""
        if self.b is None or self.power is None:
            raise PreconditionError("no interior gap to split at")
        c = self.power
        low = c.truncate(self.b + 1)
        high = c - low
        common = gcd(low, high)
        return low // common, high // common, c // common


def check_power_run(
    f: DensePoly, t: int, p: Optional[int] = None, *, strict: bool = True
) -> PowerRunReport:
    """Expand f**t over F_p and check the interior-run cap d - 1.

    Raises HypothesisViolated when d*t >= p, unless ``strict`` is False, in
    which case the report is returned with ``hypothesis_ok`` unset and no
    assertion is made.
    """
    p = f.p if p is None else p
    check_modulus(p)
    if f.is_zero():
        raise PreconditionError("f must be nonzero")
    if t < 1:
        raise PreconditionError("exponent must be positive")
    d = f.degree
    power = f**t
    run = zero_runs(power.coeffs, d)
    ok = d * t < p
    report = PowerRunReport(run.max_run, run.b, run.l, d, t, p, ok, power)
    if not ok:
        if strict:
            raise HypothesisViolated(f"d*t = {d * t} >= p = {p}")
        return report
    if not report.bound_ok:
        raise TheoremViolation(f"run {run.max_run} >= d = {d} in ({f})^{t}")
    if run.b is not None and d + run.b < run.l:
        raise TheoremViolation(f"d + b = {d + run.b} < l = {run.l}")
    return report


@dataclass(frozen=True)
class AbcReport:
    max_degree: int
    radical_degree: int

    @property
    def holds(self) -> bool:
        return self.max_degree <= self.radical_degree - 1

    def to_json(self) -> dict:
        return {**asdict(self), "holds": self.holds}


def abc_check(a: DensePoly, b: DensePoly, c: DensePoly) -> AbcReport:
    """Mason-Stothers: max deg(a, b, c) <= deg rad(abc) - 1 for coprime a + b = c."""
    if a + b != c:
        raise PreconditionError("a + b != c")
    if any(x.is_zero() for x in (a, b, c)):
        raise PreconditionError("a, b, c must be nonzero")
    if gcd(a, b).degree > 0:
        raise PreconditionError("a and b share a nonconstant factor")
    if all(x.derivative().is_zero() for x in (a, b, c)):
        raise PreconditionError("all three derivatives vanish")
    # pairwise coprime, so rad(abc) = rad(a) rad(b) rad(c); keeps each factor below degree p
    rad_deg = sum(radical(x).degree for x in (a, b, c))
    report = AbcReport(max(a.degree, b.degree, c.degree), rad_deg)
    if not report.holds:
        raise TheoremViolation(f"abc fails: {report}")
    return report


# -- characteristic zero --------------------------------------------------


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


@dataclass(frozen=True)
class RationalSeries:
    """Exact power series truncated to X^0 .. X^(order-1)."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        cs = tuple(_q(c) for c in self.coeffs[: self.order])
        cs = cs + (mpq(0),) * (self.order - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int) -> "RationalSeries":
        return cls(tuple(coeffs), order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def fractions(self) -> list[Fraction]:
        return [Fraction(int(c.numerator), int(c.denominator)) for c in self.coeffs]

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [mpq(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return RationalSeries(tuple(out), n)

    def __pow__(self, k: int) -> "RationalSeries":
        if k < 0:
            raise PreconditionError("use inverse() for negative powers")
        result = RationalSeries((1,), self.order)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "RationalSeries":
        a = self.coeffs
        if not a[0]:
            raise PreconditionError("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order):
            acc = mpq(0)
            for k in range(1, n + 1):
                if a[k]:
                    acc += a[k] * out[n - k]
            out.append(-acc * inv0)
        return RationalSeries(tuple(out), self.order)

    def derivative(self) -> "RationalSeries":
        return RationalSeries(
            tuple(k * self.coeffs[k] for k in range(1, self.order)), self.order - 1
        )

    def __neg__(self):
        return RationalSeries(tuple(-c for c in self.coeffs), self.order)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def zero_runs(self, d: Optional[int] = None) -> ZeroRunReport:
        return zero_runs(self.coeffs, d)

    def to_text(self) -> str:
        return ",".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs)


def _rational_poly(f: Sequence) -> list[mpq]:
    cs = [_q(c) for c in f]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def default_order(d: int, s: int = 1) -> int:
    return s * d * 8 + 16


def binomial_series(f: Sequence, r: int, s: int = 1, N: Optional[int] = None) -> RationalSeries:
    """The series h with h(0) = 1 and h**s = f**r, for f(0) = 1.

    Uses f h' = (r/s) f' h, which gives each coefficient from the previous
    deg(f) ones.
    """
    if s < 1:
        raise PreconditionError("s must be positive")
    cs = _rational_poly(f)
    if not cs or cs[0] != 1:
        raise PreconditionError("binomial_series needs f(0) = 1")
    d = len(cs) - 1
    N = default_order(d, s) if N is None else N
    alpha = mpq(r, s)
    h = [mpq(1)]
    for n in range(1, N):
        acc = mpq(0)
        for k in range(1, min(n, d) + 1):
            if cs[k]:
                acc += (alpha * k - (n - k)) * cs[k] * h[n - k]
        h.append(acc / n)
    return RationalSeries(tuple(h), N)


def exp_series(f: Sequence, N: Optional[int] = None) -> RationalSeries:
    """The series h = exp(f) for f(0) = 0, from h' = f' h and h(0) = 1."""
    cs = _rational_poly(f)
    if cs and cs[0] != 0:
        raise PreconditionError("exp_series needs f(0) = 0")
    d = max(len(cs) - 1, 0)
    N = default_order(d) if N is None else N
    h = [mpq(1)]
    for n in range(1, N):
        acc = mpq(0)
        for k in range(1, min(n, d) + 1):
            if cs[k]:
                acc += k * cs[k] * h[n - k]
        h.append(acc / n)
    return RationalSeries(tuple(h), N)


def check_binomial_consistency(f: Sequence, r: int, s: int, h: RationalSeries) -> bool:
    """h**s == f**r to the truncation order, by direct multiplication."""
    fs = RationalSeries.from_poly(_rational_poly(f), h.order)
    lhs = h**s
    rhs = fs ** abs(r)
    if r < 0:
        return (lhs * rhs) == RationalSeries((1,), h.order)
    return lhs == rhs


def check_exp_consistency(f: Sequence, h: RationalSeries, *, product: bool = False) -> bool:
    """h' == f' h; with ``product`` also exp(f) * exp(-f) == 1."""
    cs = _rational_poly(f)
    fprime = RationalSeries.from_poly(
        [k * c for k, c in enumerate(cs)][1:], h.order - 1
    )
    trimmed = RationalSeries(h.coeffs[: h.order - 1], h.order - 1)
    ok = h.derivative() == fprime * trimmed
    if ok and product:
        neg = exp_series([-c for c in cs], h.order)
        ok = (h * neg) == RationalSeries((1,), h.order)
    return ok


# -- two-value classification ---------------------------------------------

IDENTITY = "identity"
TWISTED = "twisted"
HIGH_DEGREE = "high-degree"


def two_value_classify(f: DensePoly, C: DensePoly, m: int, p: int) -> str:
    """Classify f with f(a)^2 = C(a) on the order-m subgroup of F_p^*.

    Returns ``identity`` (f^2 = C), ``twisted`` (f^2 = C X^m) or
    ``high-degree`` (deg f >= 2m/3).
    """
    check_modulus(p)
    if (p - 1) % m:
        raise PreconditionError(f"{m} does not divide p - 1")
    if C.is_zero() or 3 * C.degree > m:
        raise PreconditionError("C must be nonzero with deg C <= m/3")
    h = pow(get_field(p).generator, (p - 1) // m, p)
    a = 1
    for _ in range(m):
        fa = f.eval_int(a)
        if fa * fa % p != C.eval_int(a):
            raise HypothesisViolated(f"f(a)^2 != C(a) at a = {a}")
        a = a * h % p
    sq = f * f
    if sq == C:
        return IDENTITY
    if sq == C.shift(m):
        return TWISTED
    if 3 * f.degree >= 2 * m:
        return HIGH_DEGREE
    raise TheoremViolation(f"no alternative holds for f = {f}, C = {C}, m = {m}")
