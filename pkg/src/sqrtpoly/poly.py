"""Dense univariate polynomials over F_p.

Coefficients are stored as plain ints in ascending order; index ``k`` holds
the coefficient of ``X**k``. The zero polynomial has no coefficients and
degree :data:`NEG_INF`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DuplicateNode, ModulusMismatch, ParseError, PreconditionError
from .field import FieldElement, check_modulus, inverse

KARATSUBA_THRESHOLD = 48


class _NegInf:
    """Degree of the zero polynomial; compares below every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")

    def __index__(self):
        raise TypeError("degree of the zero polynomial is not an integer")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add_into(out: list[int], src: Sequence[int], shift: int, sign: int = 1) -> None:
    for k, c in enumerate(src):
        out[k + shift] += sign * c


def _karatsuba(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # unreduced integer convolution; callers reduce mod p once at the end
    if not a or not b:
        return []
    if min(len(a), len(b)) < KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)
    half = max(len(a), len(b)) // 2
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    sa = [x + y for x, y in zip(a0, a1)] + list(a0[len(a1):] if len(a0) > len(a1) else a1[len(a0):])
    sb = [x + y for x, y in zip(b0, b1)] + list(b0[len(b1):] if len(b0) > len(b1) else b1[len(b0):])
    z1 = _karatsuba(sa, sb)
    out = [0] * (len(a) + len(b) - 1)
    _add_into(out, z0, 0)
    _add_into(out, z2, 2 * half)
    _add_into(out, z1, half)
    _add_into(out, z0, half, -1)
    _add_into(out, z2, half, -1)
    return out


class DensePoly:
    """Immutable polynomial over F_p."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Iterable, p: int):
        self.p = p
        self.coeffs = tuple(_trim([int(c) % p for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: list[int], p: int) -> "DensePoly":
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = tuple(_trim(coeffs))
        return obj

    @classmethod
    def zero(cls, p: int) -> "DensePoly":
        return cls((), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "DensePoly":
        return cls((c,), p)

    @classmethod
    def monomial(cls, k: int, p: int, c: int = 1) -> "DensePoly":
        return cls([0] * k + [c], p)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other: "DensePoly") -> None:
        if other.p != self.p:
            raise ModulusMismatch(f"mod {self.p} vs mod {other.p}")

    def _lift(self, other) -> "DensePoly":
        if isinstance(other, DensePoly):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            if other.modulus != self.p:
                raise ModulusMismatch(f"mod {self.p} vs mod {other.modulus}")
            return DensePoly.constant(other.value, self.p)
        if isinstance(other, int):
            return DensePoly.constant(other, self.p)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = (out[k] + c) % self.p
        return DensePoly._raw(out, self.p)

    __radd__ = __add__

    def __neg__(self):
        return DensePoly._raw([(-c) % self.p for c in self.coeffs], self.p)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            c = int(other) % self.p
            return DensePoly._raw([x * c % self.p for x in self.coeffs], self.p)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return DensePoly.zero(self.p)
        prod = _karatsuba(self.coeffs, other.coeffs)
        return DensePoly._raw([c % self.p for c in prod], self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "DensePoly":
        if n < 0:
            raise PreconditionError("negative polynomial power")
        result = DensePoly.constant(1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "DensePoly":
        """Multiply by X**k."""
        if self.is_zero():
            return self
        return DensePoly._raw([0] * k + list(self.coeffs), self.p)

    def scale(self, c: int) -> "DensePoly":
        return self * (c % self.p)

    def mod_cyclic(self, m: int) -> "DensePoly":
        """Reduce modulo X**m - 1 by folding exponent k onto k mod m."""
        if m < 1:
            raise PreconditionError("mod_cyclic needs m >= 1")
        out = [0] * m
        for k, c in enumerate(self.coeffs):
            out[k % m] += c
        return DensePoly._raw([c % self.p for c in out], self.p)

    def truncate(self, n: int) -> "DensePoly":
        """Keep only the coefficients of X**0 .. X**(n-1)."""
        return DensePoly._raw(list(self.coeffs[:n]), self.p)

    def derivative(self) -> "DensePoly":
        return DensePoly._raw(
            [k * c % self.p for k, c in enumerate(self.coeffs)][1:], self.p
        )

    def __call__(self, a) -> FieldElement:
        return FieldElement(self.eval_int(int(a)), self.p)

    def eval_int(self, a: int) -> int:
        p = self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def evaluate(self, a) -> FieldElement:
        if isinstance(a, FieldElement) and a.modulus != self.p:
            raise ModulusMismatch(f"mod {self.p} vs mod {a.modulus}")
        return self(a)

    def monic(self) -> "DensePoly":
        if self.is_zero():
            return self
        return self * inverse(self.leading(), self.p)

    def __divmod__(self, other: "DensePoly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return DensePoly.zero(p), self
        inv_lead = inverse(other.leading(), p)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            c = c * inv_lead % p
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
        return (
            DensePoly._raw(quot, p),
            DensePoly._raw([c % p for c in rem[:db]], p),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"DensePoly([{self.to_string()}], p={self.p})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "X" if k == 1 else f"X^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def gcd(f: DensePoly, g: DensePoly) -> DensePoly:
    """Monic greatest common divisor."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def radical(f: DensePoly) -> DensePoly:
    """Squarefree part ``f / gcd(f, f')``, made monic.

    Exact when every irreducible factor of f has multiplicity below p,
    which always holds for deg(f) < p.
    """
    if f.is_zero():
        raise PreconditionError("radical of the zero polynomial")
    if f.degree == 0:
        return DensePoly.constant(1, f.p)
    return (f // gcd(f, f.derivative())).monic()


def vanishing_poly(nodes: Sequence[int], p: int) -> DensePoly:
    """Product of (X - a) over the nodes."""
    coeffs = [1]
    for a in nodes:
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= a * c
        coeffs = [c % p for c in nxt]
    return DensePoly._raw(coeffs, p)


def _deflate(coeffs: Sequence[int], a: int, p: int) -> list[int]:
    # synthetic division of a polynomial with root a by (X - a)
    n = len(coeffs) - 1
    out = [0] * n
    acc = 0
    for k in range(n, 0, -1):
        acc = (acc * a + coeffs[k]) % p
        out[k - 1] = acc
    return out


def lagrange_basis(nodes: Sequence[int], p: int) -> list[list[int]]:
    """Coefficient lists (ascending, length n) of the Lagrange basis polynomials.

    Uses barycentric weights w_j = 1 / prod_{k != j}(x_j - x_k), and the
    master product divided by (X - x_j), for O(n^2) total work.
    """
    nodes = [a % p for a in nodes]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode("interpolation nodes must be distinct")
    master = vanishing_poly(nodes, p).coeffs
    basis = []
    for j, xj in enumerate(nodes):
        denom = 1
        for k, xk in enumerate(nodes):
            if k != j:
                denom = denom * (xj - xk) % p
        w = inverse(denom, p)
        basis.append([c * w % p for c in _deflate(master, xj, p)])
    return basis


def interpolate(points: Sequence[tuple], p: int | None = None) -> DensePoly:
    """Unique polynomial of degree < len(points) through the given points."""
    if not points:
        raise PreconditionError("interpolate needs at least one point")
    if p is None:
        x0 = points[0][0]
        if not isinstance(x0, FieldElement):
            raise TypeError("pass p explicitly for integer points")
        p = x0.modulus
    for x, y in points:
        for v in (x, y):
            if isinstance(v, FieldElement) and v.modulus != p:
                raise ModulusMismatch(f"point mod {v.modulus} in a mod {p} interpolation")
    xs = [int(x) % p for x, _ in points]
    ys = [int(y) % p for _, y in points]
    basis = lagrange_basis(xs, p)
    out = [0] * len(points)
    for y, row in zip(ys, basis):
        if y:
            for k, c in enumerate(row):
                out[k] += y * c
    return DensePoly(out, p)


def delta_alpha(alpha, m: int, p: int) -> DensePoly:
    """Indicator of ``alpha`` on its coset of the order-m subgroup.

    Equals (1/m) * sum_{k<m} (X/alpha)**k: one at alpha, zero at every
    other element of alpha * <h> where h has order m.
    """
    check_modulus(p)
    a = int(alpha) % p
    if a == 0:
        raise PreconditionError("delta_alpha needs a nonzero node")
    if (p - 1) % m:
        raise PreconditionError(f"{m} does not divide p - 1 = {p - 1}")
    inv_m = inverse(m, p)
    inv_a = inverse(a, p)
    coeffs, cur = [], inv_m
    for _ in range(m):
        coeffs.append(cur)
        cur = cur * inv_a % p
    return DensePoly._raw(coeffs, p)


def parse_coeffs(text: str, p: int) -> DensePoly:
    """Parse ``"0,0,3"``, a JSON array, or ``@path`` pointing at either."""
    if text is None:
        raise ParseError("missing polynomial")
    text = text.strip()
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text().strip()
        except OSError as exc:
            raise ParseError(f"cannot read {text[1:]}: {exc}") from exc
    if not text:
        raise ParseError("empty coefficient list")
    try:
        if text.startswith("["):
            values = json.loads(text)
            if not isinstance(values, list) or not values:
                raise ValueError("expected a nonempty JSON array")
        else:
            values = [v.strip() for v in text.split(",")]
        coeffs = [int(v) for v in values]
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad coefficient list {text!r}: {exc}") from exc
    return DensePoly(coeffs, p)
