"""Prime-field arithmetic, quadratic residues and square roots mod p."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Optional, Union

from sympy import factorint, isprime

from .errors import ModulusMismatch, NonResidue, NotPrime, WrongResidueClass

MAX_MODULUS = 1 << 62


class FieldElement:
    """A canonical residue ``value`` in ``[0, modulus)``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.modulus = modulus
        self.value = value % modulus

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value + b, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value - b, self.modulus)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(b - self.value, self.modulus)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value * b, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value * inverse(b, self.modulus), self.modulus)

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(b * inverse(self.value, self.modulus), self.modulus)

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return FieldElement(pow(self.inv().value, -exponent, self.modulus), self.modulus)
        return FieldElement(pow(self.value, exponent, self.modulus), self.modulus)

    def inv(self) -> "FieldElement":
        return FieldElement(inverse(self.value, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.value} mod {self.modulus})"


ElementLike = Union[FieldElement, int]


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def check_modulus(p: int) -> int:
    if not isinstance(p, int) or p < 3 or p % 2 == 0 or p >= MAX_MODULUS or not isprime(p):
        raise NotPrime(f"modulus must be an odd prime below 2^62, got {p}")
    return p


def _split(a: ElementLike, p: Optional[int]) -> tuple[int, int]:
    if isinstance(a, FieldElement):
        if p is not None and p != a.modulus:
            raise ModulusMismatch(f"mod {a.modulus} vs mod {p}")
        return a.value, a.modulus
    if p is None:
        raise TypeError("a plain integer needs an explicit modulus")
    return a % p, p


def legendre(a: ElementLike, p: Optional[int] = None) -> int:
    """Euler's criterion: 0 for zero, 1 for nonzero squares, -1 otherwise."""
    a, p = _split(a, p)
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: ElementLike, p: Optional[int] = None) -> FieldElement:
    """Tonelli-Shanks square root, returning the smaller of the two roots."""
    a, p = _split(a, p)
    if a == 0:
        return FieldElement(0, p)
    if legendre(a, p) != 1:
        raise NonResidue(f"{a} is not a square mod {p}")
    ctx = get_field(p)
    q, s = ctx.odd_part, ctx.two_adicity
    z = ctx.nonresidue
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return FieldElement(min(r, p - r), p)


def multiplicative_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    order = p - 1
    for q in factorint(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def find_generator(p: int) -> FieldElement:
    """Smallest positive primitive root mod p."""
    check_modulus(p)
    prime_factors = list(factorint(p - 1))
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in prime_factors):
        g += 1
    return FieldElement(g, p)


def sqrt_of_minus_one(p: int) -> FieldElement:
    if p % 4 != 1:
        raise WrongResidueClass(f"-1 is not a square mod {p} (p = 3 mod 4)")
    return sqrt_mod(p - 1, p)


@dataclass(frozen=True)
class FieldContext:
    """Cached per-prime constants. Build through :func:`get_field`."""

    p: int
    generator: int = dc_field(init=False)
    odd_part: int = dc_field(init=False)
    two_adicity: int = dc_field(init=False)
    nonresidue: int = dc_field(init=False)

    def __post_init__(self):
        check_modulus(self.p)
        q, s = self.p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        g = find_generator(self.p).value
        object.__setattr__(self, "generator", g)
        object.__setattr__(self, "odd_part", q)
        object.__setattr__(self, "two_adicity", s)
        # every primitive root is a nonresidue
        object.__setattr__(self, "nonresidue", g)

    @property
    def i(self) -> Optional[int]:
        """Canonical square root of -1, or None when p = 3 mod 4."""
        return sqrt_of_minus_one(self.p).value if self.p % 4 == 1 else None

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self.p)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self.p)


@lru_cache(maxsize=None)
def get_field(p: int) -> FieldContext:
    return FieldContext(p)
