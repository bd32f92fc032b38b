"""Explicit root-computing polynomials and the error-counting verifier."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidOrder, NonResidue, PreconditionError, WrongResidueClass
from .field import FieldElement, check_modulus, get_field, inverse, legendre
from .poly import DensePoly


@dataclass(frozen=True)
class RootTask:
    """Compute t-th roots on the nonzero t-th powers of F_p."""

    p: int
    t: int = 2

    def __post_init__(self):
        check_modulus(self.p)
        if self.t < 2:
            raise InvalidOrder(f"root order must be >= 2, got {self.t}")

    @property
    def roots_per_residue(self) -> int:
        return gcd(self.t, self.p - 1)

    @property
    def size(self) -> int:
        return (self.p - 1) // self.roots_per_residue

    def residues(self) -> list[int]:
        """Elements of S_t as g**(t*j), j = 0 .. size-1."""
        p = self.p
        step = pow(get_field(p).generator, self.t, p)
        out, a = [], 1
        for _ in range(self.size):
            out.append(a)
            a = a * step % p
        return out


def construct_3mod4(p: int) -> DensePoly:
    check_modulus(p)
    if p % 4 != 3:
        raise WrongResidueClass(f"X^((p+1)/4) needs p = 3 mod 4, got p = {p}")
    return DensePoly.monomial((p + 1) // 4, p)


def _require_5mod8(p: int) -> None:
    check_modulus(p)
    if p % 8 != 5:
        raise WrongResidueClass(f"needs p = 5 mod 8, got p = {p}")


def tonelli_branch(a, p: int) -> FieldElement:
    """Two-case square root: a^((p+3)/8), times i when a^((p-1)/4) = -1.

    Defined on nonzero squares only.
    """
    _require_5mod8(p)
    a = int(a) % p
    if a == 0:
        raise PreconditionError("the branch function is defined on nonzero squares")
    if legendre(a, p) != 1:
        raise NonResidue(f"{a} is not a square mod {p}")
    r = pow(a, (p + 3) // 8, p)
    if pow(a, (p - 1) // 4, p) != 1:
        r = r * get_field(p).i % p
    return FieldElement(r, p)


def construct_5mod8(p: int) -> DensePoly:
    """((1-i)/2) X^((3p+1)/8) + ((1+i)/2) X^((p+3)/8) with the canonical i."""
    _require_5mod8(p)
    i = get_field(p).i
    half = inverse(2, p)
    coeffs = [0] * ((3 * p + 1) // 8 + 1)
    coeffs[(3 * p + 1) // 8] = (1 - i) * half
    coeffs[(p + 3) // 8] = (1 + i) * half
    return DensePoly(coeffs, p)


def crt_combine(f0: DensePoly, f1: DensePoly, p: int) -> DensePoly:
    """Glue branch polynomials along the quartic character of the squares.

    The result agrees with f0 where a^((p-1)/4) = 1 and with f1 where it
    is -1, for every nonzero square a.
    """
    check_modulus(p)
    if p % 4 != 1:
        raise WrongResidueClass(f"needs p = 1 mod 4, got p = {p}")
    q = (p - 1) // 4
    xq = DensePoly.monomial(q, p)
    return (f0 * (xq + 1) - f1 * (xq - 1)) * inverse(2, p)


def verify_root_poly(f: DensePoly, task: RootTask) -> int:
    """Number of a in S_t with f(a)^t != a."""
    if f.p != task.p:
        raise PreconditionError(f"polynomial mod {f.p} checked against p = {task.p}")
    p, t = task.p, task.t
    return sum(1 for a in task.residues() if pow(f.eval_int(a), t, p) != a)


def error_set(f: DensePoly, task: RootTask) -> list[int]:
    p, t = task.p, task.t
    return sorted(a for a in task.residues() if pow(f.eval_int(a), t, p) != a)


def construct_tth_special(p: int, t: int) -> DensePoly:
    """Monomial t-th root for p = 1-t or 2p = 2-t (mod t^2)."""
    check_modulus(p)
    if t < 2 or (p - 1) % t:
        raise InvalidOrder(f"needs p = 1 mod t, got p = {p}, t = {t}")
    tt = t * t
    if (p - (1 - t)) % tt == 0:
        return DensePoly.monomial((p + t - 1) // tt, p)
    if (2 * p - (2 - t)) % tt == 0:
        return DensePoly.monomial((2 * p + t - 2) // tt, p)
    raise WrongResidueClass(
        f"p = {p} is in neither special class mod {tt} for t = {t}"
    )


def identity_5mod8_holds(f: DensePoly) -> bool:
    """Whether f^2 reduces to exactly X modulo X^((p-1)/2) - 1."""
    p = f.p
    return (f * f).mod_cyclic((p - 1) // 2) == DensePoly.monomial(1, p)
