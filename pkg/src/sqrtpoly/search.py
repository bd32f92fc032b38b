"""Searches for low-degree polynomials computing square roots and t-th roots.

Every root assignment on S_t = {g^(t*j)} is a digit vector k with value
u_j = omega^(k_j) * g^j, omega a primitive gcd(t, p-1)-th root of unity.
The interpolant over the subgroup S_t (size n) has X^(n-i) coefficient

    (1/n) * sum_j omega^(k_j) * g^((t*i + 1) * j),

so its degree is n - i for the first i whose row sum is nonzero. The
exhaustive search tabulates row sums over two halves of the positions and
joins them on residues, filtering one row at a time.
"""

from __future__ import annotations

import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .constructions import RootTask
from .errors import PreconditionError, SearchSpaceTooLarge
from .field import FieldElement, check_modulus, get_field, inverse
from .poly import DensePoly, interpolate, lagrange_basis

DEFAULT_CAP = 1 << 26
MAX_NODES = 2048
CAP_ENV = "SQRTPOLY_MAX_ASSIGNMENTS"
# row sums run in int64
KERNEL_MAX_P = 1 << 31


def search_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


@dataclass(frozen=True)
class SignVector:
    """Root choice per node; digit 0 is +g^j, digit 1 is -g^j for square roots."""

    digits: tuple
    order: int = 2

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignVector":
        if any(s not in (1, -1) for s in signs):
            raise PreconditionError("signs must be +1 or -1")
        return cls(tuple(0 if s == 1 else 1 for s in signs), 2)

    @classmethod
    def from_string(cls, text: str) -> "SignVector":
        if text and set(text) <= {"+", "-"}:
            return cls(tuple(0 if c == "+" else 1 for c in text), 2)
        raise PreconditionError(f"bad sign string {text!r}")

    @property
    def signs(self) -> tuple:
        if self.order != 2:
            raise PreconditionError("signs are defined for square roots only")
        return tuple(1 - 2 * k for k in self.digits)

    def __len__(self):
        return len(self.digits)

    def __neg__(self):
        if self.order != 2:
            return NotImplemented
        return SignVector(tuple(1 - k for k in self.digits), 2)

    def __str__(self):
        if self.order == 2:
            return "".join("+-"[k] for k in self.digits)
        return "".join(str(k) for k in self.digits)


def _check_length(v: SignVector, p: int) -> int:
    m = (p - 1) // 2
    if len(v) != m or v.order != 2:
        raise PreconditionError(f"sign vector must have length {m} for p = {p}")
    return m


def root_values(v: SignVector, p: int) -> list[tuple[int, int]]:
    """Nodes g^(2j) paired with the chosen roots v_j * g^j."""
    m = _check_length(v, p)
    g = get_field(p).generator
    out = []
    for j in range(m):
        r = pow(g, j, p)
        out.append((r * r % p, r if v.digits[j] == 0 else p - r))
    return out


def interpolant(v: SignVector, p: int) -> DensePoly:
    """Lagrange interpolant of degree < m through the chosen roots."""
    return interpolate(root_values(v, p), p)


def leading_coefficient(v: SignVector, i: int, p: int) -> FieldElement:
    """Coefficient of X^(m-i) from the closed-form row sum, no interpolation."""
    m = _check_length(v, p)
    if not 1 <= i <= m:
        raise PreconditionError(f"index {i} outside 1..{m}")
    g = get_field(p).generator
    step = pow(g, 2 * i + 1, p)
    acc, w = 0, 1
    for k in v.digits:
        acc += w if k == 0 else -w
        w = w * step % p
    return FieldElement(acc * inverse(m, p), p)


def interpolant_degree(v: SignVector, p: int, method: str = "formula") -> int:
    if method == "lagrange":
        return interpolant(v, p).degree
    if method != "formula":
        raise PreconditionError(f"unknown method {method!r}")
    m = _check_length(v, p)
    for i in range(1, m + 1):
        if leading_coefficient(v, i, p).value:
            return m - i
    raise AssertionError("interpolant of nonzero values cannot vanish")


# -- the exhaustive engine ------------------------------------------------


def subgroup_rows(task: RootTask, n_rows: Optional[int] = None) -> np.ndarray:
    """rows[i-1, j] = g^((t*i + 1) * j): X^(n-i) row sums with unit weights."""
    p, t, n = task.p, task.t, task.size
    n_rows = n if n_rows is None else n_rows
    g = get_field(p).generator
    rows = np.zeros((n_rows, n), dtype=np.int64)
    for i in range(1, n_rows + 1):
        step = pow(g, t * i + 1, p)
        w = 1
        for j in range(n):
            rows[i - 1, j] = w
            w = w * step % p
    return rows


def _unity_powers(task: RootTask) -> list[int]:
    p, r = task.p, task.roots_per_residue
    omega = pow(get_field(p).generator, (p - 1) // r, p)
    return [pow(omega, k, p) for k in range(r)]


def _half_tables(rows: np.ndarray, positions: Sequence[int], unity: Sequence[int], p: int) -> np.ndarray:
    """Row sums for every digit assignment on ``positions``, first position most significant."""
    table = np.zeros((rows.shape[0], 1), dtype=np.int64)
    w = np.array(unity, dtype=np.int64)
    for j in positions:
        contrib = (rows[:, j][:, None] * w[None, :]) % p
        table = ((table[:, :, None] + contrib[:, None, :]) % p).reshape(rows.shape[0], -1)
    return table


@dataclass
class _Best:
    level: int = 0
    code: int = 0


def _scan_block(hi_codes, hi_tab, lo_tab, fixed, p, lo_order, lo_starts, lo_counts, chunk_pairs):
    best = _Best()
    n_rows = hi_tab.shape[0]
    lo_size = lo_tab.shape[1]
    start = 0
    while start < len(hi_codes):
        # grow the hi slice until the expected pair count reaches chunk_pairs
        stop = start + max(1, chunk_pairs * p // max(lo_size, 1))
        hcs = hi_codes[start:stop]
        start = stop
        target = (-(hi_tab[0, hcs] + fixed[0])) % p
        cnt = lo_counts[target]
        total = int(cnt.sum())
        if total == 0:
            continue
        hi_idx = np.repeat(hcs, cnt)
        first = np.repeat(lo_starts[target], cnt)
        within = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        lo_idx = lo_order[first + within]
        level = 1
        for i in range(1, n_rows):
            keep = (hi_tab[i, hi_idx] + lo_tab[i, lo_idx] + fixed[i]) % p == 0
            if not keep.any():
                break
            hi_idx, lo_idx = hi_idx[keep], lo_idx[keep]
            level = i + 1
        code = int((hi_idx.astype(np.int64) * lo_size + lo_idx).min())
        if level > best.level or (level == best.level and code < best.code):
            best = _Best(level, code)
    return best


def max_zero_prefix(
    rows: np.ndarray, unity: Sequence[int], p: int, threads: int = 1
) -> tuple[int, tuple]:
    """Longest run of vanishing leading row sums over all digit vectors.

    Returns (K, digits): the largest K such that some digit vector makes
    rows 1..K sum to zero, and the lexicographically smallest such vector.
    Digit 0 is pinned at position 0 since scaling all values by a root of
    unity scales every row sum alike.
    """
    r = len(unity)
    n = rows.shape[1]
    hi_pos = list(range(1, 1 + (n - 1) // 2))
    lo_pos = list(range(1 + (n - 1) // 2, n))
    hi_tab = _half_tables(rows, hi_pos, unity, p)
    lo_tab = _half_tables(rows, lo_pos, unity, p)
    fixed = rows[:, 0] % p
    lo_order = np.argsort(lo_tab[0], kind="stable")
    lo_counts = np.bincount(lo_tab[0], minlength=p)
    lo_starts = np.cumsum(lo_counts) - lo_counts
    hi_size = hi_tab.shape[1]
    threads = max(1, min(threads, hi_size))
    bounds = np.linspace(0, hi_size, threads + 1).astype(np.int64)
    blocks = [np.arange(bounds[k], bounds[k + 1], dtype=np.int64) for k in range(threads)]
    args = (hi_tab, lo_tab, fixed, p, lo_order, lo_starts, lo_counts, 1 << 20)
    if threads == 1:
        results = [_scan_block(blocks[0], *args)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda b: _scan_block(b, *args), blocks))
    best = _Best()
    for res in results:
        if res.level > best.level or (res.level == best.level and res.code < best.code):
            best = res
    digits, code = [], best.code
    for _ in range(n - 1):
        digits.append(code % r)
        code //= r
    return best.level, (0,) + tuple(reversed(digits))


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    """One inequality evaluated on a (d, e) pair.

    ``value`` is the threshold the checked quantity is compared against.
    ``applies`` is False where the argument behind a stated bound does not
    go through; such checks are reported but do not affect ``bound_ok``.
    """

    label: str
    value: int
    ok: bool
    applies: bool = True

    def to_json(self) -> dict:
        return {"bound": self.label, "value": self.value, "ok": self.ok, "applies": self.applies}


def bound_checks(p: int, t: int, e: int, d: int) -> list[BoundCheck]:
    """Every lower bound relevant to a degree-d polynomial erring on e residues."""
    task = RootTask(p, t)
    n = task.size
    tt = t * t
    checks = []
    divides = (p - 1) % t == 0
    special = divides and (p - (1 - t)) % tt == 0
    if special and e == 0:
        exact = (p + t - 1) // tt
        label = "(p+1)/4" if t == 2 else "(p+t-1)/t^2"
        checks.append(BoundCheck(label, exact, d == exact))
    if divides and not special:
        total = d + e
        if t == 2:
            label, need = "(p-1)/3", -(-(p - 1) // 3)
        else:
            label, need = "2p/(t(t+1))", -(-2 * p // (t * (t + 1)))
        # the stated form needs deg B <= t(d+e) - n, i.e. t*d >= n + 1
        checks.append(BoundCheck(label, need, total >= need, t * d >= n + 1))
        if t * total < p:
            b = max(t * e + 1, t * total - n)
            checks.append(BoundCheck("d+e+deg(B)>=n", n, total + b >= n))
    # f^t - X is nonzero of degree max(t*d, 1) and vanishes on n - e residues
    checks.append(BoundCheck("t*d>=n-e", -(-(n - e) // t), max(t * d, 1) >= n - e))
    return checks


@dataclass
class SearchReport:
    p: int
    t: int
    e: int
    min_degree: int
    witness: str
    vectors: int
    checks: list = field(default_factory=list)
    dropped: tuple = ()
    ms: float = 0.0

    @property
    def bound(self) -> str:
        return self.checks[0].label

    @property
    def bound_ok(self) -> bool:
        return all(c.ok for c in self.checks if c.applies)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema": "v1",
            "p": self.p,
            "t": self.t,
            "e": self.e,
            "min_degree": self.min_degree,
            "witness": self.witness,
            "dropped": list(self.dropped),
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "checks": [c.to_json() for c in self.checks],
            "vectors": self.vectors,
        }
        if timing:
            out["ms"] = round(self.ms, 3)
        return out


def _witness_string(digits: Sequence[int], order: int, dropped: Sequence[int] = ()) -> str:
    chars = "+-" if order == 2 else "0123456789abcdefghijklmnopqrstuvwxyz"
    out, it = [], iter(digits)
    for j in range(len(digits) + len(dropped)):
        out.append("x" if j in dropped else chars[next(it)])
    return "".join(out)


def _check_cap(space: int, n: int, cap: Optional[int]) -> None:
    cap = search_cap() if cap is None else cap
    if space > cap:
        raise SearchSpaceTooLarge(f"{space} assignments exceed the cap {cap}")
    if n > MAX_NODES:
        raise SearchSpaceTooLarge(f"{n} nodes exceed {MAX_NODES}")


def min_degree_exhaustive(
    p: int, t: int = 2, *, threads: int = 1, cap: Optional[int] = None
) -> SearchReport:
    """Minimum interpolant degree over every root assignment on S_t."""
    start = time.perf_counter()
    task = RootTask(p, t)
    n, r = task.size, task.roots_per_residue
    space = r**n
    _check_cap(space, n, cap)
    rows = subgroup_rows(task)
    level, digits = max_zero_prefix(rows, _unity_powers(task), p, threads)
    d = n - 1 - level
    return SearchReport(
        p, t, 0, d, _witness_string(digits, r), space,
        bound_checks(p, t, 0, d), (), (time.perf_counter() - start) * 1000,
    )


def _dropped_rows(task: RootTask, keep: Sequence[int]) -> np.ndarray:
    """Leading-coefficient rows for interpolation on a subset of S_t."""
    p = task.p
    g = get_field(p).generator
    nodes = task.residues()
    basis = lagrange_basis([nodes[j] for j in keep], p)
    n = len(keep)
    rows = np.zeros((n, n), dtype=np.int64)
    for q, j in enumerate(keep):
        base = pow(g, j, p)
        for i in range(1, n + 1):
            rows[i - 1, q] = base * basis[q][n - i] % p
    return rows


def min_degree_robust(
    p: int, e: int, t: int = 2, *, threads: int = 1, cap: Optional[int] = None
) -> SearchReport:
    """Minimum degree of a polynomial computing roots on all but e residues.

    Drops every e-subset of S_t and interpolates through the rest. A
    polynomial of degree d erring on U is matched on S_t minus U by an
    interpolant of degree at most d, and each such interpolant errs on at
    most e residues, so the minimum found is exact.
    """
    if e == 0:
        return min_degree_exhaustive(p, t, threads=threads, cap=cap)
    start = time.perf_counter()
    task = RootTask(p, t)
    n, r = task.size, task.roots_per_residue
    if not 0 <= e < n:
        raise PreconditionError(f"e must lie in 0..{n - 1}")
    space = math.comb(n, e) * r ** (n - e)
    _check_cap(space, n, cap)
    unity = _unity_powers(task)
    best = None
    for dropped in combinations(range(n), e):
        keep = [j for j in range(n) if j not in dropped]
        level, digits = max_zero_prefix(_dropped_rows(task, keep), unity, p, threads)
        d = len(keep) - 1 - level
        if best is None or d < best[0]:
            best = (d, digits, dropped)
    d, digits, dropped = best
    return SearchReport(
        p, t, e, d, _witness_string(digits, r, dropped), space,
        bound_checks(p, t, e, d), dropped, (time.perf_counter() - start) * 1000,
    )


# -- kernel search --------------------------------------------------------


def kernel_rows(p: int, t: int) -> np.ndarray:
    """The t x m matrix g^((2i+1)j), i = 1..t."""
    return subgroup_rows(RootTask(p, 2), t)


def kernel_residual(v: SignVector, p: int, t: int) -> list[int]:
    m = _check_length(v, p)
    g = get_field(p).generator
    out = []
    for i in range(1, t + 1):
        step = pow(g, 2 * i + 1, p)
        out.append(sum(s * pow(step, j, p) for j, s in zip(range(m), v.signs)) % p)
    return out


def _kernel_exhaustive(rows: np.ndarray, p: int, budget: int) -> Optional[tuple]:
    m = rows.shape[1]
    bits = m - 1
    space = 1 << bits
    limit = min(space, budget)
    shifts = np.arange(bits - 1, -1, -1, dtype=np.int64)
    tail = rows[:, 1:].T
    chunk = 1 << 16
    for lo in range(0, limit, chunk):
        codes = np.arange(lo, min(lo + chunk, limit), dtype=np.int64)
        signs = 1 - 2 * ((codes[:, None] >> shifts[None, :]) & 1)
        sums = (signs @ tail + rows[:, 0][None, :]) % p
        hits = np.flatnonzero((sums == 0).all(axis=1))
        if hits.size:
            code = int(codes[hits[0]])
            return (0,) + tuple(int(b) for b in (code >> shifts) & 1)
    return None


def _kernel_meet_in_middle(rows: np.ndarray, p: int, budget: int) -> Optional[tuple]:
    m = rows.shape[1]
    hi_pos = list(range(1, 1 + (m - 1) // 2))
    lo_pos = list(range(1 + (m - 1) // 2, m))
    if (1 << len(hi_pos)) + (1 << len(lo_pos)) > budget:
        return None
    hi = (_half_tables(rows, hi_pos, (1, p - 1), p)[0] + rows[0, 0]) % p
    lo = _half_tables(rows, lo_pos, (1, p - 1), p)[0]
    residues, first = np.unique(lo, return_index=True)
    present = np.zeros(p, dtype=bool)
    present[residues] = True
    index = np.zeros(p, dtype=np.int64)
    index[residues] = first
    target = (-hi) % p
    hit = present[target]
    if not hit.any():
        return None
    hc = int(np.argmax(hit))
    lc = int(index[target[hc]])
    digits = [(hc >> (len(hi_pos) - 1 - q)) & 1 for q in range(len(hi_pos))]
    digits += [(lc >> (len(lo_pos) - 1 - q)) & 1 for q in range(len(lo_pos))]
    return (0,) + tuple(digits)


def _kernel_random(rows: np.ndarray, p: int, budget: int, seed: int) -> Optional[tuple]:
    rng = random.Random(seed)
    t, m = rows.shape
    cols = [tuple(int(x) for x in rows[:, j]) for j in range(m)]

    def score(res):
        return (sum(1 for x in res if x), sum(min(x, p - x) for x in res))

    examined = 0
    while examined < budget:
        signs = [rng.choice((1, -1)) for _ in range(m)]
        res = [sum(s * c[i] for s, c in zip(signs, cols)) % p for i in range(t)]
        examined += 1
        current = score(res)
        while current[0] and examined < budget:
            best = None
            order = list(range(m))
            rng.shuffle(order)
            for j in order:
                trial = [(x - 2 * signs[j] * cols[j][i]) % p for i, x in enumerate(res)]
                examined += 1
                sc = score(trial)
                if best is None or sc < best[0]:
                    best = (sc, j, trial)
                if examined >= budget:
                    break
            if best is None or best[0] >= current:
                break
            current, j, res = best
            signs[j] = -signs[j]
        if not current[0]:
            return tuple(0 if s == 1 else 1 for s in signs)
    return None


def kernel_sign_search(
    p: int, t: int, strategy: str = "exhaustive", budget: int = 1 << 20, seed: int = 0
) -> Optional[SignVector]:
    """A sign vector zeroing the t leading interpolant coefficients, if found."""
    check_modulus(p)
    if p >= KERNEL_MAX_P:
        raise PreconditionError("kernel search works with p < 2^31")
    if t < 1 or budget < 1:
        raise PreconditionError("need t >= 1 and budget >= 1")
    rows = kernel_rows(p, t)
    if strategy == "exhaustive":
        digits = _kernel_exhaustive(rows, p, budget)
    elif strategy == "meet-in-middle":
        if t != 1:
            raise PreconditionError("meet-in-middle handles a single row only")
        digits = _kernel_meet_in_middle(rows, p, budget)
    elif strategy == "random":
        digits = _kernel_random(rows, p, budget, seed)
    else:
        raise PreconditionError(f"unknown strategy {strategy!r}")
    return None if digits is None else SignVector(digits, 2)


# -- equidistribution -----------------------------------------------------

EQUIDIST_CONSTANT = 4.0


@dataclass(frozen=True)
class EquidistReport:
    p: int
    t: int
    y: tuple
    counts: tuple
    max_deviation: float
    bound: float

    @property
    def within_bound(self) -> bool:
        return self.max_deviation <= self.bound

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "t": self.t,
            "y": list(self.y),
            "counts": list(self.counts),
            "max_deviation": round(self.max_deviation, 12),
            "bound": round(self.bound, 12),
            "within_bound": self.within_bound,
        }


def equidist_bound(p: int, t: int, constant: float = EQUIDIST_CONSTANT) -> float:
    return constant * t * math.log(p) ** 2 / math.sqrt(p)


def equidist_stats(p: int, t: int, y: Sequence[int], buckets: int = 10) -> EquidistReport:
    """Histogram of sum_i y_i g^((2i+1)j) over j < m, in equal slices of [0, p)."""
    check_modulus(p)
    y = tuple(int(c) % p for c in y)
    if len(y) != t:
        raise PreconditionError(f"y must have length {t}")
    if not any(y):
        raise PreconditionError("y must be nonzero")
    if buckets < 2:
        raise PreconditionError("need at least two buckets")
    m = (p - 1) // 2
    rows = subgroup_rows(RootTask(p, 2), t).tolist()
    values = [sum(c * row[j] for c, row in zip(y, rows)) % p for j in range(m)]
    counts = np.bincount([v * buckets // p for v in values], minlength=buckets)
    dev = float(np.max(np.abs(counts / m - 1 / buckets)))
    return EquidistReport(p, t, y, tuple(int(c) for c in counts), dev, equidist_bound(p, t))


def random_y(p: int, t: int, rng: np.random.Generator) -> tuple:
    while True:
        y = tuple(int(v) for v in rng.integers(0, p, size=t))
        if any(y):
            return y
