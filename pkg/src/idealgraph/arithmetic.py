"""Factorization and divisor-lattice arithmetic over exponent vectors.

Every divisor of ``m`` is handled as its exponent vector relative to the
sorted prime list of ``m``; integer values are only materialized on demand.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

DEFAULT_MAX_INT = 10**9


class DomainError(ValueError):
    """Input outside the domain of an arithmetic operation."""


class NotAModuleError(DomainError):
    """Raised when ``n`` does not divide ``m``, so Z_n is not a Z_m-module."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, math.isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.primes) != len(self.exponents):
            raise DomainError("primes and exponents differ in length")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise DomainError(f"primes not strictly increasing: {self.primes}")
        if not all(_is_prime(p) for p in self.primes):
            raise DomainError(f"non-prime in factor list: {self.primes}")
        if any(e < 1 for e in self.exponents):
            raise DomainError(f"exponents must be positive: {self.exponents}")

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in zip(self.primes, self.exponents))

    def items(self) -> list[tuple[int, int]]:
        return list(zip(self.primes, self.exponents))


def factorize(m: int, max_int: int = DEFAULT_MAX_INT) -> Factorization:
    """Trial-division factorization of ``2 <= m <= max_int``."""
    if not isinstance(m, int) or isinstance(m, bool):
        raise DomainError(f"expected an integer, got {m!r}")
    if m < 2:
        raise DomainError(f"cannot factor {m}: need m >= 2")
    if m > max_int:
        raise DomainError(f"{m} exceeds the configured integer cap {max_int}")
    primes, exps = [], []
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            primes.append(p)
            exps.append(e)
        p += 1 if p == 2 else 2
    if rest > 1:
        primes.append(rest)
        exps.append(1)
    return Factorization(tuple(primes), tuple(exps))


@dataclass(frozen=True)
class ModulePair:
    """The ring Z_m together with the module Z_n, ``n | m``.

    ``alpha`` and ``beta`` are the exponent vectors of ``m`` and ``n`` over
    the primes of ``m``; ``beta`` is zero on primes absent from ``n``.
    """

    m: int
    n: int
    primes: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    support: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.m <= 1 or self.n <= 1:
            raise DomainError("n must divide m, both > 1")
        if len(self.alpha) != len(self.primes) or len(self.beta) != len(self.primes):
            raise DomainError("exponent vectors do not match the prime list")
        if any(not 0 <= b <= a for a, b in zip(self.alpha, self.beta)):
            raise NotAModuleError(f"{self.n} does not divide {self.m}")
        support = frozenset(i for i, b in enumerate(self.beta) if b)
        if not support:
            raise DomainError("n must be > 1")
        object.__setattr__(self, "support", support)

    @property
    def s(self) -> int:
        return len(self.primes)

    @property
    def s_prime(self) -> int:
        return len(self.support)

    @property
    def factorization(self) -> Factorization:
        return Factorization(self.primes, self.alpha)

    def divisor(self, exponents) -> "DivisorVector":
        return DivisorVector(self.primes, tuple(exponents))

    def divisor_of(self, d: int) -> "DivisorVector":
        """Exponent vector of an integer divisor ``d`` of ``m``."""
        if d < 1 or self.m % d:
            raise DomainError(f"{d} does not divide {self.m}")
        r = []
        for p in self.primes:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            r.append(e)
        return DivisorVector(self.primes, tuple(r))


def make_module_pair(m: int, n: int, max_int: int = DEFAULT_MAX_INT) -> ModulePair:
    if not isinstance(m, int) or not isinstance(n, int) or m <= 1 or n <= 1:
        raise DomainError("n must divide m, both > 1")
    if m % n:
        raise NotAModuleError(f"not a module: {n} does not divide {m}")
    fm = factorize(m, max_int)
    beta = []
    rest = n
    for p in fm.primes:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        beta.append(e)
    return ModulePair(m, n, fm.primes, fm.exponents, tuple(beta))


@dataclass(frozen=True)
class DivisorVector:
    primes: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        if len(self.primes) != len(self.r):
            raise DomainError("exponent vector does not match the prime list")
        if any(e < 0 for e in self.r):
            raise DomainError(f"negative exponent in {self.r}")

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in zip(self.primes, self.r))

    def __str__(self) -> str:
        return str(self.value)


def enumerate_divisors(pair: ModulePair) -> list[DivisorVector]:
    """All divisors of ``m`` (including 1 and m), lexicographic in exponents."""
    ranges = [range(a + 1) for a in pair.alpha]
    return [DivisorVector(pair.primes, r) for r in itertools.product(*ranges)]


def lcm_vector(d1: DivisorVector, d2: DivisorVector) -> DivisorVector:
    if d1.primes != d2.primes:
        raise DomainError("divisors live over different prime supports")
    return DivisorVector(d1.primes, tuple(map(max, d1.r, d2.r)))


def n_divides(pair: ModulePair, d: DivisorVector) -> bool:
    return all(b <= r for b, r in zip(pair.beta, d.r))


def d_support(pair: ModulePair, d: DivisorVector) -> frozenset[int]:
    """Indices ``i`` (0-based) with ``r_i < beta_i``; empty iff ``n | d``."""
    return frozenset(i for i, (r, b) in enumerate(zip(d.r, pair.beta)) if r < b)
