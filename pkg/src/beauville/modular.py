"""Exact arithmetic in Z/nZ: residues, units, prime-power factorization and CRT."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod


class LevelError(ValueError):
    """Raised when n is not a Beauville level (gcd(n, 6) != 1 or n < 5)."""


@dataclass(frozen=True, order=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"exponent must be >= 1, got {self.e}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def value(self) -> int:
        return self.p**self.e


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[PrimePower]:
    """Trial-division factorization, primes in increasing order. ``factorize(1) == []``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append(PrimePower(f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(PrimePower(n, 1))
    return out


def is_valid_level(n: int) -> bool:
    return n >= 5 and gcd(n, 6) == 1


def check_level(n: int) -> int:
    if not is_valid_level(n):
        if n < 5:
            raise LevelError(f"n={n} is not a Beauville level: need n >= 5 with gcd(n, 6) = 1")
        raise LevelError(f"n={n} is not a Beauville level: gcd(n, 6) = {gcd(n, 6)} != 1")
    return n


def is_unit(x: int, n: int) -> bool:
    return gcd(x % n, n) == 1


def unit_table(n: int) -> list[bool]:
    return [gcd(x, n) == 1 for x in range(n)]


@dataclass(frozen=True)
class Modulus:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")

    @cached_property
    def factorization(self) -> list[PrimePower]:
        return factorize(self.n)

    @property
    def is_valid_level(self) -> bool:
        return is_valid_level(self.n)


@dataclass(frozen=True)
class Residue:
    """An integer class modulo ``modulus``, normalized to ``[0, modulus)``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        return other

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __int__(self):
        return self.value

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> Residue:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self.value} is not a unit mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"


def crt_split(x: int, n: int) -> list[tuple[Residue, PrimePower]]:
    return [(Residue(x, pp.value), pp) for pp in factorize(n)]


def crt_combine(parts) -> Residue:
    """Combine ``(residue, prime_power)`` pairs with distinct primes into one residue."""
    parts = list(parts)
    primes = [pp.p for _, pp in parts]
    if len(set(primes)) != len(primes):
        raise ValueError(f"repeated prime in CRT input: {primes}")
    n = prod(pp.value for _, pp in parts)
    x = 0
    for r, pp in parts:
        q = pp.value
        v = r.value if isinstance(r, Residue) else r
        if isinstance(r, Residue) and r.modulus != q:
            raise ValueError(f"residue modulus {r.modulus} does not match {q}")
        m = n // q
        x += v * m * pow(m, -1, q)
    return Residue(x, n)
