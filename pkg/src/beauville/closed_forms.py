"""Exact closed formulas for the size of the Beauville set and the number of surfaces.

Everything is integer arithmetic over the prime-power factorization of n; a
factor ``(1 - k/p)`` is carried as ``(p - k)`` with one power of p removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .modular import check_level, factorize, is_prime


@dataclass(frozen=True)
class ThetaBreakdown:
    n: int
    theta1: int
    theta2_prod: int
    theta3_prod: int
    theta4_prod: int
    theta: int

    @property
    def bracket(self) -> int:
        """The Burnside numerator ``72 * theta``."""
        return self.theta1 + 4 * self.theta2_prod + 6 * self.theta3_prod + 12 * self.theta4_prod

    def as_dict(self) -> dict[str, int]:
        return {
            "n": self.n,
            "theta1": self.theta1,
            "theta2_prod": self.theta2_prod,
            "theta3_prod": self.theta3_prod,
            "theta4_prod": self.theta4_prod,
            "theta": self.theta,
        }


def _check_prime(p: int, e: int):
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")


def theta1_prime_power(p: int, e: int) -> int:
    _check_prime(p, e)
    return p ** (4 * e - 4) * (p - 1) * (p - 2) * (p - 3) * (p - 4)


def theta1(n: int) -> int:
    """Size of the Beauville set mod n."""
    check_level(n)
    return prod(theta1_prime_power(pp.p, pp.e) for pp in factorize(n))


def theta2(p: int, e: int) -> int:
    """Matrices mod p^e fixed by an element of order 3 acting on both factors."""
    _check_prime(p, e)
    if p % 3 == 2:
        return p ** (2 * e - 2) * (p - 1) * (p - 2)
    return p ** (2 * e - 2) * (p - 1) * (p - 4)


def theta3(p: int, e: int) -> int:
    """Matrices mod p^e fixed by the factor swap J (involutions A = A^-1)."""
    _check_prime(p, e)
    return p ** (2 * e - 2) * (p - 3) * (p - 5)


def theta4(p: int, e: int) -> int:
    """Solutions of -3a^2 = 1 mod p^e: two when p = 1 mod 3, none otherwise."""
    _check_prime(p, e)
    return 2 if p % 3 == 1 else 0


def theta(n: int) -> ThetaBreakdown:
    check_level(n)
    pps = factorize(n)
    t1 = prod(theta1_prime_power(pp.p, pp.e) for pp in pps)
    t2 = prod(theta2(pp.p, pp.e) for pp in pps)
    t3 = prod(theta3(pp.p, pp.e) for pp in pps)
    t4 = prod(theta4(pp.p, pp.e) for pp in pps)
    bracket = t1 + 4 * t2 + 6 * t3 + 12 * t4
    q, r = divmod(bracket, 72)
    if r:
        raise AssertionError(f"Burnside bracket {bracket} for n={n} is not divisible by 72")
    return ThetaBreakdown(n, t1, t2, t3, t4, q)


def theta_prime_power(p: int, e: int) -> int:
    """Number of surfaces for n = p^e from the degree-4e polynomial in p.

    Kept independent of :func:`theta` so the two evaluations check each other.
    """
    _check_prime(p, e)
    q = p ** (2 * e - 2)
    top = p ** (4 * e) - 10 * p ** (4 * e - 1) + 35 * p ** (4 * e - 2) - 50 * p ** (4 * e - 3) + 24 * p ** (4 * e - 4)
    if p % 3 == 2:
        poly = top + 10 * p ** (2 * e) - 60 * p ** (2 * e - 1) + 98 * q
    else:
        poly = top + 10 * p ** (2 * e) - 68 * p ** (2 * e - 1) + 106 * q + 24
    value, r = divmod(poly, 72)
    if r:
        raise AssertionError(f"polynomial value {poly} at p={p}, e={e} is not divisible by 72")
    return value


def theta_prime(p: int) -> int:
    """The e = 1 specialization of :func:`theta_prime_power`."""
    _check_prime(p, 1)
    if p % 3 == 2:
        poly = p**4 - 10 * p**3 + 45 * p**2 - 110 * p + 122
    else:
        poly = p**4 - 10 * p**3 + 45 * p**2 - 118 * p + 154
    value, r = divmod(poly, 72)
    if r:
        raise AssertionError(f"polynomial value {poly} at p={p} is not divisible by 72")
    return value


def asymptotic_ratio(n: int) -> tuple[int, int]:
    """``(72 * theta(n), n**4)``; the ratio tends to 1 along the primes."""
    return (72 * theta(n).theta, n**4)


def density(n: int) -> tuple[int, int]:
    """``(theta1(n), n**4)``: the fraction of all 2x2 matrices that are Beauville."""
    return (theta1(n), n**4)


def fermat_genus(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n - 1) * (n - 2) // 2
