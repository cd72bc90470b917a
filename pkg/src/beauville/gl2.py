"""2x2 matrices over Z/nZ and the Beauville membership test.

A matrix ``A = (a b; c d)`` defines a free action of the diagonal copy of
Z_n^2 on the product of Fermat curves exactly when the nine quantities

    a, b, c, d, a+b, c+d, a-c, b-d, a+b-c-d

are all units mod n.  The membership test additionally demands ``det(A)``
to be a unit: the nine conditions do not imply it (``(1 1; 2 2)`` mod 5
satisfies all nine with determinant 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import gcd
from typing import Iterator

import numpy as np

from . import kernels
from .modular import Residue, check_level


class SingularMatrixError(ArithmeticError):
    pass


@total_ordering
@dataclass(frozen=True, eq=False)
class Mat2:
    """The matrix ``(a b; c d)`` over Z/nZ; entries normalized to ``[0, n)``.

    Ordering compares ``(a, b, c, d, n)``, i.e. lexicographic row-major order
    for matrices sharing one modulus.  Equality ignores the subclass.
    """

    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        for name in "abcd":
            object.__setattr__(self, name, int(getattr(self, name)) % n)

    def _key(self):
        return (self.a, self.b, self.c, self.d, self.n)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    @classmethod
    def from_rows(cls, rows, n: int) -> Mat2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d, n)

    @classmethod
    def identity(cls, n: int) -> Mat2:
        return cls(1, 0, 0, 1, n)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def residues(self) -> tuple[Residue, Residue, Residue, Residue]:
        return tuple(Residue(x, self.n) for x in self.entries)

    def _check(self, other: Mat2):
        if other.n != self.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")

    def __matmul__(self, other: Mat2) -> Mat2:
        self._check(other)
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.n)

    def det(self) -> Residue:
        return Residue(self.a * self.d - self.b * self.c, self.n)

    def is_invertible(self) -> bool:
        return self.det().is_unit()

    def inverse(self) -> Mat2:
        det = self.det()
        if not det.is_unit():
            raise SingularMatrixError(f"det = {det.value} is not a unit mod {self.n}")
        k = pow(det.value, -1, self.n)
        return Mat2(k * self.d, -k * self.b, -k * self.c, k * self.a, self.n)

    def code(self) -> int:
        """Integer key ``((a*n + b)*n + c)*n + d``; monotone in lexicographic order."""
        return ((self.a * self.n + self.b) * self.n + self.c) * self.n + self.d

    @classmethod
    def from_code(cls, code: int, n: int) -> Mat2:
        code, d = divmod(code, n)
        code, c = divmod(code, n)
        a, b = divmod(code, n)
        return cls(a, b, c, d, n)

    def __str__(self):
        return f"{self.a} {self.b} {self.c} {self.d}"


def det(A: Mat2) -> Residue:
    return A.det()


def invert(A: Mat2) -> Mat2:
    return A.inverse()


def beauville_quantities(A: Mat2) -> tuple[int, ...]:
    a, b, c, d = A.entries
    return (a, b, c, d, a + b, c + d, a - c, b - d, a + b - c - d)


def is_beauville_matrix(A: Mat2) -> bool:
    n = A.n
    if any(gcd(q % n, n) != 1 for q in beauville_quantities(A)):
        return False
    return A.is_invertible()


class BeauvilleMatrix(Mat2):
    """A :class:`Mat2` certified to lie in the Beauville set."""

    def __post_init__(self):
        super().__post_init__()
        if not is_beauville_matrix(self):
            raise ValueError(f"({self}) mod {self.n} is not a Beauville matrix")

    @classmethod
    def certify(cls, A: Mat2) -> BeauvilleMatrix:
        if isinstance(A, BeauvilleMatrix):
            return A
        return cls(A.a, A.b, A.c, A.d, A.n)


def enumerate_beauville(n: int) -> Iterator[BeauvilleMatrix]:
    """Yield every Beauville matrix mod n once, in lexicographic ``(a, b, c, d)`` order."""
    check_level(n)
    for block in kernels.member_blocks(n):
        for a, b, c, d in block.tolist():
            yield BeauvilleMatrix(a, b, c, d, n)


def beauville_array(n: int) -> np.ndarray:
    """All Beauville matrices mod n as an ``(m, 4)`` array, lexicographic rows."""
    check_level(n)
    return kernels.members(n)


def count_beauville(n: int) -> int:
    check_level(n)
    return int(kernels.count_by_leading(n).sum())


Triple = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


def triples_of(A: Mat2) -> tuple[Triple, Triple]:
    """The standard triple and its image under ``A`` (columns of ``A`` and minus their sum)."""
    n = A.n
    a, b, c, d = A.entries
    first = ((1 % n, 0), (0, 1 % n), ((-1) % n, (-1) % n))
    second = ((a, c), (b, d), ((-a - b) % n, (-c - d) % n))
    return first, second
