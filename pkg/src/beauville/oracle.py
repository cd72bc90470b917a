"""Independent re-derivations used to cross-check the main computation.

Nothing here uses the unit conditions, canonical forms or the group tables
of the main path:

* :func:`beauville_condition_check` tests the generating-triple conditions
  directly on Z_n^2 (product one, hyperbolic orders, disjoint Sigma-sets);
* :func:`free_action_check` tests that no element fixing a point on the first
  Fermat curve also fixes a point on the second;
* :func:`naive_orbit_count` counts connected components of the graph spanned
  by five generators of W with a depth-first search over the Beauville set, with the
  generator images written out entry by entry.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd

import numpy as np

from . import kernels, weyl
from .gl2 import Mat2, SingularMatrixError, triples_of
from .modular import LevelError, check_level

MAX_ORACLE_LEVEL = 101

Point = tuple[int, int]


class BudgetError(LevelError):
    """Raised when a brute-force scan is requested beyond its size budget."""


def element_order(x: Point, n: int) -> int:
    return n // gcd(gcd(x[0], x[1]), n)


def cyclic_subgroup(x: Point, n: int) -> frozenset[Point]:
    return frozenset(((k * x[0]) % n, (k * x[1]) % n) for k in range(n))


def sigma_set(triple, n: int) -> frozenset[Point]:
    """Union of the cyclic subgroups generated by the three entries.

    Conjugation is trivial in an abelian group, so no conjugates are added.
    """
    out: set[Point] = set()
    for x in triple:
        out |= cyclic_subgroup(x, n)
    return frozenset(out)


def sums_to_zero(triple, n: int) -> bool:
    return all(sum(x[i] for x in triple) % n == 0 for i in (0, 1))


def generates(triple, n: int) -> bool:
    """Whether the entries generate Z_n^2, by listing the subgroup they span."""
    span = {(0, 0)}
    for x in triple:
        span = {((s[0] + k * x[0]) % n, (s[1] + k * x[1]) % n) for s in span for k in range(n)}
        if len(span) == n * n:
            return True
    return len(span) == n * n


def is_hyperbolic(triple, n: int) -> bool:
    return sum(Fraction(1, element_order(x, n)) for x in triple) < 1


def beauville_condition_check(A: Mat2) -> bool:
    """Do the standard triple and its image under ``A`` form a Beauville structure on Z_n^2?"""
    n = A.n
    first, second = triples_of(A)
    for t in (first, second):
        if not (sums_to_zero(t, n) and generates(t, n) and is_hyperbolic(t, n)):
            return False
    return sigma_set(first, n) & sigma_set(second, n) == {(0, 0)}


def _fixes_a_point(u: int, v: int) -> bool:
    # (alpha, beta) fixes a point of the Fermat curve iff it has the form (k,0), (0,k) or (k,k)
    return u == 0 or v == 0 or u == v


def free_action_check(A: Mat2) -> bool:
    """Does the diagonal group defined by ``A`` act freely on the product of Fermat curves?"""
    n = A.n
    if gcd(A.a * A.d - A.b * A.c, n) != 1:
        raise SingularMatrixError(f"({A}) is singular mod {n}")
    a, b, c, d = A.entries
    for k in range(1, n):
        for alpha, beta in ((k, 0), (0, k), (k, k)):
            if _fixes_a_point((a * alpha + b * beta) % n, (c * alpha + d * beta) % n):
                return False
    return True


def gl2(n: int):
    """Every invertible 2x2 matrix mod n (brute force over n^4 candidates)."""
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if gcd(a * d - b * c, n) == 1:
                        yield Mat2(a, b, c, d, n)


ORACLE_GENERATORS = (
    weyl.WElement(weyl.SIGMA1, weyl.ID, 1),
    weyl.WElement(weyl.ID, weyl.SIGMA1, 1),
    weyl.WElement(weyl.SIGMA2, weyl.ID, 1),
    weyl.WElement(weyl.ID, weyl.SIGMA2, 1),
    weyl.J,
)


@cache
def check_generators():
    """The five generators must close up to all 72 elements."""
    size = len(weyl.closure(ORACLE_GENERATORS))
    if size != 72:
        raise AssertionError(f"oracle generators close to {size} elements, expected 72")
    return True


def generator_images(A: Mat2) -> list[Mat2]:
    """Images of ``A`` under the five generators, in :data:`ORACLE_GENERATORS` order."""
    n = A.n
    a, b, c, d = A.entries
    k = pow((a * d - b * c) % n, -1, n)
    return [
        Mat2(b, -a - b, d, -c - d, n),  # A M^-1 for the 3-cycle on the first factor
        Mat2(c - a, d - b, -a, -b, n),  # M A for the 3-cycle on the second factor
        Mat2(b, a, d, c, n),  # column swap
        Mat2(c, d, a, b, n),  # row swap
        Mat2(k * d, -k * b, -k * c, k * a, n),  # inverse
    ]


@kernels.jit
def _component_count(codes, n, start):
    # depth-first search over generator edges; -1 if an image leaves the set
    m = codes.shape[0]
    seen = np.zeros(m, np.uint8)
    stack = np.empty(m, np.int64)
    comps = 0
    for root in range(m):
        if seen[root]:
            continue
        comps += 1
        seen[root] = 1
        stack[0] = root
        top = 1
        while top:
            top -= 1
            x = codes[stack[top]]
            d = x % n
            x //= n
            c = x % n
            x //= n
            b = x % n
            a = x // n
            # modular inverse of det by the extended Euclidean algorithm
            r0, r1 = (a * d - b * c) % n, n
            s0, s1 = 1, 0
            while r1:
                q = r0 // r1
                r0, r1 = r1, r0 - q * r1
                s0, s1 = s1, s0 - q * s1
            if r0 != 1:
                return -1
            k = s0 % n
            for g in range(5):
                if g == 0:
                    y0, y1, y2, y3 = b, -a - b, d, -c - d
                elif g == 1:
                    y0, y1, y2, y3 = c - a, d - b, -a, -b
                elif g == 2:
                    y0, y1, y2, y3 = b, a, d, c
                elif g == 3:
                    y0, y1, y2, y3 = c, d, a, b
                else:
                    y0, y1, y2, y3 = k * d, -k * b, -k * c, k * a
                code = (((y0 % n) * n + y1 % n) * n + y2 % n) * n + y3 % n
                # rows sharing the prefix (a, b, c) form the slice start[p]:start[p + 1]
                p = code // n
                lo, hi = start[p], start[p + 1]
                while lo < hi:
                    mid = (lo + hi) // 2
                    if codes[mid] < code:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo >= start[p + 1] or codes[lo] != code:
                    return -1
                if not seen[lo]:
                    seen[lo] = 1
                    stack[top] = lo
                    top += 1
    return comps


def naive_orbit_count(n: int) -> int:
    """Number of W-orbits on the Beauville set, by graph search over generator edges."""
    check_level(n)
    if n > MAX_ORACLE_LEVEL:
        raise BudgetError(f"n={n} exceeds the brute-force budget of {MAX_ORACLE_LEVEL}")
    check_generators()
    codes = kernels.codes(kernels.members(n), n)
    start = np.searchsorted(codes // n, np.arange(n**3 + 1))
    count = _component_count(codes, n, start)
    if count < 0:
        raise AssertionError(f"the Beauville set mod {n} is not closed under the generators")
    return int(count)
