"""The order-72 group W = S3 wr S2 and its action on Beauville matrices.

Elements are triples ``(tau1, tau2, eps)``.  ``eps = -1`` marks the elements
that interchange the two curve factors (those composed with ``J``).  A
factor-preserving element sends ``A`` to ``M[tau2] @ A @ M[tau1]^-1``, a
factor-interchanging one sends it to ``M[tau2] @ A^-1 @ M[tau1]^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

import numpy as np

from .gl2 import Mat2, SingularMatrixError
from .modular import check_level

# permutations of {0, 1, 2} stored as image tuples; composition (s*t)(i) = s(t(i))
Perm3 = tuple[int, int, int]

ID: Perm3 = (0, 1, 2)
SIGMA1: Perm3 = (2, 0, 1)  # the 3-cycle (1,3,2): 1->3, 3->2, 2->1
SIGMA2: Perm3 = (1, 0, 2)  # the transposition (1,2)

ALL_PERMS: tuple[Perm3, ...] = tuple(sorted([(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]))


def perm_mul(s: Perm3, t: Perm3) -> Perm3:
    return (s[t[0]], s[t[1]], s[t[2]])


def perm_inv(s: Perm3) -> Perm3:
    out = [0, 0, 0]
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def perm_order(s: Perm3) -> int:
    k, t = 1, s
    while t != ID:
        t = perm_mul(t, s)
        k += 1
    return k


# generator images as integer matrices, entries reduced later
_M_SIGMA1 = ((-1, 1), (-1, 0))
_M_SIGMA2 = ((0, 1), (1, 0))


def _imul(x, y):
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


@cache
def _integer_rep() -> dict[Perm3, tuple[tuple[int, int], tuple[int, int]]]:
    # close {sigma1, sigma2} under multiplication, extending M multiplicatively;
    # M takes values in GL2(Z), so well-definedness is checked over the integers
    rep = {ID: ((1, 0), (0, 1))}
    frontier = [ID]
    gens = [(SIGMA1, _M_SIGMA1), (SIGMA2, _M_SIGMA2)]
    while frontier:
        nxt = []
        for s in frontier:
            for g, mg in gens:
                t = perm_mul(g, s)
                mt = _imul(mg, rep[s])
                if t in rep:
                    if rep[t] != mt:
                        raise AssertionError(f"M is not well defined at {t}")
                else:
                    rep[t] = mt
                    nxt.append(t)
        frontier = nxt
    assert len(rep) == 6
    return rep


@cache
def m_rep(tau: Perm3, n: int) -> Mat2:
    """The matrix of ``tau`` under the monomorphism S3 -> GL2(Z/nZ)."""
    check_level(n)
    return Mat2.from_rows(_integer_rep()[tuple(tau)], n)


@dataclass(frozen=True, order=True)
class WElement:
    tau1: Perm3
    tau2: Perm3
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps}")
        object.__setattr__(self, "tau1", tuple(self.tau1))
        object.__setattr__(self, "tau2", tuple(self.tau2))

    def __mul__(self, other: WElement) -> WElement:
        return w_mul(self, other)

    def inverse(self) -> WElement:
        return w_inverse(self)

    @property
    def order(self) -> int:
        k, t = 1, self
        while t != IDENTITY:
            t = w_mul(t, self)
            k += 1
        return k


def w_mul(x: WElement, y: WElement) -> WElement:
    if x.eps == 1:
        return WElement(perm_mul(x.tau1, y.tau1), perm_mul(x.tau2, y.tau2), y.eps)
    return WElement(perm_mul(x.tau1, y.tau2), perm_mul(x.tau2, y.tau1), -y.eps)


def w_inverse(x: WElement) -> WElement:
    if x.eps == 1:
        return WElement(perm_inv(x.tau1), perm_inv(x.tau2), 1)
    # (s1, s2, -1)^-1 = (s2^-1, s1^-1, -1)
    return WElement(perm_inv(x.tau2), perm_inv(x.tau1), -1)


IDENTITY = WElement(ID, ID, 1)
J = WElement(ID, ID, -1)


@cache
def elements() -> tuple[WElement, ...]:
    """All 72 elements: factor-preserving ones first, each half in lexicographic order."""
    els = [WElement(s, t, e) for e in (1, -1) for s in ALL_PERMS for t in ALL_PERMS]
    return tuple(els)


def factor_preserving() -> tuple[WElement, ...]:
    return tuple(w for w in elements() if w.eps == 1)


def index_of(w: WElement) -> int:
    return _index()[w]


@cache
def _index() -> dict[WElement, int]:
    return {w: i for i, w in enumerate(elements())}


@cache
def multiplication_table() -> np.ndarray:
    """``T[i, j]`` is the index of ``elements()[i] * elements()[j]``."""
    els = elements()
    idx = _index()
    return np.array([[idx[x * y] for y in els] for x in els], dtype=np.int64)


@dataclass(frozen=True)
class ConjClassId:
    index: int
    order: int
    size: int
    representative: WElement
    label: str


# (eps, element order, has a trivial coordinate permutation) -> row of the class table
_TABLE_ROWS = {
    (1, 1, True): (1, "(Id,Id)"),
    (1, 2, True): (2, "(Id,s2)"),
    (1, 2, False): (3, "(s2,s2)"),
    (1, 3, True): (4, "(Id,s3)"),
    (1, 3, False): (5, "(s3,s3)"),
    (1, 6, False): (6, "(s2,s3)"),
    (-1, 2, None): (7, "(Id,Id)J"),
    (-1, 4, None): (8, "(Id,s2)J"),
    (-1, 6, None): (9, "(s2,s3s2)J"),
}

CLASS_SIZES = (1, 6, 9, 4, 4, 12, 6, 18, 12)


def _row_key(w: WElement):
    if w.eps == -1:
        return (-1, w.order, None)
    return (1, w.order, ID in (w.tau1, w.tau2))


@cache
def conjugacy_classes() -> tuple[ConjClassId, ...]:
    """Conjugacy classes computed by orbit closure, labelled by the class-table rows."""
    els = elements()
    seen: set[WElement] = set()
    found = []
    for w in els:
        if w in seen:
            continue
        cls = {g * w * g.inverse() for g in els}
        seen |= cls
        keys = {_row_key(x) for x in cls}
        if len(keys) != 1:
            raise AssertionError(f"class of {w} mixes table rows {keys}")
        (key,) = keys
        idx, label = _TABLE_ROWS[key]
        rep = min(cls)
        found.append(ConjClassId(idx, w.order, len(cls), rep, label))
    found.sort(key=lambda c: c.index)
    if tuple(c.size for c in found) != CLASS_SIZES:
        raise AssertionError(f"class sizes {[c.size for c in found]} differ from {CLASS_SIZES}")
    return tuple(found)


@cache
def _class_lookup() -> dict[WElement, int]:
    out = {}
    els = elements()
    for c in conjugacy_classes():
        w = c.representative
        for g in els:
            out[g * w * g.inverse()] = c.index
    return out


def conjugacy_class_of(w: WElement) -> ConjClassId:
    return conjugacy_classes()[_class_lookup()[w] - 1]


def class_members(index: int) -> list[WElement]:
    lookup = _class_lookup()
    return [w for w in elements() if lookup[w] == index]


def act(w: WElement, A: Mat2, n: int | None = None) -> Mat2:
    """Image of ``A`` under ``w``: ``M[tau2] @ A^eps @ M[tau1]^-1``."""
    n = A.n if n is None else n
    if n != A.n:
        raise ValueError(f"modulus mismatch: {n} vs {A.n}")
    if w.eps == -1:
        if not A.is_invertible():
            raise SingularMatrixError("factor-interchanging action needs an invertible matrix")
        A = A.inverse()
    return m_rep(w.tau2, n) @ A @ m_rep(perm_inv(w.tau1), n)


def action_table(elems=None) -> np.ndarray:
    """Integer table ``(k, 9)``: left matrix (4), right matrix (4), eps for each element.

    The right matrix is ``M[tau1]^-1`` over the integers; kernels reduce mod n.
    """
    elems = elements() if elems is None else elems
    rep = _integer_rep()
    rows = []
    for w in elems:
        (l00, l01), (l10, l11) = rep[w.tau2]
        (r00, r01), (r10, r11) = rep[perm_inv(w.tau1)]
        rows.append((l00, l01, l10, l11, r00, r01, r10, r11, w.eps))
    return np.array(rows, dtype=np.int64)


def closure(gens) -> set[WElement]:
    els = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in els:
                    els.add(y)
                    nxt.append(y)
        frontier = nxt
    return els


def stabilizer(A: Mat2, elems=None) -> list[WElement]:
    elems = elements() if elems is None else elems
    return [w for w in elems if act(w, A) == A]


def is_abelian(group) -> bool:
    group = list(group)
    return all(x * y == y * x for x, y in product(group, repeat=2))
