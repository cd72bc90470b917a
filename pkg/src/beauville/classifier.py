"""Orbits of W on the Beauville set: isomorphism classes, Burnside counts, stabilizers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import kernels, weyl
from .gl2 import BeauvilleMatrix, Mat2
from .modular import check_level


class ModulusMismatchError(ValueError):
    pass


class StabilizerType(str, Enum):
    TRIVIAL = "TRIVIAL"
    Z2 = "Z2"
    Z3 = "Z3"
    Z6 = "Z6"
    S3 = "S3"

    @property
    def order(self) -> int:
        return {"TRIVIAL": 1, "Z2": 2, "Z3": 3, "Z6": 6, "S3": 6}[self.value]


def classify_group(elems) -> StabilizerType:
    """Isomorphism type of a stabilizer subgroup of W (orders 1, 2, 3 or 6 only)."""
    elems = list(elems)
    order = len(elems)
    if order == 1:
        return StabilizerType.TRIVIAL
    if order == 2:
        return StabilizerType.Z2
    if order == 3:
        return StabilizerType.Z3
    if order == 6:
        return StabilizerType.Z6 if weyl.is_abelian(elems) else StabilizerType.S3
    raise AssertionError(f"stabilizer of order {order} is not one of 1, 2, 3, 6")


def _group(swap: bool):
    return weyl.elements() if swap else weyl.factor_preserving()


@dataclass(frozen=True)
class OrbitClass:
    canonical_rep: BeauvilleMatrix
    orbit_size: int
    stabilizer_type: StabilizerType


@dataclass(frozen=True)
class BurnsideTerm:
    class_index: int
    class_size: int
    fixed: int


@dataclass
class ClassificationReport:
    n: int
    swap: bool
    total_matrices: int
    burnside_breakdown: list[BurnsideTerm]
    rep_codes: np.ndarray = field(repr=False)
    orbit_sizes: np.ndarray = field(repr=False)
    stabilizer_types: list[StabilizerType] = field(repr=False)

    @property
    def group_order(self) -> int:
        return 72 if self.swap else 36

    @property
    def theta(self) -> int:
        return int(self.rep_codes.shape[0])

    @property
    def burnside_total(self) -> int:
        return sum(t.class_size * t.fixed for t in self.burnside_breakdown)

    @property
    def orbit_classes(self) -> list[OrbitClass]:
        reps = kernels.decode(self.rep_codes, self.n)
        return [
            OrbitClass(BeauvilleMatrix(*map(int, r), self.n), int(s), t)
            for r, s, t in zip(reps, self.orbit_sizes, self.stabilizer_types)
        ]

    def stabilizer_histogram(self) -> dict[str, int]:
        hist = {t.value: 0 for t in StabilizerType}
        for t in self.stabilizer_types:
            hist[t.value] += 1
        return hist


def orbits(n: int, swap: bool = True, threads: int | None = None, backend: str | None = None) -> ClassificationReport:
    """Partition the Beauville set mod n into W-orbits via canonical (minimal) representatives.

    With ``swap=False`` only the 36 factor-preserving elements act.
    """
    check_level(n)
    kernels.set_threads(threads)
    group = _group(swap)
    table = weyl.action_table(group)
    total = 0
    fixed = np.zeros(len(group), np.int64)
    rep_chunks, stab_chunks = [], []
    for block in kernels.member_blocks(n, name=backend):
        total += block.shape[0]
        best, stab, fx = kernels.orbit_stats(block, n, table, name=backend)
        own = kernels.codes(block, n)
        is_rep = best == own
        rep_chunks.append(own[is_rep])
        stab_chunks.append(stab[is_rep])
        fixed += fx
    rep_codes = np.concatenate(rep_chunks) if rep_chunks else np.empty(0, np.int64)
    stabs = np.concatenate(stab_chunks) if stab_chunks else np.empty(0, np.int64)
    orbit_sizes = len(group) // stabs

    breakdown = _burnside_terms(group, fixed)
    burnside = sum(t.class_size * t.fixed for t in breakdown)
    if burnside != len(group) * rep_codes.shape[0]:
        raise AssertionError(f"Burnside sum {burnside} != {len(group)} * {rep_codes.shape[0]} orbits")
    if int(orbit_sizes.sum()) != total:
        raise AssertionError("orbit sizes do not add up to the size of the Beauville set")

    types = _stabilizer_types(rep_codes, n, group, backend)
    return ClassificationReport(n, swap, total, breakdown, rep_codes, orbit_sizes, types)


def _burnside_terms(group, fixed) -> list[BurnsideTerm]:
    by_class: dict[int, list[int]] = {}
    for w, f in zip(group, fixed.tolist()):
        by_class.setdefault(weyl.conjugacy_class_of(w).index, []).append(f)
    terms = []
    for idx in sorted(by_class):
        values = by_class[idx]
        if len(set(values)) != 1:
            raise AssertionError(f"fixed counts differ inside conjugacy class {idx}: {sorted(set(values))}")
        terms.append(BurnsideTerm(idx, len(values), values[0]))
    return terms


def _stabilizer_types(rep_codes, n, group, backend, chunk: int = 1 << 16) -> list[StabilizerType]:
    table = weyl.action_table(group)
    cache: dict[bytes, StabilizerType] = {}
    out = []
    for lo in range(0, rep_codes.shape[0], chunk):
        reps = kernels.decode(rep_codes[lo : lo + chunk], n)
        masks = kernels.stabilizer_masks(reps, n, table, name=backend)
        for row in masks:
            key = row.tobytes()
            t = cache.get(key)
            if t is None:
                t = cache[key] = classify_group(w for w, hit in zip(group, row) if hit)
            out.append(t)
    return out


def fixed_count(w: weyl.WElement, n: int, backend: str | None = None) -> int:
    """Number of Beauville matrices mod n fixed by ``w``."""
    check_level(n)
    table = weyl.action_table([w])
    return int(sum(int(kernels.fixed_counts(b, n, table, name=backend)[0]) for b in kernels.member_blocks(n, name=backend)))


def fixed_count_vector(n: int, backend: str | None = None) -> np.ndarray:
    """Fixed counts for all 72 elements, in :func:`weyl.elements` order."""
    check_level(n)
    table = weyl.action_table()
    total = np.zeros(72, np.int64)
    for block in kernels.member_blocks(n, name=backend):
        total += kernels.fixed_counts(block, n, table, name=backend)
    return total


def burnside_count(n: int, swap: bool = True, backend: str | None = None) -> int:
    """Orbit count as the average number of fixed points (exact division asserted).

    With the swap the fixed count is a class function, so one representative per
    conjugacy class is enough; the 36-element subgroup uses every element.
    """
    check_level(n)
    if swap:
        classes = weyl.conjugacy_classes()
        reps, sizes = [c.representative for c in classes], np.array([c.size for c in classes])
    else:
        reps, sizes = _group(False), np.ones(36, np.int64)
    table = weyl.action_table(reps)
    fixed = np.zeros(len(reps), np.int64)
    for block in kernels.member_blocks(n, name=backend):
        fixed += kernels.fixed_counts(block, n, table, name=backend)
    total, order = int((sizes * fixed).sum()), int(sizes.sum())
    q, r = divmod(total, order)
    if r:
        raise AssertionError(f"fixed-point total {total} not divisible by {order}")
    return q


def canonical_rep(A: Mat2, swap: bool = True) -> BeauvilleMatrix:
    """Lexicographically smallest matrix in the orbit of ``A``."""
    A = BeauvilleMatrix.certify(A)
    best = min(weyl.act(w, A) for w in _group(swap))
    return BeauvilleMatrix.certify(best)


def are_isomorphic(A: Mat2, B: Mat2, swap: bool = True) -> bool:
    if A.n != B.n:
        raise ModulusMismatchError(f"modulus mismatch: {A.n} vs {B.n}")
    A = BeauvilleMatrix.certify(A)
    return any(weyl.act(w, A) == B for w in _group(swap))


def stabilizer_type(A: Mat2, swap: bool = True) -> StabilizerType:
    A = BeauvilleMatrix.certify(A)
    return classify_group(weyl.stabilizer(A, _group(swap)))


def orbits_unswapped(n: int, threads: int | None = None, backend: str | None = None) -> int:
    """Orbit count under the factor-preserving subgroup S3 x S3 only."""
    return orbits(n, swap=False, threads=threads, backend=backend).theta
