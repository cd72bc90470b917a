"""Backend selection and array-level helpers for the hot loops.

The numba kernels are used when numba imports and ``BEAUVILLE_NO_NUMBA`` is
unset (or "0"); otherwise the vectorized numpy versions run.  Both expose the
same functions and produce identical results.
"""

from __future__ import annotations

import os
from functools import cache
from math import gcd

import numpy as np

from . import _numpy_kernels

ENV_FLAG = "BEAUVILLE_NO_NUMBA"

# rows per materialized block when streaming the Beauville set
BLOCK_ROWS = 1 << 21


def _numba_wanted() -> bool:
    return os.environ.get(ENV_FLAG, "0").strip().lower() in ("", "0", "false", "no")


try:
    if not _numba_wanted():
        raise ImportError("disabled by " + ENV_FLAG)
    # the system TBB is too old for numba; skip it unless the user chose a layer
    os.environ.setdefault("NUMBA_THREADING_LAYER_PRIORITY", "omp workqueue tbb")
    import numba

    from . import _numba_kernels

    HAVE_NUMBA = True
except ImportError:
    numba = None
    _numba_kernels = None
    HAVE_NUMBA = False


def backend(name: str | None = None):
    """Kernel module for ``name`` in {"numba", "numpy"}; default follows the env flag."""
    if name is None:
        name = "numba" if HAVE_NUMBA else "numpy"
    if name == "numba":
        if _numba_kernels is None:
            raise RuntimeError("numba backend unavailable")
        return _numba_kernels
    if name == "numpy":
        return _numpy_kernels
    raise ValueError(f"unknown backend {name!r}")


def backend_name() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def jit(func):
    """``numba.njit(cache=True)`` when the numba backend is active, identity otherwise."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def set_threads(k: int | None):
    if k and HAVE_NUMBA:
        numba.set_num_threads(max(1, min(k, numba.config.NUMBA_NUM_THREADS)))


@cache
def unit_mask(n: int) -> np.ndarray:
    mask = np.array([gcd(x, n) == 1 for x in range(n)], dtype=np.bool_)
    mask.flags.writeable = False
    return mask


@cache
def inverse_table(n: int) -> np.ndarray:
    """``inv[x] = x^-1 mod n`` for units, 0 elsewhere."""
    inv = np.zeros(n, np.int64)
    for x in range(n):
        if gcd(x, n) == 1:
            inv[x] = pow(x, -1, n)
    inv.flags.writeable = False
    return inv


def reduced_table(table: np.ndarray, n: int) -> np.ndarray:
    """Matrix entries reduced into (-n/2, n/2] so the kernels can defer reduction."""
    t = np.array(table, dtype=np.int64, copy=True)
    t[:, :8] %= n
    t[:, :8] -= n * (2 * t[:, :8] > n)
    return t


@cache
def _counts(n: int, name: str) -> np.ndarray:
    counts = backend(name).count_by_leading(n, unit_mask(n))
    counts.flags.writeable = False
    return counts


def count_by_leading(n: int, name: str | None = None) -> np.ndarray:
    """Number of Beauville matrices with each leading entry ``a``."""
    return _counts(n, name or backend_name())


def member_blocks(n: int, max_rows: int = BLOCK_ROWS, name: str | None = None):
    """Yield the Beauville set in lexicographic blocks of whole leading-entry slices."""
    k = backend(name)
    counts = count_by_leading(n, name)
    unit = unit_mask(n)
    a = 0
    while a < n:
        lo, rows = a, 0
        while a < n and (rows == 0 or rows + counts[a] <= max_rows):
            rows += int(counts[a])
            a += 1
        if rows == 0:
            continue
        out = np.empty((rows, 4), np.int64)
        filled = k.fill_members(n, unit, lo, a, out)
        assert filled == rows
        yield out


def members(n: int, name: str | None = None) -> np.ndarray:
    blocks = list(member_blocks(n, max_rows=1 << 62, name=name))
    if not blocks:
        return np.empty((0, 4), np.int64)
    return np.concatenate(blocks)


def orbit_stats(mats, n, table, name=None):
    """``canonical_stats`` plus the number of fixed rows for each table row, in one pass."""
    return backend(name).orbit_stats(mats, n, inverse_table(n), reduced_table(table, n))


def canonical_stats(mats, n, table, name=None):
    """Per row: minimum code over the orbit under ``table`` and the stabilizer order."""
    return backend(name).canonical_stats(mats, n, inverse_table(n), reduced_table(table, n))


def fixed_counts(mats, n, table, name=None):
    return backend(name).fixed_counts(mats, n, inverse_table(n), reduced_table(table, n))


def stabilizer_masks(mats, n, table, name=None):
    return backend(name).stabilizer_masks(mats, n, inverse_table(n), reduced_table(table, n))


def images(mats, n, row, name=None):
    row = reduced_table(np.asarray(row)[None, :], n)[0]
    return backend(name).images(mats, n, inverse_table(n), row)


def codes(mats, n) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64)
    return ((mats[:, 0] * n + mats[:, 1]) * n + mats[:, 2]) * n + mats[:, 3]


def decode(codes, n) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((codes.shape[0], 4), np.int64)
    rest = codes
    for j in (3, 2, 1, 0):
        rest, out[:, j] = np.divmod(rest, n)
    return out
