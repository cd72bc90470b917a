"""Vectorized numpy implementations, same signatures as the numba kernels."""

import numpy as np

_CHUNK = 1 << 18


def _leading_mask(a, n, unit):
    """Boolean ``(n, n, n)`` membership mask over ``(b, c, d)`` for fixed ``a``."""
    r = np.arange(n)
    b = r[:, None, None]
    c = r[None, :, None]
    d = r[None, None, :]
    ok = unit[b] & unit[(a + b) % n]
    ok = ok & unit[c] & unit[(a - c) % n]
    ok = ok & unit[d] & unit[(c + d) % n] & unit[(b - d) % n]
    ok = ok & unit[(a + b - c - d) % n] & unit[(a * d - b * c) % n]
    return ok


def count_by_leading(n, unit):
    counts = np.zeros(n, np.int64)
    for a in range(n):
        if unit[a]:
            counts[a] = np.count_nonzero(_leading_mask(a, n, unit))
    return counts


def fill_members(n, unit, a_lo, a_hi, out):
    k = 0
    for a in range(a_lo, a_hi):
        if not unit[a]:
            continue
        b, c, d = np.nonzero(_leading_mask(a, n, unit))
        m = b.size
        out[k : k + m, 0] = a
        out[k : k + m, 1] = b
        out[k : k + m, 2] = c
        out[k : k + m, 3] = d
        k += m
    return k


def _image(mats, n, inv, t):
    a, b, c, d = mats[:, 0], mats[:, 1], mats[:, 2], mats[:, 3]
    if t[8] == -1:
        k = inv[(a * d - b * c) % n]
        a, b, c, d = (k * d) % n, (-k * b) % n, (-k * c) % n, (k * a) % n
    x0 = t[0] * a + t[1] * c
    x1 = t[0] * b + t[1] * d
    x2 = t[2] * a + t[3] * c
    x3 = t[2] * b + t[3] * d
    return (
        (x0 * t[4] + x1 * t[6]) % n,
        (x0 * t[5] + x1 * t[7]) % n,
        (x2 * t[4] + x3 * t[6]) % n,
        (x2 * t[5] + x3 * t[7]) % n,
    )


def _code(y0, y1, y2, y3, n):
    return ((y0 * n + y1) * n + y2) * n + y3


def orbit_stats(mats, n, inv, table):
    m = mats.shape[0]
    best = np.empty(m, np.int64)
    stab = np.empty(m, np.int64)
    fixed = np.zeros(table.shape[0], np.int64)
    for lo in range(0, m, _CHUNK):
        block = mats[lo : lo + _CHUNK]
        own = _code(block[:, 0], block[:, 1], block[:, 2], block[:, 3], n)
        low = own.copy()
        s = np.zeros(block.shape[0], np.int64)
        for j, t in enumerate(table):
            code = _code(*_image(block, n, inv, t), n)
            np.minimum(low, code, out=low)
            hit = code == own
            s += hit
            fixed[j] += np.count_nonzero(hit)
        best[lo : lo + block.shape[0]] = low
        stab[lo : lo + block.shape[0]] = s
    return best, stab, fixed


def canonical_stats(mats, n, inv, table):
    best, stab, _ = orbit_stats(mats, n, inv, table)
    return best, stab


def fixed_counts(mats, n, inv, table):
    out = np.zeros(table.shape[0], np.int64)
    for lo in range(0, mats.shape[0], _CHUNK):
        block = mats[lo : lo + _CHUNK]
        for j, t in enumerate(table):
            y0, y1, y2, y3 = _image(block, n, inv, t)
            same = (y0 == block[:, 0]) & (y1 == block[:, 1]) & (y2 == block[:, 2]) & (y3 == block[:, 3])
            out[j] += np.count_nonzero(same)
    return out


def stabilizer_masks(mats, n, inv, table):
    out = np.zeros((mats.shape[0], table.shape[0]), bool)
    for j, t in enumerate(table):
        y0, y1, y2, y3 = _image(mats, n, inv, t)
        out[:, j] = (y0 == mats[:, 0]) & (y1 == mats[:, 1]) & (y2 == mats[:, 2]) & (y3 == mats[:, 3])
    return out


def images(mats, n, inv, t):
    return np.stack(_image(mats, n, inv, t), axis=1).astype(np.int64)
