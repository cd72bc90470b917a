"""numba implementations of the enumeration/orbit kernels.

Matrices are rows ``(a, b, c, d)`` of an int64 array; the action table has
rows ``(L00, L01, L10, L11, R00, R01, R10, R11, eps)`` reduced mod n into
(-n/2, n/2].
"""

import numpy as np
from numba import njit, prange


@njit(cache=True)
def _member(a, b, c, d, n, unit):
    return (
        unit[d]
        and unit[(c + d) % n]
        and unit[(b - d + n) % n]
        and unit[(a + b - c - d + 2 * n) % n]
        and unit[(a * d - b * c + n * n) % n]
    )


@njit(cache=True, parallel=True)
def count_by_leading(n, unit):
    counts = np.zeros(n, np.int64)
    for a in prange(n):
        if not unit[a]:
            continue
        cnt = 0
        for b in range(n):
            if not (unit[b] and unit[(a + b) % n]):
                continue
            for c in range(n):
                if not (unit[c] and unit[(a - c + n) % n]):
                    continue
                for d in range(n):
                    if _member(a, b, c, d, n, unit):
                        cnt += 1
        counts[a] = cnt
    return counts


@njit(cache=True)
def fill_members(n, unit, a_lo, a_hi, out):
    k = 0
    for a in range(a_lo, a_hi):
        if not unit[a]:
            continue
        for b in range(n):
            if not (unit[b] and unit[(a + b) % n]):
                continue
            for c in range(n):
                if not (unit[c] and unit[(a - c + n) % n]):
                    continue
                for d in range(n):
                    if _member(a, b, c, d, n, unit):
                        out[k, 0] = a
                        out[k, 1] = b
                        out[k, 2] = c
                        out[k, 3] = d
                        k += 1
    return k


@njit(cache=True)
def _inverse(a, b, c, d, n, inv):
    k = inv[(a * d - b * c) % n]
    return (k * d) % n, (k * (n - b)) % n, (k * (n - c)) % n, (k * a) % n


@njit(cache=True)
def _apply(a, b, c, d, n, t):
    # table entries are centred in (-n/2, n/2], so |L @ X @ R| < n^3: reduce once at the end
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


@njit(cache=True)
def _image(a, b, c, d, n, inv, t):
    if t[8] == -1:
        a, b, c, d = _inverse(a, b, c, d, n, inv)
    return _apply(a, b, c, d, n, t)


@njit(cache=True)
def _chunks(m):
    return max(1, min(m, 256))


@njit(cache=True, parallel=True)
def orbit_stats(mats, n, inv, table):
    """Minimum orbit code and stabilizer order per row, plus fixed counts per table row."""
    m = mats.shape[0]
    k = table.shape[0]
    best = np.empty(m, np.int64)
    stab = np.empty(m, np.int64)
    nch = _chunks(m)
    part = np.zeros((nch, k), np.int64)
    for ch in prange(nch):
        for i in range(ch * m // nch, (ch + 1) * m // nch):
            a, b, c, d = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
            ia, ib, ic, id_ = _inverse(a, b, c, d, n, inv)
            own = ((a * n + b) * n + c) * n + d
            lo = own
            s = 0
            lo0 = a
            for j in range(k):
                t = table[j]
                if t[8] == -1:
                    p, q, r, u = ia, ib, ic, id_
                else:
                    p, q, r, u = a, b, c, d
                x0 = t[0] * p + t[1] * r
                x1 = t[0] * q + t[1] * u
                y0 = (x0 * t[4] + x1 * t[6]) % n
                # the leading entry alone rules out most images
                if y0 > lo0 and y0 != a:
                    continue
                x2 = t[2] * p + t[3] * r
                x3 = t[2] * q + t[3] * u
                y1 = (x0 * t[5] + x1 * t[7]) % n
                y2 = (x2 * t[4] + x3 * t[6]) % n
                y3 = (x2 * t[5] + x3 * t[7]) % n
                code = ((y0 * n + y1) * n + y2) * n + y3
                if code < lo:
                    lo = code
                    lo0 = y0
                if code == own:
                    s += 1
                    part[ch, j] += 1
            best[i] = lo
            stab[i] = s
    return best, stab, part.sum(axis=0)


@njit(cache=True)
def canonical_stats(mats, n, inv, table):
    best, stab, _ = orbit_stats(mats, n, inv, table)
    return best, stab


@njit(cache=True, parallel=True)
def fixed_counts(mats, n, inv, table):
    m = mats.shape[0]
    k = table.shape[0]
    nch = _chunks(m)
    part = np.zeros((nch, k), np.int64)
    for ch in prange(nch):
        for i in range(ch * m // nch, (ch + 1) * m // nch):
            a, b, c, d = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
            ia, ib, ic, id_ = _inverse(a, b, c, d, n, inv)
            for j in range(k):
                t = table[j]
                if t[8] == -1:
                    p, q, r, u = ia, ib, ic, id_
                else:
                    p, q, r, u = a, b, c, d
                x0 = t[0] * p + t[1] * r
                x1 = t[0] * q + t[1] * u
                if (x0 * t[4] + x1 * t[6]) % n != a or (x0 * t[5] + x1 * t[7]) % n != b:
                    continue
                x2 = t[2] * p + t[3] * r
                x3 = t[2] * q + t[3] * u
                if (x2 * t[4] + x3 * t[6]) % n == c and (x2 * t[5] + x3 * t[7]) % n == d:
                    part[ch, j] += 1
    return part.sum(axis=0)


@njit(cache=True, parallel=True)
def stabilizer_masks(mats, n, inv, table):
    m = mats.shape[0]
    out = np.zeros((m, table.shape[0]), np.bool_)
    for i in prange(m):
        a, b, c, d = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
        for j in range(table.shape[0]):
            y0, y1, y2, y3 = _image(a, b, c, d, n, inv, table[j])
            out[i, j] = y0 == a and y1 == b and y2 == c and y3 == d
    return out


@njit(cache=True)
def images(mats, n, inv, t):
    m = mats.shape[0]
    out = np.empty((m, 4), np.int64)
    for i in range(m):
        y0, y1, y2, y3 = _image(mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3], n, inv, t)
        out[i, 0] = y0
        out[i, 1] = y1
        out[i, 2] = y2
        out[i, 3] = y3
    return out
