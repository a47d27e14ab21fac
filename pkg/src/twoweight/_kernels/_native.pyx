# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled weight-count kernel: exact int64 twin of numpy_impl.two_zero_counts.

Same coset-sum algorithm, plain C loops.  Kept in lockstep with the numpy
implementation; tests assert equality of the two on a spread of towers.
"""

import numpy as np

from libc.stdint cimport int64_t

IMPL = "native"


cdef int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t _modinv(int64_t a, int64_t m) noexcept nogil:
    # extended Euclid; caller guarantees gcd(a, m) = 1, m >= 1
    cdef int64_t old_r = a % m, r = m
    cdef int64_t old_s = 1, s = 0
    cdef int64_t q, t
    if m == 1:
        return 0
    while r:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    old_s %= m
    if old_s < 0:
        old_s += m
    return old_s


def two_zero_counts(N_, delta_, n_, a1_, a2_, t0_exp, log1p):
    cdef int64_t N = N_, delta = delta_, n = n_
    cdef int64_t a1 = a1_ % N, a2 = a2_ % N
    cdef int64_t q1 = N / delta  # q - 1
    cdef int64_t s = (a1 - a2) % N
    if s < 0:
        s += N
    cdef int64_t d2 = _gcd(s, N)
    cdef int64_t M = N / d2
    cdef int64_t inv = _modinv((s / d2) % M if M > 1 else 0, M)
    cdef int64_t d3 = _gcd(M * a1, N)
    cdef int64_t gp = _gcd(_gcd(a1, a2), N)
    if d2 * d3 != N * gp:
        raise AssertionError("label space does not match coset count")
    cdef int64_t ord_sub = N / gp
    if n % ord_sub:
        raise ValueError("n is not a multiple of the column-subgroup order")
    cdef int64_t mult = n / ord_sub

    t0 = np.ascontiguousarray(t0_exp, dtype=np.int64)
    l1p = np.ascontiguousarray(log1p, dtype=np.int64)
    cdef const int64_t[::1] t0v = t0
    cdef const int64_t[::1] l1v = l1p

    cnt = np.zeros(d3, dtype=np.int64)
    cdef int64_t[::1] cntv = cnt
    cdef int64_t u
    for u in range(N):
        if t0v[u]:
            cntv[u % d3] += 1

    cosetsum = np.zeros(d2 * d3, dtype=np.int64)
    cdef int64_t[::1] csv = cosetsum
    i1 = np.zeros(N, dtype=np.int64)
    cdef int64_t[::1] i1v = i1
    cdef int64_t f, t, base, off, j, lf, fill
    fill = N / d3
    for f in range(N):
        t = (f - f % d2) / d2  # >= 0
        i1v[f] = ((M - (t % M)) * inv) % M
        base = (f % d2) * d3
        lf = l1v[f]
        if lf < 0:
            for j in range(d3):
                csv[base + j] += fill
        else:
            off = (i1v[f] * a1 + lf) % d3
            # cosetsum[base + j] += cnt[(j + off) % d3]
            for j in range(d3 - off):
                csv[base + j] += cntv[j + off]
            for j in range(d3 - off, d3):
                csv[base + j] += cntv[j + off - d3]

    out = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] outv = out
    cdef int64_t d, idx, z, alpha
    for d in range(N):
        base = (d % d2) * d3
        off = (i1v[d] * a1) % d3
        idx = (d3 - off) % d3  # (0 - off) mod d3
        for alpha in range(delta):
            z = mult * csv[base + idx]
            outv[n - z] += q1
            idx += 1
            if idx == d3:
                idx = 0

    # rows with one zero coordinate
    cdef int64_t aa, da, ord_a, mrow, c, which
    cdef int64_t[::1] zcv
    for which in range(2):
        aa = a1 if which == 0 else a2
        da = _gcd(aa, N)
        ord_a = N / da
        if n % ord_a:
            raise ValueError("n is not a multiple of a zero's order")
        mrow = n / ord_a
        zc = np.zeros(da, dtype=np.int64)
        zcv = zc
        for u in range(N):
            if t0v[u]:
                zcv[u % da] += 1
        for c in range(da):
            outv[n - mrow * zcv[c]] += N / da

    outv[0] += 1
    return out
