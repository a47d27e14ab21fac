"""Exact weight-count kernels, vectorized numpy implementation.

All arithmetic is int64; nothing here touches floating point.  The two-zero
kernel counts, for every message pair (a, b) in F_r x F_r, the number of
zero entries of the length-n trace-form codeword

    c_{a,b}[i] = Tr(a * beta^(i*a1) + b * beta^(i*a2)),   beta = gamma^(-1),

and returns the raw histogram of Hamming weights over all r^2 pairs.

Writing a = gamma^alpha and b = gamma^(alpha+d), entry i equals
gamma^e * (1 + gamma^f) with e = alpha - i*a1 and f = d + i*(a1 - a2)
(all mod N = r - 1), so zero entries are read off a trace-zero table at
(e + log(1 + gamma^f)) mod N.  The n offset pairs (-i*a1, i*(a1-a2)) form a
subgroup of Z_N^2 hit uniformly, so the zero count of a codeword is a
constant multiple of the sum of the table over one coset of that subgroup.
The kernel therefore accumulates all coset sums once (label arithmetic
below) and then reads each (alpha, d) off in O(1), instead of walking all
r^2 * n entries.
"""

from __future__ import annotations

import math

import numpy as np

IMPL = "numpy"


def _modinv(a: int, m: int) -> int:
    if m == 1:
        return 0
    return pow(a, -1, m)


def _label_parts(N: int, a1: int, a2: int):
    """Label arithmetic for cosets of the subgroup <(-a1, a1-a2)> of Z_N^2.

    Returns (d2, d3, i1, M) with:
      d2 = gcd(a1-a2, N): the f-coordinate moves in multiples of d2,
      i1[f]: a step count moving f to its canonical residue f mod d2,
      d3 = gcd((N/d2)*a1, N): the e-coordinate is then pinned mod d3.
    label(e, f) = (f % d2)*d3 + ((e - i1[f]*a1) % d3) is constant on cosets
    and distinct cosets get distinct labels (d2*d3 = N*gcd(a1, a2, N)).
    """
    s = (a1 - a2) % N
    d2 = math.gcd(s, N)
    M = N // d2
    inv = _modinv((s // d2) % M if d2 != N else 0, M)
    f = np.arange(N, dtype=np.int64)
    i1 = (((f % d2) - f) // d2 * inv) % M
    d3 = math.gcd(M * a1, N)
    gp = math.gcd(math.gcd(a1, a2), N)
    if d2 * d3 != N * gp:
        raise AssertionError("label space does not match coset count")
    return d2, d3, i1, N // gp


def two_zero_counts(
    N: int,
    delta: int,
    n: int,
    a1: int,
    a2: int,
    t0_exp: np.ndarray,
    log1p: np.ndarray,
) -> np.ndarray:
    """Raw weight histogram over all r^2 message pairs (int64, length n+1).

    t0_exp[e] = 1 iff Tr(gamma^e) = 0; log1p[f] = log(1 + gamma^f) or -1
    when 1 + gamma^f = 0.  Counts include every (a, b) with multiplicity,
    i.e. they sum to r^2; callers divide by the codeword multiplicity.
    """
    a1 %= N
    a2 %= N
    q = N // delta + 1
    d2, d3, i1, ord_sub = _label_parts(N, a1, a2)
    if n % ord_sub:
        raise ValueError("n is not a multiple of the column-subgroup order")
    mult = n // ord_sub

    t0_exp = np.asarray(t0_exp, dtype=np.int64)
    zero_exps = np.nonzero(t0_exp)[0]
    cnt_d3 = np.bincount(zero_exps % d3, minlength=d3)

    rows = np.arange(N, dtype=np.int64) % d2
    sent = log1p < 0
    off = (i1 * a1 + np.where(sent, 0, log1p)) % d3
    C = np.bincount(
        (rows[~sent] * d3 + off[~sent]), minlength=d2 * d3
    ).reshape(d2, d3)
    sent_rows = np.bincount(rows[sent], minlength=d2)

    # cosetsum[row, idx] = sum_off C[row, off] * cnt_d3[(idx + off) % d3]
    cnt2 = np.concatenate([cnt_d3, cnt_d3])
    cosetsum = np.empty((d2, d3), dtype=np.int64)
    for rrow in range(d2):
        cosetsum[rrow] = np.correlate(cnt2, C[rrow], mode="valid")[:d3]
    cosetsum += (sent_rows * (N // d3))[:, None]
    cosetsum = cosetsum.ravel()

    out = np.zeros(n + 1, dtype=np.int64)

    # both coordinates nonzero: alpha in [0, delta) covers each F_q*-scaling
    # orbit once, every orbit holding q-1 pairs
    alpha = np.arange(delta, dtype=np.int64)
    chunk = max(1, (1 << 22) // max(delta, 1))
    for lo in range(0, N, chunk):
        dd = np.arange(lo, min(lo + chunk, N), dtype=np.int64)
        base = (dd % d2) * d3
        off0 = (i1[dd] * a1) % d3
        idx = (alpha[None, :] - off0[:, None]) % d3
        z = cosetsum[(base[:, None] + idx).ravel()]
        wt = n - mult * z
        out += (q - 1) * np.bincount(wt, minlength=n + 1)

    # one coordinate zero
    for aa in (a1, a2):
        da = math.gcd(aa, N)
        ord_a = N // da
        if n % ord_a:
            raise ValueError("n is not a multiple of a zero's order")
        mrow = n // ord_a
        zc = np.bincount(zero_exps % da, minlength=da)
        wts = n - mrow * zc
        out += (N // da) * np.bincount(wts, minlength=n + 1)

    out[0] += 1  # the zero pair
    return out


def irreducible_counts(
    N: int,
    n: int,
    a: int,
    t0_exp: np.ndarray,
) -> np.ndarray:
    """Raw weight histogram of the length-n code {(Tr(x*beta^(i*a)))_i : x in F_r}."""
    a %= N
    da = math.gcd(a, N)
    ord_a = N // da
    if n % ord_a:
        raise ValueError("n is not a multiple of ord(gamma^a)")
    mrow = n // ord_a
    t0_exp = np.asarray(t0_exp, dtype=np.int64)
    zc = np.bincount(np.nonzero(t0_exp)[0] % da, minlength=da)
    out = np.zeros(n + 1, dtype=np.int64)
    np.add.at(out, n - mrow * zc, N // da)
    out[0] += 1
    return out
