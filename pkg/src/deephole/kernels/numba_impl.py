"""numba backend: per-point jitted loops, GIL released.

Same exact integer results as the numpy backend.
"""

import numpy as np
from numba import njit

from .tables import MODE_PRIME, MODE_XOR

name = "numba"

_JIT = dict(cache=True, nogil=True)


@njit(inline="always")
def _mul(a, b, exp_t, log_t):
    if a == 0 or b == 0:
        return 0
    return exp_t[log_t[a] + log_t[b]]


@njit(inline="always")
def _add(a, b, p, s, mode):
    if mode == MODE_PRIME:
        return (a + b) % p
    if mode == MODE_XOR:
        return a ^ b
    out = 0
    pw = 1
    for _ in range(s):
        out += ((a % p + b % p) % p) * pw
        a //= p
        b //= p
        pw *= p
    return out


@njit(**_JIT)
def hf_batch_core(pts, lows, k, p, s, mode, exp_t, log_t, neg_t):
    n_pts = pts.shape[0]
    d = lows.size
    out = np.empty(n_pts, np.int64)
    qc = np.empty(k + 2, np.int64)
    rem = np.empty(k + d + 1, np.int64)
    for r in range(n_pts):
        qc[0] = 1
        m = 1
        for i in range(k + 1):
            nx = neg_t[pts[r, i]]
            qc[m] = 0
            for j in range(m, 0, -1):
                qc[j] = _add(qc[j - 1], _mul(nx, qc[j], exp_t, log_t), p, s, mode)
            qc[0] = _mul(nx, qc[0], exp_t, log_t)
            m += 1
        for j in range(k):
            rem[j] = 0
        for j in range(d):
            rem[k + j] = lows[j]
        rem[k + d] = 1
        for deg in range(k + d, k, -1):
            c = rem[deg]
            if c != 0:
                lo = deg - (k + 1)
                for j in range(k + 2):
                    rem[lo + j] = _add(rem[lo + j],
                                       neg_t[_mul(c, qc[j], exp_t, log_t)],
                                       p, s, mode)
        out[r] = rem[k]
    return out


def hf_batch(t, k, lows, pts):
    pts = np.ascontiguousarray(pts, dtype=np.int64)
    lows = np.asarray(lows, dtype=np.int64)
    return hf_batch_core(pts, lows, k, t.p, t.s, t.mode, t.exp, t.log, t.neg)


@njit(**_JIT)
def sym_grad_core(pts, lows, k, d, p, s, mode, exp_t, log_t, neg_t):
    n_pts = pts.shape[0]
    vals = np.empty(n_pts, np.int64)
    hstack = np.empty((n_pts, d + 1), np.int64)
    grads = np.empty((n_pts, k + 1), np.int64)
    e = np.empty(d + 1, np.int64)
    h = np.empty(d + 1, np.int64)
    cs = np.empty(d + 1, np.int64)
    for r in range(n_pts):
        for j in range(d + 1):
            e[j] = 0
        e[0] = 1
        for i in range(k + 1):
            x = pts[r, i]
            for j in range(d, 0, -1):
                e[j] = _add(e[j], _mul(x, e[j - 1], exp_t, log_t), p, s, mode)
        h[0] = 1
        for j in range(1, d + 1):
            acc = 0
            for i in range(1, j + 1):
                term = _mul(e[i], h[j - i], exp_t, log_t)
                if i % 2 == 0:
                    term = neg_t[term]
                acc = _add(acc, term, p, s, mode)
            h[j] = acc
        v = h[d]
        for j in range(d):
            if lows[j] != 0:
                v = _add(v, _mul(lows[j], h[j], exp_t, log_t), p, s, mode)
        vals[r] = v
        for j in range(d + 1):
            hstack[r, j] = h[j]
        for m in range(1, d + 1):
            c = h[d - m]
            for j in range(m, d):
                if lows[j] != 0:
                    c = _add(c, _mul(lows[j], h[j - m], exp_t, log_t), p, s, mode)
            cs[m] = c
        for i in range(k + 1):
            x = pts[r, i]
            acc = 0
            for m in range(d, 0, -1):
                acc = _add(_mul(acc, x, exp_t, log_t), cs[m], p, s, mode)
            grads[r, i] = acc
    return vals, hstack, grads


def sym_grad_batch(t, k, d, lows, pts):
    pts = np.ascontiguousarray(pts, dtype=np.int64)
    lows = np.asarray(lows, dtype=np.int64)
    return sym_grad_core(pts, lows, k, d, t.p, t.s, t.mode, t.exp, t.log, t.neg)


@njit(**_JIT)
def max_agree_core(word, powmat, q, stop, p, s, mode, exp_t, log_t, neg_t):
    n = word.size
    k1 = powmat.shape[0]
    digits = np.zeros(k1, np.int64)
    partial = np.zeros((k1 + 1, n), np.int64)
    counts = np.zeros(q, np.int64)
    best = 0
    while True:
        for i in range(q):
            counts[i] = 0
        for i in range(n):
            counts[_add(word[i], neg_t[partial[0, i]], p, s, mode)] += 1
        for i in range(q):
            if counts[i] > best:
                best = counts[i]
        if best >= stop:
            return best
        lev = 0
        while lev < k1 and digits[lev] == q - 1:
            digits[lev] = 0
            lev += 1
        if lev == k1:
            break
        digits[lev] += 1
        for u in range(lev, -1, -1):
            dg = digits[u]
            if dg == 0:
                for i in range(n):
                    partial[u, i] = partial[u + 1, i]
            else:
                for i in range(n):
                    partial[u, i] = _add(partial[u + 1, i],
                                         _mul(dg, powmat[u, i], exp_t, log_t),
                                         p, s, mode)
    return best


def max_agreement(t, word, powmat, stop):
    word = np.ascontiguousarray(word, dtype=np.int64)
    powmat = np.ascontiguousarray(powmat, dtype=np.int64)
    return int(max_agree_core(word, powmat, t.q, stop,
                              t.p, t.s, t.mode, t.exp, t.log, t.neg))
