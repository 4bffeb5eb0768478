"""Pure-numpy backend: vectorized over points / message chunks.

Same exact integer results as the numba backend; used when numba is
unavailable or DEEPHOLE_KERNEL=numpy.
"""

import numpy as np

from .tables import MODE_DIGITS, MODE_PRIME, MODE_XOR

name = "numpy"


def _mul(t, a, b):
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    nz = (a != 0) & (b != 0)
    out[nz] = t.exp[t.log[a[nz]] + t.log[b[nz]]]
    return out


def _add(t, a, b):
    if t.mode == MODE_PRIME:
        return (a + b) % t.p
    if t.mode == MODE_XOR:
        return a ^ b
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    pw = 1
    for _ in range(t.s):
        out += (((a // pw) % t.p + (b // pw) % t.p) % t.p) * pw
        pw *= t.p
    return out


def _sub(t, a, b):
    return _add(t, a, t.neg[b])


def hf_batch(t, k, lows, pts):
    """T^k remainder coefficient of f at each point row, by long division."""
    pts = np.ascontiguousarray(pts, dtype=np.int64)
    n_pts = pts.shape[0]
    d = len(lows)
    qc = np.zeros((n_pts, k + 2), dtype=np.int64)
    qc[:, 0] = 1
    for i in range(k + 1):
        nx = t.neg[pts[:, i]][:, None]
        shifted = np.zeros_like(qc)
        shifted[:, 1:] = qc[:, :-1]
        qc = _add(t, shifted, _mul(t, nx, qc))
    rem = np.zeros((n_pts, k + d + 1), dtype=np.int64)
    for j, c in enumerate(lows):
        rem[:, k + j] = c
    rem[:, k + d] = 1
    for deg in range(k + d, k, -1):
        c = rem[:, deg].copy()
        lo = deg - (k + 1)
        rem[:, lo:deg + 1] = _sub(t, rem[:, lo:deg + 1], _mul(t, c[:, None], qc))
    return rem[:, k].copy()


def sym_grad_batch(t, k, d, lows, pts):
    """(values, basis-value stack, gradients) at each point row.

    Basis values come from the elementary-symmetric recurrence, gradients
    from the lower-triangular derivative recurrence — an independent route
    from hf_batch, pinned equal in tests.
    """
    pts = np.ascontiguousarray(pts, dtype=np.int64)
    n_pts = pts.shape[0]
    e = np.zeros((n_pts, d + 1), dtype=np.int64)
    e[:, 0] = 1
    for i in range(k + 1):
        x = pts[:, i]
        for j in range(d, 0, -1):
            e[:, j] = _add(t, e[:, j], _mul(t, x, e[:, j - 1]))
    h = np.zeros((n_pts, d + 1), dtype=np.int64)
    h[:, 0] = 1
    for j in range(1, d + 1):
        acc = np.zeros(n_pts, dtype=np.int64)
        for i in range(1, j + 1):
            term = _mul(t, e[:, i], h[:, j - i])
            acc = _add(t, acc, term) if i % 2 else _sub(t, acc, term)
        h[:, j] = acc
    vals = h[:, d].copy()
    for j, c in enumerate(lows):
        if c:
            vals = _add(t, vals, _mul(t, np.int64(c), h[:, j]))
    cs = []
    for m in range(1, d + 1):
        c = h[:, d - m].copy()
        for j in range(m, d):
            if lows[j]:
                c = _add(t, c, _mul(t, np.int64(lows[j]), h[:, j - m]))
        cs.append(c)
    grads = np.zeros((n_pts, k + 1), dtype=np.int64)
    for i in range(k + 1):
        x = pts[:, i]
        acc = np.zeros(n_pts, dtype=np.int64)
        for m in range(d, 0, -1):
            acc = _add(t, _mul(t, acc, x), cs[m - 1])
        grads[:, i] = acc
    return vals, h, grads


def max_agreement(t, word, powmat, stop):
    """Max agreement count between the word and any degree<k evaluation
    vector.  The constant coefficient is folded into a histogram; the
    remaining digits are enumerated in chunks.  Early exit once a count
    reaches ``stop``."""
    word = np.ascontiguousarray(word, dtype=np.int64)
    q = t.q
    n = word.size
    k1 = powmat.shape[0]
    leaves = q ** k1
    chunk = max(1, (1 << 16) // max(1, n))
    best = 0
    for start in range(0, leaves, chunk):
        idx = np.arange(start, min(start + chunk, leaves), dtype=np.int64)
        evals = np.zeros((idx.size, n), dtype=np.int64)
        rem = idx.copy()
        for lev in range(k1):
            digit = rem % q
            rem //= q
            evals = _add(t, evals, _mul(t, digit[:, None], powmat[lev][None, :]))
        delta = _sub(t, word[None, :], evals)
        flat = delta + q * np.arange(idx.size, dtype=np.int64)[:, None]
        counts = np.bincount(flat.ravel(), minlength=q * idx.size)
        best = max(best, int(counts.max()))
        if best >= stop:
            return best
    return best
