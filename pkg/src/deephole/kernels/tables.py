"""Flat lookup tables that let the batch kernels do field arithmetic on
int64 arrays: discrete log / antilog for multiplication, a negation
table, and an addition mode switch (prime residue / xor / generic digits).

Table arithmetic is bit-identical to the schoolbook path in ``gf`` (same
canonical reps, exact integers); tests pin this exhaustively.  Tables are
built once per field and capped at q <= 2**16, matching the cap the field
layer places on log/antilog use; larger fields take the pure-Python path.
"""

import numpy as np

from ..gf import _prime_factors

TABLE_CAP = 1 << 16

MODE_PRIME = 0    # s == 1: (a + b) % p
MODE_XOR = 1      # p == 2: a ^ b
MODE_DIGITS = 2   # odd p, s > 1: digitwise base-p addition


class KernelUnsupported(RuntimeError):
    """Field too large for table-backed kernels."""


class FieldTables:
    __slots__ = ("p", "s", "q", "mode", "exp", "log", "neg")

    def __init__(self, field):
        if field.q > TABLE_CAP:
            raise KernelUnsupported(f"q={field.q} exceeds kernel table cap {TABLE_CAP}")
        p, s, q = field.p, field.s, field.q
        self.p, self.s, self.q = p, s, q
        if s == 1:
            self.mode = MODE_PRIME
        elif p == 2:
            self.mode = MODE_XOR
        else:
            self.mode = MODE_DIGITS
        g = _find_generator(field)
        exp = np.empty(max(1, 2 * (q - 1) - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = field.mul(acc, g)
        for i in range(q - 1, exp.size):
            exp[i] = exp[i - (q - 1)]
        self.exp = exp
        self.log = log
        self.neg = np.array([field.neg(a) for a in range(q)], dtype=np.int64)


def _find_generator(field):
    q = field.q
    if q == 2:
        return 1
    factors = _prime_factors(q - 1)
    for g in range(1, q):
        if all(field.pow(g, (q - 1) // r) != 1 for r in factors):
            return g
    raise AssertionError("unreachable: F_q* is cyclic")


_CACHE = {}


def get_tables(field):
    t = _CACHE.get(field)
    if t is None:
        t = FieldTables(field)
        _CACHE[field] = t
    return t
