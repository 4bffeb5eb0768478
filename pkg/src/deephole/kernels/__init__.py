"""Hot inner loops behind the search / scan / decoding operations.

Two interchangeable backends produce bit-identical integer results:

* ``numba`` — jitted per-point loops (default when numba imports);
* ``numpy`` — vectorized fallback.

Selection: DEEPHOLE_KERNEL=numba|numpy|auto (default auto).  All kernels
work on canonical int64 reps via per-field lookup tables; fields beyond
the table cap (q > 2**16) are rejected with KernelUnsupported and callers
fall back to the pure-Python layer.
"""

import os

import numpy as np

from .tables import TABLE_CAP, FieldTables, KernelUnsupported, get_tables


def _load_backend(choice):
    if choice == "numpy":
        from . import numpy_impl
        return numpy_impl
    if choice == "numba":
        from . import numba_impl
        return numba_impl
    try:
        from . import numba_impl
        return numba_impl
    except ImportError:
        from . import numpy_impl
        return numpy_impl


_choice = os.environ.get("DEEPHOLE_KERNEL", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy", ""):
    raise ValueError(f"DEEPHOLE_KERNEL must be auto|numba|numpy, got {_choice!r}")
_impl = _load_backend(_choice if _choice else "auto")


def backend_name():
    return _impl.name


def supports(field):
    return field.q <= TABLE_CAP


def hf_values(field, k, lows, points, impl=None):
    """Batch of remainder-route values; points is an (N, k+1) int array."""
    t = get_tables(field)
    return (impl or _impl).hf_batch(t, k, tuple(lows), np.asarray(points, dtype=np.int64))


def hf_with_gradient(field, k, d, lows, points, impl=None):
    """(values, H_0..H_d stack, gradients) for an (N, k+1) int array."""
    t = get_tables(field)
    return (impl or _impl).sym_grad_batch(t, k, d, tuple(lows),
                                          np.asarray(points, dtype=np.int64))


_POWMAT_CACHE = {}


def _powers_matrix(field, k):
    """Row j holds x**(j+1) over the units, for the message digits c_1..c_{k-1}."""
    key = (field, k)
    pm = _POWMAT_CACHE.get(key)
    if pm is None:
        units = field.units_reps()
        pm = np.empty((max(0, k - 1), len(units)), dtype=np.int64)
        row = np.array(units, dtype=np.int64)
        acc = row.copy()
        for j in range(k - 1):
            pm[j] = acc
            acc = np.array([field.mul(int(a), int(x)) for a, x in zip(acc, row)],
                           dtype=np.int64)
        _POWMAT_CACHE[key] = pm
    return pm


def max_agreement(field, k, word, impl=None):
    """Exact max agreement between ``word`` and all q**k codewords."""
    t = get_tables(field)
    pm = _powers_matrix(field, k)
    return int((impl or _impl).max_agreement(t, np.asarray(word, dtype=np.int64),
                                             pm, len(word)))


def agreement_reaches(field, k, word, threshold, impl=None):
    """True iff some codeword agrees with ``word`` on >= threshold positions."""
    t = get_tables(field)
    pm = _powers_matrix(field, k)
    best = (impl or _impl).max_agreement(t, np.asarray(word, dtype=np.int64),
                                         pm, threshold)
    return best >= threshold
