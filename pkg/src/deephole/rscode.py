"""Standard Reed-Solomon code over the nonzero field elements.

Codewords are evaluations of polynomials of degree < k at all q-1 units in
ascending canonical order (that order is fixed globally by the field
layer).  Minimum distance is n-k+1 and the covering radius is n-k; a word
sitting at distance exactly n-k is a deep hole.

Distance-to-code is exact brute force over all q**k message polynomials,
guarded at q**k <= 10**7.  The enumeration collapses the constant
coefficient into a residue histogram (same exact maximum agreement, one
factor of q cheaper) and early-exits only at full agreement.
"""

from . import kernels
from .errors import (DegreeOutOfRange, DegreeTooHigh, FieldMismatch,
                     TooLargeForBruteForce)
from .poly import UPoly, _rep
from .symmetric import TopPoly

BRUTE_FORCE_CAP = 10 ** 7


class RSCode:
    """Parameters of the standard code of dimension k over F_q."""

    __slots__ = ("field", "k")

    def __init__(self, field, k):
        n = field.q - 1
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n = {n}, got k={k}")
        self.field = field
        self.k = k

    @property
    def n(self):
        return self.field.q - 1

    @property
    def min_distance(self):
        return self.n - self.k + 1

    @property
    def covering_radius(self):
        return self.n - self.k

    @property
    def eval_points(self):
        return self.field.units_reps()

    def __eq__(self, other):
        return (isinstance(other, RSCode) and self.field == other.field
                and self.k == other.k)

    def __hash__(self):
        return hash((self.field, self.k))

    def __repr__(self):
        return f"RSCode(q={self.field.q}, k={self.k})"


class Word:
    """A length-n vector of element reps over the code's field."""

    __slots__ = ("field", "symbols")

    def __init__(self, field, symbols):
        self.field = field
        self.symbols = tuple(_rep(field, c) for c in symbols)

    def __eq__(self, other):
        return (isinstance(other, Word) and self.field == other.field
                and self.symbols == other.symbols)

    def __len__(self):
        return len(self.symbols)

    def __repr__(self):
        return f"Word({list(self.symbols)})"


def word_from_poly(code, f):
    """Evaluate f over the units, in canonical order."""
    if f.field != code.field:
        raise FieldMismatch(f"{f.field!r} vs {code.field!r}")
    if f.degree > code.n - 1:
        raise DegreeTooHigh(f"deg f = {f.degree} > n-1 = {code.n - 1}")
    return Word(code.field, [f(x) for x in code.eval_points])


def _check_word(code, w):
    if w.field != code.field:
        raise FieldMismatch(f"{w.field!r} vs {code.field!r}")
    if len(w.symbols) != code.n:
        raise ValueError(f"word length {len(w.symbols)} != n = {code.n}")


def _guard(code):
    if code.field.q ** code.k > BRUTE_FORCE_CAP:
        raise TooLargeForBruteForce(
            f"q^k = {code.field.q ** code.k} exceeds {BRUTE_FORCE_CAP}")


def distance_to_code(code, w):
    """Exact min Hamming distance to the code: n minus the best agreement
    count over all q**k codewords."""
    _check_word(code, w)
    _guard(code)
    return code.n - kernels.max_agreement(code.field, code.k, w.symbols)


def is_deep_hole(code, w):
    """True iff the word sits at distance exactly n-k (the covering radius).

    Equivalent to: no codeword agrees with w on k+1 or more positions,
    which is what the kernel checks (with early exit).
    """
    _check_word(code, w)
    _guard(code)
    return not kernels.agreement_reaches(code.field, code.k, w.symbols, code.k + 1)


def canonical_top(code, f):
    """Normalize f to the monic top part that decides deep-hole status.

    Strips all monomials of degree <= k-1 (adding a codeword moves the
    whole coset, preserving every distance) and divides by the leading
    coefficient (scaling by a unit maps the code onto itself).
    """
    field = code.field
    if f.field != field:
        raise FieldMismatch(f"{f.field!r} vs {field!r}")
    if not code.k <= f.degree <= code.n - 1:
        raise DegreeOutOfRange(
            f"need k <= deg f <= n-1, got deg f = {f.degree}")
    inv_lead = field.inv(f.coeffs[-1])
    monic = [field.mul(inv_lead, c) for c in f.coeffs]
    d = f.degree - code.k
    return TopPoly(field, code.k, d, monic[code.k:code.k + d])


def pure_distance_oracle(code, w):
    """Literal brute force: enumerate every message polynomial, evaluate,
    count agreements.  Test oracle only — O(q**k * n * k)."""
    from itertools import product
    _check_word(code, w)
    field = code.field
    best = 0
    for msg in product(range(field.q), repeat=code.k):
        agree = 0
        for x, wx in zip(code.eval_points, w.symbols):
            acc = 0
            for c in reversed(msg):
                acc = field.add(field.mul(acc, x), c)
            if acc == wx:
                agree += 1
        if agree > best:
            best = agree
            if best == code.n:
                break
    return code.n - best
