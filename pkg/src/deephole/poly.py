"""Exact univariate and sparse multivariate polynomials over a FieldSpec.

UPoly is dense (little-endian coefficient reps, no trailing zeros) because
the remainder computation dominates and degrees stay below q <= 2**20.
MVPoly is sparse (exponent-vector map) because the symmetric-basis objects
stay tiny while their expansion in the X variables explodes; expansion is
only ever done at small variable counts for identity tests.

Root finding is exhaustive evaluation, O(q * deg) — the simplest correct
method at desk scale.
"""

from .errors import (ArityMismatch, FieldMismatch, IndexOutOfRange,
                     NonMonicDivisor, ZeroPolynomial)
from .gf import Felt


def _rep(field, v):
    if isinstance(v, Felt):
        if v.field != field:
            raise FieldMismatch(f"{v.field!r} vs {field!r}")
        return v.rep
    return field.check(int(v))


class UPoly:
    """Dense univariate polynomial; coeffs low-degree-first, normalized."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [_rep(field, c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def monomial(cls, field, deg, c=1):
        return cls(field, (0,) * deg + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1   # -1 for the zero polynomial

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, UPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UPoly(f, out)

    def __neg__(self):
        f = self.field
        return UPoly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if not self.coeffs or not other.coeffs:
            return UPoly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return UPoly(f, out)

    def scale(self, c):
        f = self.field
        c = _rep(f, c)
        return UPoly(f, [f.mul(c, a) for a in self.coeffs])

    def __call__(self, x):
        """Horner evaluation at a rep or Felt; returns a rep."""
        f = self.field
        x = _rep(f, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __repr__(self):
        return f"UPoly({list(self.coeffs)} over {self.field!r})"


def _divmod_reps(fc, qc, field):
    """Long division of coefficient lists by a monic divisor; (quot, rem)."""
    rem = list(fc)
    dq = len(qc) - 1
    if len(rem) - 1 < dq:
        return [], rem
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quot[i - dq] = c
            rem[i] = 0
            for j in range(dq):
                rem[i - dq + j] = field.sub(rem[i - dq + j], field.mul(c, qc[j]))
    return quot, rem


def uni_divmod(f, Q):
    """Exact (quotient, remainder) for a monic divisor of degree >= 1."""
    if not Q.is_monic or Q.degree < 1:
        raise NonMonicDivisor("divisor must be monic of degree >= 1")
    quot, rem = _divmod_reps(f.coeffs, Q.coeffs, f.field)
    return UPoly(f.field, quot), UPoly(f.field, rem)


def uni_rem(f, Q):
    """Remainder of f modulo monic Q, deg rem < deg Q."""
    return uni_divmod(f, Q)[1]


def uni_distinct_roots(f):
    """All roots of f in F_q, multiplicity-free, by exhaustive evaluation."""
    if not f:
        raise ZeroPolynomial("root set of the zero polynomial is all of F_q")
    field = f.field
    return {Felt(field, r) for r in range(field.q) if f(r) == 0}


class MVPoly:
    """Sparse multivariate polynomial: exponent tuple -> nonzero coeff rep."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ArityMismatch(f"exponent tuple {exps} has wrong length")
            c = _rep(field, c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def constant(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MVPoly) and self.field == other.field
                and self.nvars == other.nvars and self.terms == other.terms)

    def __add__(self, other):
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = f.add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MVPoly(f, self.nvars, out)

    def __neg__(self):
        f = self.field
        return MVPoly(f, self.nvars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = f.add(out.get(e, 0), f.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MVPoly(f, self.nvars, out)

    def scale(self, c):
        f = self.field
        c = _rep(f, c)
        return MVPoly(f, self.nvars, {e: f.mul(c, v) for e, v in self.terms.items()})

    def __pow__(self, e):
        out = MVPoly.constant(self.field, self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self, deg=None):
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if deg is None:
            return len(degs) == 1
        return degs == {deg}

    def __repr__(self):
        return f"MVPoly({len(self.terms)} terms, {self.nvars} vars over {self.field!r})"


def mv_eval(P, x):
    """Exact value of P at a point (reps or Felts); returns a rep."""
    f = P.field
    if len(x) != P.nvars:
        raise ArityMismatch(f"point length {len(x)} != nvars {P.nvars}")
    xs = [_rep(f, v) for v in x]
    acc = 0
    for exps, c in P.terms.items():
        t = c
        for xi, e in zip(xs, exps):
            if e:
                t = f.mul(t, f.pow(xi, e))
        acc = f.add(acc, t)
    return acc


def mv_partial(P, var_index):
    """Formal partial derivative; terms with exponent divisible by p drop."""
    f = P.field
    if not 0 <= var_index < P.nvars:
        raise IndexOutOfRange(f"variable index {var_index} out of range")
    out = {}
    for exps, c in P.terms.items():
        e = exps[var_index]
        if e == 0:
            continue
        scalar = e % f.p
        if scalar == 0:
            continue
        ne = list(exps)
        ne[var_index] = e - 1
        ne = tuple(ne)
        v = f.add(out.get(ne, 0), f.mul(c, scalar))
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return MVPoly(f, P.nvars, out)


def elementary_symmetric(i, nvars, field):
    """The i-th elementary symmetric polynomial of nvars variables; Pi_0 = 1."""
    if not 0 <= i <= nvars:
        raise IndexOutOfRange(f"need 0 <= i <= nvars, got i={i}, nvars={nvars}")
    from itertools import combinations
    terms = {}
    for subset in combinations(range(nvars), i):
        e = [0] * nvars
        for j in subset:
            e[j] = 1
        terms[tuple(e)] = 1
    return MVPoly(field, nvars, terms)


def elementary_symmetric_values(xs, upto, field):
    """Values (Pi_0(x), ..., Pi_upto(x)) by the running-product recurrence."""
    e = [1] + [0] * upto
    for x in xs:
        for j in range(min(upto, len(e) - 1), 0, -1):
            e[j] = field.add(e[j], field.mul(x, e[j - 1]))
    return e
