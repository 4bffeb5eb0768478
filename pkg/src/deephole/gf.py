"""Exact arithmetic in small finite fields F_q = F_{p^s}.

Elements are canonical integers in [0, q): for s == 1 the residue itself,
for s > 1 the base-p encoding c_0 + c_1*p + ... + c_{s-1}*p^{s-1} of the
coefficient tuple of the residue class modulo the field modulus.  All
operations are pure functions on these reps; fields are capped at
q <= 2**20, so trial division and exhaustive loops are always affordable.

Extension-field multiplication is schoolbook polynomial multiply followed
by reduction modulo the (monic, irreducible) field modulus.  Inversion is
Fermat: a**(q-2).
"""

from .errors import DivisionByZero, FieldMismatch, NonPrime, NotIrreducible, TooLarge

MAX_Q = 1 << 20


def is_prime(n):
    """Trial division, adequate for n <= 2**20."""
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# dense little-endian polynomial helpers over F_p (used for the modulus only)
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        inv_lc = pow(b[-1], p - 2, p)
        mb = [(c * inv_lc) % p for c in b]
        a = _pmod(a, mb, p)
        a, b = b, a
    return a


def _ppow_T(e, m, p):
    """T**e mod m over F_p, square-and-multiply on the exponent."""
    result = [1]
    base = _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(coeffs, p):
    """Rabin irreducibility test for a monic polynomial over F_p.

    ``coeffs`` is the little-endian coefficient list including the leading 1.
    """
    s = len(coeffs) - 1
    if s < 1 or coeffs[-1] != 1:
        return False
    m = [c % p for c in coeffs]
    # T^(p^s) == T mod m
    t = _ppow_T(p ** s, m, p)
    diff = list(t) + [0] * max(0, 2 - len(t))
    diff[1] = (diff[1] - 1) % p
    if _ptrim(diff):
        return False
    for r in _prime_factors(s):
        t = _ppow_T(p ** (s // r), m, p)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(m, _ptrim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def find_irreducible(p, s):
    """Deterministically pick the monic irreducible of degree s over F_p
    whose low-coefficient tuple has the smallest canonical rep
    c_0 + c_1*p + ... + c_{s-1}*p^{s-1}.

    Existence is guaranteed, so the scan always terminates.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if s < 2:
        raise ValueError("find_irreducible requires s >= 2")
    for rep in range(p ** s):
        digits = _digits(rep, p, s)
        cand = digits + (1,)
        if is_irreducible(list(cand), p):
            return cand
    raise AssertionError("unreachable: an irreducible of every degree exists")


def _digits(rep, p, s):
    out = []
    for _ in range(s):
        out.append(rep % p)
        rep //= p
    return tuple(out)


def _undigits(digits, p):
    rep = 0
    for c in reversed(digits):
        rep = rep * p + c
    return rep


class FieldSpec:
    """An exact finite field F_{p^s} with canonical integer element reps.

    Instances are immutable after construction and safe to share across
    threads; all methods below are pure functions on int reps.
    """

    def __init__(self, p, s=1, modulus=None):
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if s < 1:
            raise ValueError("s must be >= 1")
        q = p ** s
        if q > MAX_Q:
            raise TooLarge(f"q = {p}^{s} exceeds cap 2**20")
        if s == 1:
            if modulus is not None:
                raise ValueError("modulus is only meaningful for s > 1")
        else:
            if modulus is None:
                modulus = find_irreducible(p, s)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != s + 1 or modulus[-1] != 1:
                raise NotIrreducible(f"modulus must be monic of degree {s}")
            if not is_irreducible(list(modulus), p):
                raise NotIrreducible(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.s = s
        self.q = q
        self.modulus = modulus
        self._mod_digits = None if modulus is None else [c % p for c in modulus]
        self._prime_subfield = None

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus))

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s}, mod={list(self.modulus)})"

    # -- rep-level arithmetic -------------------------------------------------

    def check(self, rep):
        if not 0 <= rep < self.q:
            raise ValueError(f"rep {rep} out of range for {self!r}")
        return rep

    def decode(self, rep):
        """Canonical rep -> coefficient tuple (c_0, ..., c_{s-1})."""
        return _digits(rep, self.p, self.s)

    def encode(self, digits):
        return _undigits([c % self.p for c in digits], self.p)

    def add(self, a, b):
        if self.s == 1:
            return (a + b) % self.p
        da, db = _digits(a, self.p, self.s), _digits(b, self.p, self.s)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a):
        if self.s == 1:
            return (-a) % self.p
        return _undigits([(-x) % self.p for x in _digits(a, self.p, self.s)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.s == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        prod = _pmul(list(_digits(a, self.p, self.s)),
                     list(_digits(b, self.p, self.s)), self.p)
        red = _pmod(prod, self._mod_digits, self.p)
        return _undigits(red + [0] * (self.s - len(red)), self.p)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.s == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.q - 2)

    def trace(self, a):
        """Trace down to the prime field: sum of a**(p^i) for i < s.

        The result rep is always < p (the value lies in F_p).
        """
        acc, frob = 0, a
        for _ in range(self.s):
            acc = self.add(acc, frob)
            frob = self.pow(frob, self.p)
        assert acc < self.p
        return acc

    def units_reps(self):
        """Reps of all q-1 nonzero elements, ascending.  This order fixes
        the coordinate positions of every codeword downstream."""
        return tuple(range(1, self.q))

    # -- element layer ----------------------------------------------------------

    def elem(self, rep):
        return Felt(self, self.check(int(rep)))

    def zero(self):
        return Felt(self, 0)

    def one(self):
        return Felt(self, 1)

    def prime_subfield(self):
        if self.s == 1:
            return self
        if self._prime_subfield is None:
            self._prime_subfield = FieldSpec(self.p, 1)
        return self._prime_subfield


class Felt:
    """A field element: a FieldSpec plus its canonical integer rep."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = field.check(rep)

    def _coerce(self, other):
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.rep
        if isinstance(other, int):
            # integers embed through the prime subfield: rep of n*1 is n mod p
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        return NotImplemented if r is NotImplemented else Felt(self.field, self.field.add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        return NotImplemented if r is NotImplemented else Felt(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        r = self._coerce(other)
        return NotImplemented if r is NotImplemented else Felt(self.field, self.field.mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        return NotImplemented if r is NotImplemented else Felt(self.field, self.field.mul(self.rep, self.field.inv(r)))

    def __pow__(self, e):
        return Felt(self.field, self.field.pow(self.rep, e))

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.rep))

    def inv(self):
        return Felt(self.field, self.field.inv(self.rep))

    def __eq__(self, other):
        if isinstance(other, Felt):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def __int__(self):
        return self.rep

    def __repr__(self):
        return f"F{self.field.q}({self.rep})"


def make_field(p, s=1, modulus=None):
    """Validated field constructor; picks the canonical modulus when omitted."""
    return FieldSpec(p, s, modulus)


def field_from_order(q):
    """F_q for a prime power q, with the canonical (scan-order) modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            n = q
            while n % p == 0:
                n //= p
                s += 1
            if n != 1:
                raise NonPrime(f"{q} is not a prime power")
            return make_field(p, s)
    raise NonPrime(f"{q} is not a prime power")


def trace(a):
    """Trace of a Felt down to its prime field, as a Felt of F_p."""
    f = a.field
    return Felt(f.prime_subfield(), f.trace(a.rep))


def units(field):
    """All q-1 nonzero elements in ascending canonical-rep order."""
    return tuple(Felt(field, r) for r in field.units_reps())
