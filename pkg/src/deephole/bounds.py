"""Exact evaluation of the rational-point estimates and nonexistence
thresholds, entirely in arbitrary-precision arithmetic.

Half-integer powers of q never become floats: every quantity is kept as
a + b*sqrt(q) with exact rational a, b, and sign questions are settled by
squaring (with sign analysis), so no rounding can flip a verdict.  The
threshold inequalities q > c * d^(2+eps) with rational eps = a/b are
decided as the equivalent integer comparison q^b > c^b * d^(2b+a).
"""

from fractions import Fraction
from math import isqrt

from .errors import InvalidParams

CONDITIONS_MET = "conditions_met"
CONDITIONS_NOT_MET = "conditions_not_met"
NOT_APPLICABLE = "not_applicable"


def _sign(x):
    return (x > 0) - (x < 0)


class SqrtVal:
    """Exact a + b*sqrt(q) with rational a, b; totally ordered for fixed q."""

    __slots__ = ("q", "a", "b")

    def __init__(self, q, a=0, b=0):
        self.q = int(q)
        self.a = Fraction(a)
        self.b = Fraction(b)
        if self.b:
            r = isqrt(self.q)
            if r * r == self.q:   # perfect square: fold the radical away
                self.a += self.b * r
                self.b = Fraction(0)

    @classmethod
    def qpow(cls, q, e):
        """q**(e/2) as an exact value; e is the doubled exponent."""
        if e < 0:
            raise InvalidParams(f"negative half-power exponent {e}")
        if e % 2 == 0:
            return cls(q, Fraction(q) ** (e // 2), 0)
        return cls(q, 0, Fraction(q) ** ((e - 1) // 2))

    def _coerce(self, other):
        if isinstance(other, SqrtVal):
            if other.q != self.q:
                raise InvalidParams("mixing sqrt terms over different q")
            return other
        return SqrtVal(self.q, other, 0)

    def __add__(self, other):
        o = self._coerce(other)
        return SqrtVal(self.q, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return SqrtVal(self.q, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return SqrtVal(self.q,
                       self.a * o.a + self.b * o.b * self.q,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def sign(self):
        a, b, q = self.a, self.b, self.q
        if b == 0:
            return _sign(a)
        if a == 0:
            return _sign(b)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        cmp = _sign(a * a - b * b * q)
        # a > 0 > b: positive iff a^2 > b^2 q; a < 0 < b: the reverse
        return cmp if a > 0 else -cmp

    def __eq__(self, other):
        return (self - self._coerce(other)).sign() == 0

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def is_positive(self):
        return self.sign() > 0

    def approx(self):
        """Float estimate for display only; never used in a verdict."""
        return float(self.a) + float(self.b) * self.q ** 0.5

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.q})"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.q})"

    __repr__ = __str__


class BoundReport:
    """Named exact terms plus an optional verdict with per-check detail."""

    __slots__ = ("params", "terms", "value", "verdict", "reasons", "checks")

    def __init__(self, params, terms, value=None, verdict=None, reasons=(),
                 checks=None):
        self.params = dict(params)
        self.terms = dict(terms)
        self.value = value
        self.verdict = verdict
        self.reasons = list(reasons)
        self.checks = dict(checks or {})

    def to_json(self):
        out = {"params": {k: str(v) if isinstance(v, Fraction) else v
                          for k, v in self.params.items()},
               "terms": {k: str(v) for k, v in self.terms.items()}}
        if self.value is not None:
            out["value"] = str(self.value)
            out["value_approx"] = self.value.approx()
            out["positive"] = self.value.is_positive()
        if self.verdict is not None:
            out["verdict"] = self.verdict
            out["reasons"] = list(self.reasons)
        if self.checks:
            out["checks"] = dict(self.checks)
        return out

    def __repr__(self):
        core = self.verdict if self.verdict else str(self.value)
        return f"BoundReport({self.params}, {core})"


def projective_point_count(q, m):
    """|P^m(F_q)| = q^m + ... + q + 1."""
    return sum(q ** i for i in range(m + 1))


def gl_estimate_terms(m, s, d, q):
    """The two deviation terms of the explicit point-count estimate for a
    degree-d hypersurface in P^(m+1) with singular locus of dimension <= s."""
    if not (d >= 2 and s >= 0 and m > s and q >= 2):
        raise InvalidParams(f"need d >= 2, s >= 0, m > s, q >= 2; got m={m}, s={s}, d={d}, q={q}")
    p_m = projective_point_count(q, m)
    term1 = SqrtVal.qpow(q, m + s + 1) * ((d - 1) ** (m - s))
    term2 = SqrtVal.qpow(q, m + s) * (6 * (d + 2) ** (m + 2))
    deviation = term1 + term2
    return BoundReport(
        {"m": m, "s": s, "d": d, "q": q},
        {"p_m": SqrtVal(q, p_m), "gl_term1": term1, "gl_term2": term2,
         "lower": p_m - deviation, "upper": p_m + deviation},
        value=deviation)


def euler_bound(n, d):
    """The Euler-characteristic bound 2*(d+1)^n."""
    return 2 * (d + 1) ** n


def katz_accumulator(n, d):
    """E(n,d) + 2 + 2 * sum_{j<n} E(j,d)."""
    return euler_bound(n, d) + 2 + 2 * sum(euler_bound(j, d) for j in range(1, n))


def c_sm_bound(m, d):
    """Betti-number sum bound: the Katz-style accumulation (with d+1
    substituted, as the closed form's derivation does) next to the closed
    form 6*(d+2)^(m+2).  Asserts the sum never exceeds the closed form;
    any parameter where it would is reported, not hidden."""
    if m < 1 or d < 2:
        raise InvalidParams(f"need m >= 1, d >= 2; got m={m}, d={d}")
    katz = 1 + sum(1 + katz_accumulator(n + 1, d + 1) for n in range(1, m + 2))
    closed = 6 * (d + 2) ** (m + 2)
    ok = katz <= closed
    return BoundReport(
        {"m": m, "d": d},
        {"katz_sum": SqrtVal(2, katz), "closed_form": SqrtVal(2, closed)},
        verdict=CONDITIONS_MET if ok else CONDITIONS_NOT_MET,
        reasons=[] if ok else [f"katz_sum {katz} > closed_form {closed}"])


def _check_kd(q, k, d, need_length=True):
    if not k > d >= 2:
        raise InvalidParams(f"need k > d >= 2, got k={k}, d={d}")
    if q < 2:
        raise InvalidParams(f"need q >= 2, got q={q}")
    if need_length and not q - 1 > k + d:
        raise InvalidParams(f"need q - 1 > k + d, got q={q}, k+d={k + d}")


def affine_lower_bound(q, k, d):
    """Exact value of q^k - 2(d-1)^(k-d+1) q^((k+d)/2) - 7(d+2)^(k+2) q^((k+d-1)/2)."""
    _check_kd(q, k, d)
    main = SqrtVal(q, Fraction(q) ** k)
    t1 = SqrtVal.qpow(q, k + d) * (2 * (d - 1) ** (k - d + 1))
    t2 = SqrtVal.qpow(q, k + d - 1) * (7 * (d + 2) ** (k + 2))
    value = main - t1 - t2
    return BoundReport({"q": q, "k": k, "d": d},
                       {"main_term": main, "gl_term1": t1, "gl_term2": t2},
                       value=value)


def _coordinate_section_bound(q, k, d):
    """Shared factor of the zero-coordinate / equal-coordinate counts."""
    return (SqrtVal(q, Fraction(q) ** (k - 1))
            + SqrtVal.qpow(q, k + d - 1) * (2 * (d - 1) ** (k - d))
            + SqrtVal.qpow(q, k + d - 2) * (7 * (d + 2) ** (k + 1)))


def n1_bound(q, k, d):
    """Upper bound on points of the hypersurface with a zero coordinate."""
    if not k > d >= 2:
        raise InvalidParams(f"need k > d >= 2, got k={k}, d={d}")
    return _coordinate_section_bound(q, k, d) * (k + 1)


def n2_bound(q, k, d):
    """Upper bound on points with at least two equal coordinates."""
    if not k > d >= 2:
        raise InvalidParams(f"need k > d >= 2, got k={k}, d={d}")
    return _coordinate_section_bound(q, k, d) * Fraction((k + 1) * k, 2)


def useful_points_lower_bound(q, k, d, large_char=False):
    """Exact lower bound on the count of witness points (nonzero,
    pairwise-distinct coordinates).  Positivity certifies nonexistence of
    deep holes for the whole degree-(k+d) family.  The large_char variant
    uses the sharper exponents available when char > d+1."""
    _check_kd(q, k, d, need_length=False)
    cc = Fraction((k + 1) * (k + 2), 2)
    main = SqrtVal(q, Fraction(q) ** k)
    coord = SqrtVal(q, cc * Fraction(q) ** (k - 1))
    if large_char:
        c1 = 2 * (d - 1) ** (k - d + 1)
        t1 = SqrtVal.qpow(q, k + d - 1) * (c1 * (d - 1)) \
            + SqrtVal.qpow(q, k + d - 2) * (c1 * cc)
        c2 = 7 * (d + 2) ** (k + 1)
        t2 = SqrtVal.qpow(q, k + d - 2) * (c2 * (d + 2)) \
            + SqrtVal.qpow(q, k + d - 3) * (c2 * cc)
    else:
        c1 = 2 * (d - 1) ** (k - d)
        t1 = SqrtVal.qpow(q, k + d) * (c1 * (d - 1)) \
            + SqrtVal.qpow(q, k + d - 1) * (c1 * cc)
        c2 = 7 * (d + 2) ** (k + 1)
        t2 = SqrtVal.qpow(q, k + d - 1) * (c2 * (d + 2)) \
            + SqrtVal.qpow(q, k + d - 2) * (c2 * cc)
    value = main - coord - t1 - t2
    return BoundReport(
        {"q": q, "k": k, "d": d, "variant": "large_char" if large_char else "standard"},
        {"main_term": main, "coordinate_term": coord, "gl_term1": t1, "gl_term2": t2},
        value=value)


D1_REMARK = "not covered by Theorem, see paper remarks (d=1: external result handles degree k+1)"
D2_REMARK = "not covered by Theorem, see paper remarks (d=2: constant M_1 has no explicit value)"


def theorem_conditions(q, k, d, epsilon, large_char=False, p=None):
    """Decide the nonexistence-theorem hypotheses exactly.

    Standard variant: q > max{(k+1)^2, 14 d^(2+eps)} and k >= d(2/eps + 1).
    Large-characteristic variant: constant 20, slack (d-1)(2/eps + 1), and
    char(F_q) > d+1.  eps must be a rational strictly inside (0, 1); the
    fractional-power comparison is decided via q^b > c^b * d^(2b+a).
    """
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < 1:
        raise InvalidParams(f"epsilon must satisfy 0 < epsilon < 1, got {epsilon}")
    if q < 2 or k < 1 or d < 1:
        raise InvalidParams(f"need q >= 2, k >= 1, d >= 1; got q={q}, k={k}, d={d}")
    if not q - 1 > k + d:
        raise InvalidParams(f"need q - 1 > k + d, got q={q}, k+d={k + d}")
    params = {"q": q, "k": k, "d": d, "epsilon": epsilon,
              "variant": "large_char" if large_char else "standard", "p": p}
    if d < 3:
        return BoundReport(params, {}, verdict=NOT_APPLICABLE,
                           reasons=[D1_REMARK if d == 1 else D2_REMARK])
    a, b = epsilon.numerator, epsilon.denominator
    c = 20 if large_char else 14
    slack = (d - 1) if large_char else d
    checks = {
        "k > d": k > d,
        "q > (k+1)^2": q > (k + 1) ** 2,
        f"q > {c}*d^(2+eps)": q ** b > c ** b * d ** (2 * b + a),
        ("k >= (d-1)*(2/eps+1)" if large_char else "k >= d*(2/eps+1)"):
            k * a >= slack * (2 * b + a),
    }
    if large_char:
        if p is None:
            raise InvalidParams("large_char variant needs the characteristic p")
        checks["char(F_q) > d+1"] = p > d + 1
    failed = [name for name, ok in checks.items() if not ok]
    terms = {
        "kk_threshold": SqrtVal(q, (k + 1) ** 2),
        "q_pow_b": SqrtVal(q, q ** b),
        "cd_pow": SqrtVal(q, c ** b * d ** (2 * b + a)),
    }
    return BoundReport(params, terms,
                       verdict=CONDITIONS_MET if not failed else CONDITIONS_NOT_MET,
                       reasons=failed, checks=checks)
