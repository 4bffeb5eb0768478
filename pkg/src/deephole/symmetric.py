"""The leading-remainder coefficient of f modulo (T-X_1)...(T-X_{k+1}),
expressed in the elementary-symmetric basis.

A word generated by f = T^(k+d) + f_{d-1} T^(k+d-1) + ... + f_0 T^k fails
to be a deep hole exactly when this coefficient vanishes at a point with
nonzero, pairwise-distinct coordinates.  The coefficient is a symmetric
polynomial of degree d in k+1 variables; writing Y_i for the i-th
elementary symmetric polynomial it equals a fixed weight-d polynomial in
Y_1..Y_d (independent of k), which this module constructs two ways:

* ``h_basis_recursive`` unrolls the top-coefficient recursion
  B_d = Y_1 B_{d-1} - Y_2 B_{d-2} + ... + (-1)^(d-1) Y_d, with B_0 = 1;
* ``h_basis_explicit`` enumerates weighted compositions
  i_1 + 2 i_2 + ... + d i_d = d with signed multinomial coefficients
  (computed over Z, then reduced mod p, so small characteristics are safe).

Pointwise evaluation (``eval_hf``) never expands symbolically: it builds
Q_x = prod(T - x_i) and takes the T^k coefficient of the exact remainder.
That is the performance-critical kernel behind witness search; the
symbolic expansion (``expand_to_vars``) exists as a test oracle with a
term cap.  Gradients come in two independently-derived flavours
(``grad_hf`` via the chain rule through the Y-basis, ``grad_hf_horner``
via the lower-triangular derivative recurrence), cross-checked in tests
against the formal derivative of the expansion.
"""

from math import factorial

from .errors import ArityMismatch, CapExceeded, FieldMismatch, TooManyVariables
from .poly import (MVPoly, UPoly, _divmod_reps, _rep, elementary_symmetric,
                   elementary_symmetric_values, mv_partial)

EXPAND_TERM_CAP = 200_000


class TopPoly:
    """Coefficient vector (f_0, ..., f_{d-1}) of f = T^(k+d) + sum f_j T^(k+j).

    d = 0 is the bare monomial T^k, accepted everywhere (its associated
    polynomial is the constant 1).  The code-level constraints k > d and
    k+d < q-1 are enforced only where a word is actually formed, not here:
    the geometry is well-defined without them.
    """

    __slots__ = ("field", "k", "d", "lows")

    def __init__(self, field, k, d, lows=()):
        if not (isinstance(k, int) and isinstance(d, int) and k >= 1 and d >= 0):
            raise ValueError(f"need k >= 1 and d >= 0, got k={k}, d={d}")
        if len(lows) != d:
            raise ValueError(f"expected {d} low coefficients, got {len(lows)}")
        self.field = field
        self.k = k
        self.d = d
        self.lows = tuple(_rep(field, c) for c in lows)

    def full_coeffs(self):
        """Little-endian rep list of T^(k+d) + sum f_j T^(k+j), degree k+d."""
        return [0] * self.k + list(self.lows) + [1]

    def as_upoly(self):
        return UPoly(self.field, self.full_coeffs())

    def is_monomial(self):
        return all(c == 0 for c in self.lows)

    def __eq__(self, other):
        return (isinstance(other, TopPoly)
                and (self.field, self.k, self.d, self.lows)
                == (other.field, other.k, other.d, other.lows))

    def __hash__(self):
        return hash((self.field, self.k, self.d, self.lows))

    def __repr__(self):
        return f"TopPoly(k={self.k}, d={self.d}, lows={list(self.lows)})"


class SymPoly:
    """Polynomial in Y_1..Y_d, stored as weighted exponent tuples.

    A tuple (i_1, ..., i_d) carries weight i_1 + 2 i_2 + ... + d i_d; every
    stored tuple must have weight <= d, so composing with the elementary
    symmetric polynomials yields degree <= d in the X variables.
    """

    __slots__ = ("field", "d", "terms")

    def __init__(self, field, d, terms=None):
        self.field = field
        self.d = d
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != d:
                raise ValueError(f"tuple {exps} has length != d = {d}")
            if self.weight(exps) > d:
                raise ValueError(f"tuple {exps} exceeds weight bound {d}")
            c = _rep(field, c)
            if c:
                clean[exps] = c
        self.terms = clean

    @staticmethod
    def weight(exps):
        return sum((j + 1) * e for j, e in enumerate(exps))

    @classmethod
    def constant(cls, field, d, c=1):
        return cls(field, d, {(0,) * d: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, SymPoly) and self.field == other.field
                and self.d == other.d and self.terms == other.terms)

    def __add__(self, other):
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = f.add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SymPoly(f, self.d, out)

    def scale(self, c):
        f = self.field
        c = _rep(f, c)
        return SymPoly(f, self.d, {e: f.mul(c, v) for e, v in self.terms.items()})

    def shift(self, i):
        """Multiply by Y_i (1-based); raises if any term would exceed weight d."""
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i - 1] += 1
            out[tuple(ne)] = c
        return SymPoly(self.field, self.d, out)

    def partial(self, i):
        """Formal derivative with respect to Y_i (1-based)."""
        f = self.field
        out = {}
        for e, c in self.terms.items():
            m = e[i - 1]
            if m == 0 or m % f.p == 0:
                continue
            ne = list(e)
            ne[i - 1] = m - 1
            ne = tuple(ne)
            v = f.add(out.get(ne, 0), f.mul(c, m % f.p))
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return SymPoly(f, self.d, out)

    def eval(self, ys):
        """Value at (y_1, ..., y_d) given as reps; returns a rep."""
        f = self.field
        if len(ys) != self.d:
            raise ArityMismatch(f"need {self.d} values, got {len(ys)}")
        acc = 0
        for e, c in self.terms.items():
            t = c
            for y, m in zip(ys, e):
                if m:
                    t = f.mul(t, f.pow(y, m))
            acc = f.add(acc, t)
        return acc

    def embed(self, new_d):
        """Re-index into a wider Y_1..Y_{new_d} alphabet (weights unchanged)."""
        if new_d < self.d:
            raise ValueError("cannot shrink the weight bound")
        pad = (0,) * (new_d - self.d)
        return SymPoly(self.field, new_d, {e + pad: c for e, c in self.terms.items()})

    def constant_coeff(self):
        return self.terms.get((0,) * self.d, 0)

    def __repr__(self):
        return f"SymPoly(d={self.d}, {len(self.terms)} terms over {self.field!r})"


_TOWER_CACHE = {}


def h_tower(d, field):
    """The cached family H_0..H_d, each as a SymPoly of width d.

    H_0 = 1 and H_j = Y_1 H_{j-1} - Y_2 H_{j-2} + ... + (-1)^(j-1) Y_j; all
    entries are weight-homogeneous (H_j has pure weight j).
    """
    key = (d, field)
    tower = _TOWER_CACHE.get(key)
    if tower is None:
        tower = [SymPoly.constant(field, d, 1)]
        for j in range(1, d + 1):
            acc = SymPoly(field, d)
            for i in range(1, j + 1):
                piece = tower[j - i].shift(i)
                if i % 2 == 0:
                    piece = piece.scale(field.neg(1))
                acc = acc + piece
            tower.append(acc)
        tower = tuple(tower)
        _TOWER_CACHE[key] = tower
    return tower


def h_basis_recursive(d, field):
    """Weight-d basis element built by unrolling the recursion."""
    return h_tower(d, field)[d]


def _compositions(d):
    """All (i_1, ..., i_d) with i_1 + 2 i_2 + ... + d i_d = d."""
    def rec(j, remaining, prefix):
        if j == d:
            if remaining == 0:
                yield tuple(prefix)
            return
        step = j + 1
        for c in range(remaining // step + 1):
            prefix.append(c)
            yield from rec(j + 1, remaining - step * c, prefix)
            prefix.pop()
    if d == 0:
        yield ()
        return
    yield from rec(0, d, [])


def h_basis_explicit(d, field):
    """Weight-d basis element by direct enumeration of weighted compositions.

    The coefficient of Y_1^{i_1}...Y_d^{i_d} is the multinomial
    (i_1+...+i_d)! / (i_1!...i_d!) with sign (-1)^(i_2 + i_4 + ...),
    computed over the integers and only then reduced mod p.
    """
    terms = {}
    for comp in _compositions(d):
        total = sum(comp)
        coeff = factorial(total)
        for c in comp:
            coeff //= factorial(c)
        delta = sum(c for j, c in enumerate(comp) if (j + 1) % 2 == 0)
        if delta % 2:
            coeff = -coeff
        terms[comp] = coeff % field.p
    return SymPoly(field, d, terms)


def g_f(f, field=None):
    """H_d + f_{d-1} H_{d-1} + ... + f_1 H_1 + f_0, in the Y-basis.

    Requires d <= k+1: beyond that the Y-basis expression in k+1 variables
    truncates differently and only the remainder route stays valid.
    """
    if field is None:
        field = f.field
    elif field != f.field:
        raise FieldMismatch(f"{field!r} vs {f.field!r}")
    if f.d > f.k + 1:
        raise ValueError(f"Y-basis form needs d <= k+1, got d={f.d}, k={f.k}")
    tower = h_tower(f.d, field)
    acc = tower[f.d]
    for j, c in enumerate(f.lows):
        if c:
            acc = acc + tower[j].scale(c)
    return acc


def expand_to_vars(G, nvars, term_cap=EXPAND_TERM_CAP):
    """Substitute the elementary symmetric polynomials of nvars variables
    for Y_1..Y_d.  Test-oracle only; aborts once the X-expansion exceeds
    the term cap."""
    if nvars < G.d:
        raise ValueError(f"need nvars >= {G.d}, got {nvars}")
    field = G.field
    pis = [elementary_symmetric(i, nvars, field) for i in range(G.d + 1)]
    acc = MVPoly(field, nvars)
    for exps, c in G.terms.items():
        prod = MVPoly.constant(field, nvars, c)
        for i, e in enumerate(exps, start=1):
            for _ in range(e):
                prod = prod * pis[i]
                if len(prod.terms) > term_cap:
                    raise TooManyVariables(f"expansion exceeds {term_cap} terms")
        acc = acc + prod
        if len(acc.terms) > term_cap:
            raise TooManyVariables(f"expansion exceeds {term_cap} terms")
    return acc


def _point_reps(field, x):
    return [_rep(field, v) for v in x]


def eval_hf(f, x):
    """Value at x of the T^k remainder coefficient, without expansion:
    divide f by Q_x = prod(T - x_i) and read off the T^k coefficient."""
    field = f.field
    if len(x) != f.k + 1:
        raise ArityMismatch(f"need a point of length {f.k + 1}, got {len(x)}")
    xs = _point_reps(field, x)
    q_coeffs = [1]
    for xi in xs:
        nxi = field.neg(xi)
        nxt = [0] * (len(q_coeffs) + 1)
        for j, c in enumerate(q_coeffs):
            nxt[j + 1] = field.add(nxt[j + 1], c)
            nxt[j] = field.add(nxt[j], field.mul(nxi, c))
        q_coeffs = nxt
    _, rem = _divmod_reps(f.full_coeffs(), q_coeffs, field)
    return rem[f.k] if len(rem) > f.k else 0


def h_values_at(pis, d, field):
    """H_0(x)..H_d(x) from the elementary symmetric values Pi_0..Pi_d at x."""
    h = [1] + [0] * d
    for j in range(1, d + 1):
        acc = 0
        for i in range(1, j + 1):
            t = field.mul(pis[i], h[j - i])
            acc = field.sub(acc, t) if i % 2 == 0 else field.add(acc, t)
        h[j] = acc
    return h


def grad_hf(f, x):
    """Gradient at x by the chain rule: the Y-gradient of the basis
    combination, evaluated at (Pi_1(x), ..., Pi_d(x)), times the Jacobian
    of the elementary symmetric polynomials."""
    field = f.field
    if len(x) != f.k + 1:
        raise ArityMismatch(f"need a point of length {f.k + 1}, got {len(x)}")
    xs = _point_reps(field, x)
    d = f.d
    pis = elementary_symmetric_values(xs, d, field)
    G = g_f(f)
    gy = [G.partial(i).eval(pis[1:]) for i in range(1, d + 1)]
    grad = []
    for xj in xs:
        acc = 0
        for i in range(1, d + 1):
            if gy[i - 1] == 0:
                continue
            # dPi_i/dX_j = Pi_{i-1} - X_j Pi_{i-2} + ... + (-1)^(i-1) X_j^(i-1)
            a_ij = 0
            xp = 1
            for m in range(i):
                t = field.mul(xp, pis[i - 1 - m])
                a_ij = field.sub(a_ij, t) if m % 2 else field.add(a_ij, t)
                xp = field.mul(xp, xj)
            acc = field.add(acc, field.mul(gy[i - 1], a_ij))
        grad.append(acc)
    return grad


def grad_hf_horner(f, x):
    """Gradient at x by the derivative recurrence
    dH_j/dX_i = H_{j-1} + H_{j-2} X_i + ... + X_i^(j-1),
    folded over the coefficients of f.  Independent of grad_hf."""
    field = f.field
    if len(x) != f.k + 1:
        raise ArityMismatch(f"need a point of length {f.k + 1}, got {len(x)}")
    if f.d > f.k + 1:
        raise ValueError(f"recurrence route needs d <= k+1, got d={f.d}, k={f.k}")
    xs = _point_reps(field, x)
    d = f.d
    pis = elementary_symmetric_values(xs, d, field)
    h = h_values_at(pis, d, field)
    # c_m = sum_{j=m}^{d} f_j H_{j-m}(x)  (with f_d = 1)
    cs = []
    for m in range(1, d + 1):
        c = h[d - m]
        for j in range(m, d):
            if f.lows[j]:
                c = field.add(c, field.mul(f.lows[j], h[j - m]))
        cs.append(c)
    grad = []
    for xj in xs:
        acc = 0
        for m in range(d, 0, -1):
            acc = field.add(field.mul(acc, xj), cs[m - 1])
        grad.append(acc)
    return grad


def derivative_recurrence_holds(j, nvars, field):
    """Exact MVPoly check of dH_j/dX_i = sum_m H_{j-m} X_i^(m-1), all i."""
    hs = [expand_to_vars(h_tower(t, field)[t], nvars) for t in range(j + 1)]
    for i in range(nvars):
        lhs = mv_partial(hs[j], i)
        rhs = MVPoly(field, nvars)
        xi = MVPoly.variable(field, nvars, i)
        xp = MVPoly.constant(field, nvars, 1)
        for m in range(1, j + 1):
            rhs = rhs + hs[j - m] * xp
            xp = xp * xi
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# symbolic matrix identities (small variable counts only)
# ---------------------------------------------------------------------------

def _mv_matmul(A, B, field, nvars):
    n, m, r = len(A), len(B), len(B[0])
    out = [[MVPoly(field, nvars) for _ in range(r)] for _ in range(n)]
    for i in range(n):
        for t in range(m):
            if not A[i][t]:
                continue
            for j in range(r):
                if B[t][j]:
                    out[i][j] = out[i][j] + A[i][t] * B[t][j]
    return out


def _mv_det(M, field, nvars):
    n = len(M)
    memo = {}

    def rec(row, cols):
        if row == n:
            return MVPoly.constant(field, nvars, 1)
        key = cols
        got = memo.get(key)
        if got is not None:
            return got
        acc = MVPoly(field, nvars)
        for idx, c in enumerate(cols):
            entry = M[row][c]
            if not entry:
                continue
            minor = rec(row + 1, cols[:idx] + cols[idx + 1:])
            term = entry * minor
            acc = acc + (term if idx % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return rec(0, tuple(range(n)))


def jacobian_identities(kplus1, field):
    """Verify, as exact polynomial identities in kplus1 <= 6 variables:

    a. the Jacobian of (Pi_1..Pi_{k+1}) factors as the signed
       lower-triangular Pi-matrix times the Vandermonde matrix;
    b. its determinant is (-1)^(k(k+1)/2) prod_{i<j} (X_i - X_j);
    c. the Jacobian of (H_1..H_{k+1}) factors as the (unsigned)
       lower-triangular H-matrix times the same Vandermonde matrix;
    d. the signed Pi-matrix and the signed H-matrix are mutually inverse.

    Returns a dict of named booleans plus "all_pass".
    """
    if not 2 <= kplus1 <= 6:
        raise CapExceeded("symbolic identity checks are capped at kplus1 <= 6")
    n = kplus1
    k = n - 1
    pis = [elementary_symmetric(i, n, field) for i in range(n + 1)]
    hs = [expand_to_vars(h_tower(j, field)[j], n) for j in range(n + 1)]
    zero = MVPoly(field, n)
    one = MVPoly.constant(field, n, 1)

    def signed(P, m):
        return P.scale(field.neg(1)) if (m - 1) % 2 else P

    # 1-indexed matrices as nested lists
    vandermonde = [[MVPoly(field, n, {tuple(m - 1 if t == j else 0 for t in range(n)): 1})
                    for j in range(n)] for m in range(1, n + 1)]
    B = [[signed(pis[i - m], m) if m <= i else zero for m in range(1, n + 1)]
         for i in range(1, n + 1)]
    L = [[hs[i - m] if m <= i else zero for m in range(1, n + 1)]
         for i in range(1, n + 1)]
    Binv = [[signed(hs[i - m], m) if m <= i else zero for m in range(1, n + 1)]
            for i in range(1, n + 1)]

    jac_pi = [[mv_partial(pis[i], j) for j in range(n)] for i in range(1, n + 1)]
    jac_h = [[mv_partial(hs[i], j) for j in range(n)] for i in range(1, n + 1)]

    results = {}
    results["jacobian_factorization"] = jac_pi == _mv_matmul(B, vandermonde, field, n)

    # det(B) = (-1)^(k(k+1)/2) and det(Vandermonde) = prod_{i<j}(X_j - X_i),
    # so the Jacobian determinant collapses to prod_{i<j}(X_i - X_j).
    det = _mv_det(jac_pi, field, n)
    expect = one
    for i in range(n):
        for j in range(i + 1, n):
            xi = MVPoly.variable(field, n, i)
            xj = MVPoly.variable(field, n, j)
            expect = expect * (xi - xj)
    results["vandermonde_determinant"] = det == expect

    results["h_jacobian_factorization"] = jac_h == _mv_matmul(L, vandermonde, field, n)

    prod = _mv_matmul(B, Binv, field, n)
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    results["b_times_b_inverse"] = prod == ident

    results["all_pass"] = all(results.values())
    return results
