import random

import pytest

from deephole import gf
from deephole.errors import ArityMismatch, IndexOutOfRange, NonMonicDivisor, ZeroPolynomial
from deephole.poly import (MVPoly, UPoly, elementary_symmetric,
                           elementary_symmetric_values, mv_eval, mv_partial,
                           uni_distinct_roots, uni_divmod, uni_rem)

F5 = gf.make_field(5)
F7 = gf.make_field(7)


def test_uni_rem_examples():
    # T^3 mod (T - 2) over F_7 is the constant 2^3 = 1
    r = uni_rem(UPoly(F7, (0, 0, 0, 1)), UPoly(F7, (5, 1)))
    assert r.coeffs == (1,)
    # degree below divisor: unchanged
    f = UPoly(F7, (3, 1))
    assert uni_rem(f, UPoly(F7, (0, 0, 1))) == f
    # exact root divides
    assert not uni_rem(UPoly(F5, (4, 0, 1)), UPoly(F5, (4, 1)))


def test_uni_rem_requires_monic():
    with pytest.raises(NonMonicDivisor):
        uni_rem(UPoly(F7, (1, 1, 1)), UPoly(F7, (1, 2)))
    with pytest.raises(NonMonicDivisor):
        uni_rem(UPoly(F7, (1, 1)), UPoly(F7, (1,)))   # degree 0 divisor


def test_long_division_identity_seeded():
    rng = random.Random(100)
    for _ in range(100):
        field = random.Random(rng.random()).choice([F5, F7, gf.make_field(3, 2)])
        f = UPoly(field, [rng.randrange(field.q) for _ in range(rng.randint(0, 9))])
        qdeg = rng.randint(1, 5)
        qc = [rng.randrange(field.q) for _ in range(qdeg)] + [1]
        Q = UPoly(field, qc)
        quot, rem = uni_divmod(f, Q)
        assert rem.degree < Q.degree
        assert quot * Q + rem == f


def test_uni_distinct_roots_examples():
    roots = uni_distinct_roots(UPoly(F7, (6, 0, 1)))    # T^2 - 1
    assert {r.rep for r in roots} == {1, 6}
    # T^p - T has every element as a root
    f = UPoly(F5, (0, 4, 0, 0, 0, 1))
    assert {r.rep for r in uni_distinct_roots(f)} == set(range(5))
    assert uni_distinct_roots(UPoly(F7, (1, 0, 1))) == set()   # T^2 + 1, -1 non-residue
    with pytest.raises(ZeroPolynomial):
        uni_distinct_roots(UPoly.zero(F7))


def test_mv_eval_examples():
    pi1 = elementary_symmetric(1, 3, F7)
    assert mv_eval(pi1, (1, 2, 3)) == 6
    assert mv_eval(MVPoly(F7, 3), (1, 2, 3)) == 0
    pi2 = elementary_symmetric(2, 3, F7)
    assert mv_eval(pi2, (1, 2, 3)) == 4      # 2 + 3 + 6 = 11 = 4 mod 7
    with pytest.raises(ArityMismatch):
        mv_eval(pi1, (1, 2))


def test_mv_partial_examples():
    F2 = gf.make_field(2)
    sq = MVPoly(F2, 1, {(2,): 1})
    assert not mv_partial(sq, 0)             # char 2 kills 2x
    xy = MVPoly(F7, 2, {(1, 1): 1})
    assert mv_partial(xy, 0) == MVPoly(F7, 2, {(0, 1): 1})


def test_partial_of_elementary_symmetric_formula():
    # dPi_i/dX_j = Pi_{i-1} - X_j Pi_{i-2} + X_j^2 Pi_{i-3} - ...
    for nvars in range(2, 7):
        field = F7
        pis = [elementary_symmetric(i, nvars, field) for i in range(nvars + 1)]
        for i in range(1, nvars + 1):
            for j in range(nvars):
                xj = MVPoly.variable(field, nvars, j)
                expect = MVPoly(field, nvars)
                xp = MVPoly.constant(field, nvars, 1)
                for m in range(i):
                    term = xp * pis[i - 1 - m]
                    expect = expect + (term if m % 2 == 0 else -term)
                    xp = xp * xj
                assert mv_partial(pis[i], j) == expect


def test_elementary_symmetric_examples():
    assert elementary_symmetric(0, 3, F7) == MVPoly.constant(F7, 3, 1)
    assert elementary_symmetric(3, 3, F7) == MVPoly(F7, 3, {(1, 1, 1): 1})
    assert len(elementary_symmetric(2, 3, F7).terms) == 3
    from math import comb
    for n in range(1, 7):
        for i in range(n + 1):
            assert len(elementary_symmetric(i, n, F7).terms) == comb(n, i)
    with pytest.raises(IndexOutOfRange):
        elementary_symmetric(4, 3, F7)


def test_elementary_symmetric_values_match_symbolic():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 6)
        xs = [rng.randrange(7) for _ in range(n)]
        vals = elementary_symmetric_values(xs, n, F7)
        for i in range(n + 1):
            assert vals[i] == mv_eval(elementary_symmetric(i, n, F7), xs)


def test_mv_eval_is_multiplicative_seeded():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 4)
        def rand_poly():
            return MVPoly(F7, n, {tuple(rng.randrange(3) for _ in range(n)): rng.randrange(7)
                                  for _ in range(rng.randint(1, 5))})
        P, R = rand_poly(), rand_poly()
        x = [rng.randrange(7) for _ in range(n)]
        assert mv_eval(P * R, x) == F7.mul(mv_eval(P, x), mv_eval(R, x))
        assert mv_eval(P + R, x) == F7.add(mv_eval(P, x), mv_eval(R, x))
