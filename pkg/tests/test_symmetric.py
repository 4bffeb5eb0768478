import random

import pytest

from deephole import gf
from deephole.errors import ArityMismatch, CapExceeded, TooManyVariables
from deephole.poly import mv_eval, mv_partial
from deephole.symmetric import (SymPoly, TopPoly, derivative_recurrence_holds,
                                eval_hf, expand_to_vars, g_f, grad_hf,
                                grad_hf_horner, h_basis_explicit,
                                h_basis_recursive, jacobian_identities)

F7 = gf.make_field(7)


def test_recursive_basis_small_cases():
    assert h_basis_recursive(1, F7).terms == {(1,): 1}
    assert h_basis_recursive(2, F7).terms == {(2, 0): 1, (0, 1): 6}
    assert h_basis_recursive(3, F7).terms == {(3, 0, 0): 1, (1, 1, 0): 5, (0, 0, 1): 1}


def test_explicit_basis_small_cases():
    got = h_basis_explicit(2, F7).terms
    assert got == {(2, 0): 1, (0, 1): 6}     # +Y1^2, -Y2
    d3 = h_basis_explicit(3, F7).terms
    assert d3[(1, 1, 0)] == 5                # -2 mod 7
    for d in range(1, 9):
        pure = (0,) * (d - 1) + (1,)
        coeff = h_basis_explicit(d, F7).terms[pure]
        assert coeff == (1 if d % 2 else F7.neg(1))


def test_basis_constructions_agree_all_small_fields():
    for p in (2, 3, 5, 7, 13):
        field = gf.make_field(p)
        for d in range(0, 9):
            assert h_basis_recursive(d, field) == h_basis_explicit(d, field)


def test_basis_weight_homogeneity():
    for d in range(1, 9):
        sp = h_basis_recursive(d, F7)
        assert all(SymPoly.weight(e) == d for e in sp.terms)
        expanded = expand_to_vars(sp, d)
        assert expanded.is_homogeneous(d)


def test_g_f_examples():
    f = TopPoly(F7, 3, 2, (0, 0))
    assert g_f(f) == h_basis_recursive(2, F7)
    # d=2 with lows (e, c): Y1^2 - Y2 + c Y1 + e
    f = TopPoly(F7, 3, 2, (4, 3))
    assert g_f(f).terms == {(2, 0): 1, (0, 1): 6, (1, 0): 3, (0, 0): 4}
    assert g_f(f).constant_coeff() == 4


def test_expand_examples():
    y1 = SymPoly(F7, 1, {(1,): 1})
    assert expand_to_vars(y1, 3).terms == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    h2 = h_basis_recursive(2, F7)
    assert expand_to_vars(h2, 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    with pytest.raises(TooManyVariables):
        expand_to_vars(h_basis_recursive(4, F7), 6, term_cap=3)


def test_eval_hf_examples():
    f = TopPoly(F7, 2, 2, (0, 0))
    assert eval_hf(f, (1, 2, 3)) == 4        # (1+2+3)^2 - (2+3+6) = 25 mod 7
    f1 = TopPoly(F7, 3, 1, (0,))
    for x in [(1, 2, 3, 4), (2, 2, 5, 0)]:
        assert eval_hf(f1, x) == sum(x) % 7
    with pytest.raises(ArityMismatch):
        eval_hf(f, (1, 2))
    # d=0: the constant 1
    assert eval_hf(TopPoly(F7, 3, 0, ()), (0, 1, 2, 3)) == 1


def test_eval_routes_agree_seeded():
    rng = random.Random(0x5EED)
    fields = [F7, gf.field_from_order(9), gf.make_field(13), gf.field_from_order(25)]
    for field in fields:
        for k in range(2, 6):               # k+1 up to 6
            for d in range(1, min(k, 5) + 1):
                f = TopPoly(field, k, d, [rng.randrange(field.q) for _ in range(d)])
                expanded = expand_to_vars(g_f(f), k + 1)
                for _ in range(20):
                    x = [rng.randrange(field.q) for _ in range(k + 1)]
                    assert eval_hf(f, x) == mv_eval(expanded, x)


def test_symmetry_under_permutation_seeded():
    rng = random.Random(123)
    f = TopPoly(F7, 4, 3, (2, 0, 5))
    for _ in range(50):
        x = [rng.randrange(7) for _ in range(5)]
        shuffled = x[:]
        rng.shuffle(shuffled)
        assert eval_hf(f, x) == eval_hf(f, shuffled)


def test_gradient_examples():
    # d=1: the all-ones vector
    f = TopPoly(F7, 3, 1, (2,))
    assert grad_hf(f, (1, 5, 0, 3)) == [1, 1, 1, 1]
    # d=2 monomial: dH_2/dX_j = Pi_1 + x_j
    f2 = TopPoly(F7, 3, 2, (0, 0))
    x = (1, 2, 3, 5)
    pi1 = sum(x) % 7
    assert grad_hf(f2, x) == [(pi1 + xj) % 7 for xj in x]
    # d=0: constant polynomial, zero gradient
    assert grad_hf(TopPoly(F7, 3, 0, ()), x) == [0, 0, 0, 0]


def test_gradient_three_routes_agree_seeded():
    rng = random.Random(42)
    fields = [F7, gf.field_from_order(9), gf.field_from_order(25)]
    for field in fields:
        for k in range(2, 6):
            for d in range(1, min(k, 5) + 1):
                f = TopPoly(field, k, d, [rng.randrange(field.q) for _ in range(d)])
                expanded = expand_to_vars(g_f(f), k + 1)
                partials = [mv_partial(expanded, j) for j in range(k + 1)]
                for _ in range(10):
                    x = [rng.randrange(field.q) for _ in range(k + 1)]
                    chain = grad_hf(f, x)
                    horner = grad_hf_horner(f, x)
                    formal = [mv_eval(pj, x) for pj in partials]
                    assert chain == horner == formal


def test_jacobian_identities_all_sizes():
    for kplus1 in range(2, 7):
        report = jacobian_identities(kplus1, F7)
        assert report["all_pass"], (kplus1, report)
    with pytest.raises(CapExceeded):
        jacobian_identities(7, F7)


def test_jacobian_determinant_numeric_cross_check():
    # brute-force 3x3 determinant of the symmetric-function Jacobian at (1,2,3)
    from deephole.poly import elementary_symmetric
    pis = [elementary_symmetric(i, 3, F7) for i in range(4)]
    x = (1, 2, 3)
    J = [[mv_eval(mv_partial(pis[i], j), x) for j in range(3)] for i in (1, 2, 3)]
    det = 0
    import itertools
    for perm in itertools.permutations(range(3)):
        sign = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if perm[a] > perm[b]:
                    sign = -sign
        term = 1
        for row, col in enumerate(perm):
            term = F7.mul(term, J[row][col])
        det = F7.add(det, term if sign > 0 else F7.neg(term))
    prod = 1
    for i in range(3):
        for j in range(i + 1, 3):
            prod = F7.mul(prod, F7.sub(x[i], x[j]))
    assert det == prod                      # = (1-2)(1-3)(2-3) = -2 mod 7
    # degenerate point: repeated coordinate kills the determinant
    xdeg = (2, 2, 5)
    Jdeg = [[mv_eval(mv_partial(pis[i], j), xdeg) for j in range(3)] for i in (1, 2, 3)]
    assert Jdeg[0] == [1, 1, 1]
    det_deg = F7.sub(F7.mul(Jdeg[1][0], Jdeg[2][1]), F7.mul(Jdeg[1][1], Jdeg[2][0]))
    # columns 0 and 1 coincide when x_1 = x_2
    assert [row[0] for row in Jdeg] == [row[1] for row in Jdeg]


def test_derivative_recurrence_exact():
    for nvars in range(2, 7):
        for j in range(2, nvars + 1):
            assert derivative_recurrence_holds(j, nvars, F7)


def test_toppoly_validation():
    with pytest.raises(ValueError):
        TopPoly(F7, 0, 0, ())
    with pytest.raises(ValueError):
        TopPoly(F7, 3, 2, (1,))
    f = TopPoly(F7, 3, 2, (1, 2))
    assert f.full_coeffs() == [0, 0, 0, 1, 2, 1]
    assert not f.is_monomial()
    assert TopPoly(F7, 3, 2, (0, 0)).is_monomial()
