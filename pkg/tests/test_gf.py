import pytest

from deephole import gf
from deephole.errors import DivisionByZero, FieldMismatch, NonPrime, NotIrreducible, TooLarge

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 6)]


def test_make_field_examples():
    f7 = gf.make_field(7, 1)
    assert f7.q == 7 and f7.modulus is None
    f4 = gf.make_field(2, 2, (1, 1, 1))
    assert f4.q == 4
    with pytest.raises(NonPrime):
        gf.make_field(4, 1)


def test_modulus_validation():
    # T^2 + T has the root 0 over F_2
    with pytest.raises(NotIrreducible):
        gf.make_field(2, 2, (0, 1, 1))
    with pytest.raises(TooLarge):
        gf.make_field(2, 21)


def test_field_ops_examples():
    f7 = gf.make_field(7)
    assert f7.add(3, 5) == 1
    assert f7.inv(2) == 4
    f4 = gf.make_field(2, 2)
    alpha = f4.elem(2)
    assert (alpha * alpha).rep == 3          # alpha^2 = alpha + 1
    with pytest.raises(DivisionByZero):
        f4.inv(0)
    with pytest.raises(FieldMismatch):
        f7.elem(1) + f4.elem(1)


def test_trace_examples():
    f4 = gf.make_field(2, 2)
    assert gf.trace(f4.elem(1)).rep == 0     # 1 + 1 in char 2
    assert gf.trace(f4.elem(2)).rep == 1     # alpha + alpha^2 = 1
    f7 = gf.make_field(7)
    assert gf.trace(f7.elem(3)).rep == 3     # identity when s = 1


def test_find_irreducible_examples():
    assert gf.find_irreducible(2, 2) == (1, 1, 1)   # T^2+T+1
    assert gf.find_irreducible(3, 2) == (1, 0, 1)   # T^2+1
    assert gf.find_irreducible(5, 2) == (2, 0, 1)   # T^2+2


def test_find_irreducible_is_irreducible():
    for p, s in [(2, 3), (2, 4), (3, 3), (7, 2), (2, 8)]:
        mod = gf.find_irreducible(p, s)
        assert len(mod) == s + 1 and mod[-1] == 1
        assert gf.is_irreducible(list(mod), p)


def test_units_examples():
    f5 = gf.make_field(5)
    assert [u.rep for u in gf.units(f5)] == [1, 2, 3, 4]
    f4 = gf.make_field(2, 2)
    assert [u.rep for u in gf.units(f4)] == [1, 2, 3]
    for p, s in SMALL_FIELDS:
        f = gf.make_field(p, s)
        us = gf.units(f)
        assert len(us) == f.q - 1
        assert len({u.rep for u in us}) == f.q - 1
        assert all(u.rep != 0 for u in us)


@pytest.mark.parametrize("p,s", [(p, s) for p, s in SMALL_FIELDS if p ** s <= 64])
def test_field_axioms_exhaustive(p, s):
    f = gf.make_field(p, s)
    q = f.q
    for a in range(q):
        assert f.pow(a, q) == a              # Frobenius/Fermat
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.sub(f.add(a, b), b) == a
            for c in range(min(q, 8)):
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("p,s", [(p, s) for p, s in SMALL_FIELDS if p ** s <= 64])
def test_trace_linearity_and_kernel_size(p, s):
    f = gf.make_field(p, s)
    q = f.q
    for a in range(q):
        for b in range(q):
            assert f.trace(f.add(a, b)) == f.add(f.trace(a), f.trace(b))
    zeros = sum(1 for a in range(q) if f.trace(a) == 0)
    assert zeros == p ** (s - 1)
    assert {f.trace(a) for a in range(q)} == set(range(p))   # surjective onto F_p


def test_encode_decode_roundtrip():
    f = gf.make_field(3, 3)
    for rep in range(f.q):
        assert f.encode(f.decode(rep)) == rep


def test_field_from_order():
    assert gf.field_from_order(9).p == 3
    assert gf.field_from_order(25).modulus == (2, 0, 1)
    with pytest.raises(NonPrime):
        gf.field_from_order(12)
