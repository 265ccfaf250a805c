import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiprimary.errors import InvalidArity, InvalidOrder, InvalidRing
from semiprimary.rings import (make_boolean, make_product, make_table_ring, make_trunc_poly,
                               make_zn, nilradical, units, zerodivisors)


def test_zn_basics():
    R = make_zn(12)
    assert R.order == 12
    assert R.times(2, 3) == 6 and R.plus(6, 6) == 0
    assert make_zn(36).order == 36
    assert make_zn(2).names == ("0", "1")


def test_zn_matches_modular_arithmetic():
    for n in (2, 7, 12, 36):
        R = make_zn(n)
        a = np.arange(n)
        assert (R.add_table == (a[:, None] + a[None, :]) % n).all()
        assert (R.mul_table == (a[:, None] * a[None, :]) % n).all()


def test_zn_rejects_small_order():
    with pytest.raises(InvalidOrder):
        make_zn(1)


def test_product_arithmetic():
    R = make_product([make_zn(2), make_zn(4)])
    assert R.order == 8
    assert R.times((1, 2), (1, 3)) == R.element((1, 2))
    assert R.name(R.element((1, 3))) == "(1,3)"
    assert R.components(R.element((1, 3))) == (1, 3)


def test_product_projection_recovers_factors():
    F1, F2 = make_zn(3), make_zn(4)
    R = make_product([F1, F2])
    for x in range(R.order):
        for y in range(R.order):
            (a1, a2), (b1, b2) = R.components(x), R.components(y)
            assert R.components(R.times(x, y)) == (F1.times(a1, b1), F2.times(a2, b2))
            assert R.components(R.plus(x, y)) == (F1.plus(a1, b1), F2.plus(a2, b2))


def test_product_needs_two_factors():
    with pytest.raises(InvalidArity):
        make_product([make_zn(2)])


def test_boolean_rings():
    for k in (2, 3):
        B = make_boolean(k)
        assert B.order == 2 ** k and B.is_boolean
    assert make_product([make_zn(2), make_zn(2)]).is_boolean
    assert not make_zn(4).is_boolean


def test_trunc_poly():
    R = make_trunc_poly(4, 3)
    assert R.order == 64
    X = R.element("X")
    assert R.name(R.times(X, X)) == "X^2"
    assert R.power(X, 3) == 0
    assert make_trunc_poly(2, 1).order == 2
    S = make_trunc_poly(2, 2)
    u = S.element("1+X")
    assert S.times(u, u) == S.one


def test_units_and_zerodivisors():
    assert units(make_zn(12)) == {1, 5, 7, 11}
    assert zerodivisors(make_zn(5)) == {0}
    B = make_product([make_zn(2), make_zn(2)])
    assert B.element((1, 0)) in zerodivisors(B)


def test_nilradical():
    assert nilradical(make_zn(12)).member_names() == ["0", "6"]
    assert nilradical(make_zn(36)).codes == tuple(range(0, 36, 6))
    assert nilradical(make_boolean(2)).is_zero


def test_table_ring_roundtrip_and_rejection():
    Z = make_zn(6)
    R = make_table_ring(Z.add_table, Z.mul_table)
    assert R.order == 6 and R.times(2, 3) == 0
    bad = Z.mul_table.copy()
    bad[2, 3] = bad[3, 2] = 1
    with pytest.raises(InvalidRing):
        make_table_ring(Z.add_table, bad)


def test_table_ring_moves_zero_to_code_zero():
    Z = make_zn(3)
    perm = np.array([2, 0, 1])            # old code -> new label
    inv = np.argsort(perm)
    add = perm[Z.add_table[np.ix_(inv, inv)]]
    mul = perm[Z.mul_table[np.ix_(inv, inv)]]
    R = make_table_ring(add, mul, zero=2, one=0)
    assert R.zero == 0 and R.order == 3
    assert R.times(R.one, R.one) == R.one


RINGS = [make_zn(8), make_product([make_zn(2), make_zn(3)]), make_trunc_poly(2, 3), make_boolean(3)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(RINGS), st.data())
def test_ring_axioms(R, data):
    x, y, z = (data.draw(st.integers(0, R.order - 1)) for _ in range(3))
    assert R.plus(R.plus(x, y), z) == R.plus(x, R.plus(y, z))
    assert R.times(x, y) == R.times(y, x)
    assert R.times(x, R.plus(y, z)) == R.plus(R.times(x, y), R.times(x, z))
    assert R.times(R.one, x) == x
    assert R.plus(x, R.negate(x)) == 0


def test_power_sequences_cycle_within_order():
    for R in RINGS + [make_zn(36)]:
        for x in range(R.order):
            seen = []
            p = x
            while p not in seen:
                seen.append(p)
                p = R.times(p, x)
            assert len(seen) <= R.order
