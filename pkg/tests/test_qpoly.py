import math

import pytest

from kohtrees.errors import NonExactDivisionError
from kohtrees.qpoly import ONE, ZERO, QPoly, q_binomial, q_int


def test_trailing_zeros_trimmed():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0, 0]).coeffs == ()
    assert QPoly([1, 0, 2]).coeffs == (1, 0, 2)


def test_zero_polynomial():
    assert ZERO.is_zero
    assert ZERO.degree == -1
    assert ZERO.low_degree() is None
    assert not ONE.is_zero
    assert ONE.degree == 0


def test_coeff_outside_range_is_zero():
    p = QPoly([3, 1, 4])
    assert p.coeff(0) == 3
    assert p.coeff(2) == 4
    assert p.coeff(5) == 0
    assert p.coeff(-1) == 0


def test_low_degree_skips_stored_zeros():
    assert QPoly([0, 0, 7]).low_degree() == 2
    assert ONE.low_degree() == 0


def test_addition_and_subtraction():
    p = QPoly([1, 2, 3])
    r = QPoly([0, 1])
    assert (p + r).coeffs == (1, 3, 3)
    assert (p - p).is_zero
    assert (-r).coeffs == (0, -1)


def test_multiplication():
    assert (q_int(1) * q_int(1)).coeffs == (1, 2, 1)
    assert (q_int(2) * 3).coeffs == (3, 3, 3)
    assert (2 * q_int(0)).coeffs == (2,)
    assert (ZERO * q_int(4)).is_zero


def test_shift():
    assert q_int(1).shift(2).coeffs == (0, 0, 1, 1)
    assert ZERO.shift(3).is_zero
    with pytest.raises(ValueError):
        q_int(1).shift(-1)


def test_exact_division():
    p = q_int(2) * q_int(5)
    assert p.exact_div(q_int(5)) == q_int(2)
    assert ZERO.exact_div(q_int(1)).is_zero


def test_exact_division_refuses_remainders():
    with pytest.raises(NonExactDivisionError):
        q_int(2).exact_div(q_int(1))
    with pytest.raises(NonExactDivisionError):
        QPoly([1]).exact_div(QPoly([0, 1]))
    with pytest.raises(NonExactDivisionError):
        QPoly([2, 2]).exact_div(QPoly([3]))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


def test_symmetry_predicate():
    assert q_int(4).is_symmetric(4)
    assert not q_int(4).is_symmetric(6)
    assert QPoly([1, 5, 1]).is_symmetric(2)
    assert QPoly([0, 1, 1]).is_symmetric(3)
    assert ZERO.is_symmetric(0)


def test_unimodality_predicate():
    assert QPoly([1, 2, 2, 1]).is_unimodal()
    assert QPoly([1, 0, 1]).is_unimodal() is False
    assert ZERO.is_unimodal()
    assert q_int(3).is_unimodal()


def test_evaluate():
    assert QPoly([1, 2, 3]).evaluate(10) == 321
    assert q_int(4).evaluate(1) == 5
    assert ZERO.evaluate(7) == 0


def test_str_rendering():
    assert str(QPoly([1, 1, 2])) == "1 + q + 2*q^2"
    assert str(ZERO) == "0"
    assert str(QPoly([0, 0, 1])) == "q^2"


def test_q_int_validates():
    assert q_int(0) == ONE
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_binomial_small_values():
    assert q_binomial(0, 0) == ONE
    assert q_binomial(3, 0) == ONE
    assert q_binomial(0, 3) == ONE
    assert q_binomial(1, 1).coeffs == (1, 1)
    assert q_binomial(2, 2).coeffs == (1, 1, 2, 1, 1)
    assert q_binomial(-1, 2).is_zero
    assert q_binomial(2, -1).is_zero


def test_q_binomial_specializes_to_binomial():
    for n in range(7):
        for k in range(7):
            assert q_binomial(n, k).evaluate(1) == math.comb(n + k, k)


def test_q_binomial_symmetric_and_unimodal():
    for n in range(7):
        for k in range(7):
            p = q_binomial(n, k)
            assert p.degree == n * k
            assert p.is_symmetric(n * k)
            assert p.is_unimodal()


def test_q_binomial_pascal_recurrence():
    for n in range(1, 6):
        for k in range(1, 6):
            lhs = q_binomial(n, k)
            rhs = q_binomial(n, k - 1) + q_binomial(n - 1, k).shift(k)
            assert lhs == rhs
