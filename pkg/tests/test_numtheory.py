"""Tests for the number-theory layer."""

from __future__ import annotations

from math import prod

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy import divisors

from sylowscope.exceptions import PreconditionError
from sylowscope.numtheory import (
    cyclotomic_eval,
    euler_phi,
    factor,
    is_prime,
    legendre,
    lifted_residues,
    mobius,
    mult_order,
    order_m_residues,
    padic_val,
    prime_power,
    prime_powers_upto,
    primitive_root,
    zsigmondy_part,
    zsigmondy_primes,
)

SMALL_ODD_PRIMES = [3, 5, 7, 11, 13]


class TestCyclotomicEval:
    def test_low_indices(self):
        assert cyclotomic_eval(1, 7) == 6
        assert cyclotomic_eval(2, 7) == 8
        assert cyclotomic_eval(6, 2) == 3
        assert cyclotomic_eval(12, 2) == 13
        assert cyclotomic_eval(18, 2) == 57

    def test_rejects_small_arguments(self):
        with pytest.raises(PreconditionError):
            cyclotomic_eval(0, 5)
        with pytest.raises(PreconditionError):
            cyclotomic_eval(3, 1)

    @given(st.integers(min_value=2, max_value=60), st.integers(min_value=1, max_value=40))
    def test_divisor_product(self, q, m):
        assert prod(cyclotomic_eval(int(d), q) for d in divisors(m)) == q**m - 1

    @given(st.integers(min_value=2, max_value=60), st.integers(min_value=1, max_value=40))
    def test_congruence_mod_q(self, q, m):
        expected = q - 1 if m == 1 else 1
        assert cyclotomic_eval(m, q) % q == expected % q


class TestValuations:
    def test_padic_val(self):
        assert padic_val(3, 57) == 1
        assert padic_val(2, 96) == 5
        assert padic_val(5, 7) == 0

    def test_padic_val_rejects_zero(self):
        with pytest.raises(PreconditionError):
            padic_val(3, 0)

    def test_legendre(self):
        assert legendre(10, 2) == 8
        assert legendre(25, 5) == 6
        assert legendre(4, 5) == 0

    @given(
        st.integers(min_value=2, max_value=40),
        st.sampled_from(SMALL_ODD_PRIMES),
        st.integers(min_value=1, max_value=2),
    )
    def test_exact_division_above_m(self, q, r, j):
        assume(q % r)
        m = mult_order(q, r)
        assert padic_val(r, cyclotomic_eval(m * r**j, q)) == 1

    def test_m_equal_two_is_not_r_power(self):
        # 2 has order 2 mod 3 and Phi_18(2) = 57 = 3 * 19
        assert padic_val(3, cyclotomic_eval(18, 2)) == 1


class TestOrders:
    def test_mult_order(self):
        assert mult_order(2, 7) == 3
        assert mult_order(6, 7) == 2
        assert mult_order(11, 5) == 1

    def test_mult_order_defining_characteristic(self):
        with pytest.raises(PreconditionError):
            mult_order(9, 3)

    def test_primitive_root(self):
        assert primitive_root(7) == 3
        assert primitive_root(5) == 2

    def test_primitive_root_needs_odd_prime(self):
        with pytest.raises(PreconditionError):
            primitive_root(2)
        with pytest.raises(PreconditionError):
            primitive_root(9)

    def test_order_m_residues(self):
        assert order_m_residues(5, 4) == {2, 3}
        assert order_m_residues(5, 2) == {4}
        assert order_m_residues(5, 1) == {1}
        assert order_m_residues(7, 3) == {2, 4}

    def test_order_m_residues_needs_divisor(self):
        with pytest.raises(PreconditionError):
            order_m_residues(5, 3)


class TestZsigmondy:
    def test_primitive_primes(self):
        assert zsigmondy_primes(2, 10) == {11}
        assert zsigmondy_primes(2, 4) == {5}

    def test_exceptions_have_no_primitive_prime(self):
        assert zsigmondy_primes(2, 6) == frozenset()
        assert zsigmondy_primes(3, 2) == frozenset()

    def test_part(self):
        assert zsigmondy_part(2, 12) == 13
        assert zsigmondy_part(2, 6) == 1


class TestLiftedResidues:
    def test_known_sets(self):
        assert lifted_residues(5, 1).residues == (6, 11, 16, 21)
        assert lifted_residues(5, 2).residues == (4, 9, 14, 19)
        assert lifted_residues(3, 2).residues == (2, 5)
        assert lifted_residues(5, 4).residues == (2, 3, 8, 12, 13, 17, 22, 23)
        assert lifted_residues(5, 4).modulus == 25

    @pytest.mark.parametrize(("r", "m"), [(5, 1), (5, 2), (5, 4), (7, 3), (7, 6), (13, 12)])
    def test_cardinality(self, r, m):
        assert len(lifted_residues(r, m)) == euler_phi(m) * (r - 1)

    @given(st.data())
    def test_membership_matches_valuation(self, data):
        r = data.draw(st.sampled_from(SMALL_ODD_PRIMES))
        x = data.draw(st.integers(min_value=2, max_value=r * r - 1).filter(lambda v: v % r))
        m = mult_order(x, r)
        assert (x in lifted_residues(r, m)) == (padic_val(r, x**m - 1) == 1)


class TestFactoring:
    def test_prime_power(self):
        assert prime_power(8) == (2, 3)
        assert prime_power(25) == (5, 2)
        assert prime_power(12) is None
        assert prime_power(1) is None

    def test_factor_render(self):
        assert factor(7920).render() == "2^4·3^2·5·11"
        assert factor(7920).value == 7920

    def test_factor_rejects_zero(self):
        with pytest.raises(PreconditionError):
            factor(0)

    def test_prime_powers_upto(self):
        assert prime_powers_upto(10) == [2, 3, 4, 5, 7, 8, 9]

    def test_arithmetic_functions(self):
        assert euler_phi(12) == 4
        assert mobius(30) == -1
        assert mobius(12) == 0
        assert is_prime(101)
        assert not is_prime(91)
