"""Tests for the cyclotomic order tables."""

from __future__ import annotations

import pytest

from sylowscope.catalog import iter_lie_groups, order_closed_form, parse_group
from sylowscope.exceptions import PreconditionError
from sylowscope.models import Family, GroupId
from sylowscope.tables import (
    cyclo_profile,
    denominator,
    e_L,
    exponent_support,
    factored_order,
    h_exponent,
    max_cyclotomic_index,
    order_cyclotomic,
)
from sylowscope.verify import ORDER_SWEEP_QS


class TestExponents:
    def test_psl(self):
        assert [e_L(Family.PSL, 4, x) for x in range(1, 6)] == [3, 2, 1, 1, 0]

    def test_psu(self):
        assert exponent_support(Family.PSU, 3) == {1: 1, 2: 2, 6: 1}

    def test_pomega_plus(self):
        assert exponent_support(Family.POMEGA_PLUS, 4) == {1: 4, 2: 4, 3: 1, 4: 2, 6: 1}

    def test_pomega_minus_at_four(self):
        assert e_L(Family.POMEGA_MINUS, 4, 4) == 1
        assert e_L(Family.POMEGA_MINUS, 5, 4) == 2
        assert e_L(Family.POMEGA_MINUS, 6, 4) == 3

    def test_exceptional(self):
        assert e_L(Family.E8, None, 30) == 1
        assert e_L(Family.E8, None, 7) == 1
        assert e_L(Family.E8, None, 11) == 0
        assert e_L(Family.G2, None, 6) == 1

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            e_L(Family.ALTERNATING, 5, 1)
        with pytest.raises(PreconditionError):
            e_L(Family.PSL, None, 1)
        with pytest.raises(PreconditionError):
            e_L(Family.PSL, 3, 0)

    def test_max_index(self):
        assert max_cyclotomic_index(Family.PSL, 5) == 5
        assert max_cyclotomic_index(Family.PSP, 5) == 10
        assert max_cyclotomic_index(Family.E8, None) == 30


class TestProfile:
    def test_psl3_4(self, psl3_4):
        profile = cyclo_profile(psl3_4)
        assert profile.d == 3
        assert profile.h == 3
        assert profile.e == {1: 2, 2: 1, 3: 1}

    def test_denominator(self):
        assert denominator(GroupId(Family.PSU, n=4, q=3)) == 4
        assert denominator(GroupId(Family.E6, q=4)) == 3
        assert denominator(GroupId(Family.POMEGA_PLUS, n=4, q=3)) == 4
        assert denominator(GroupId(Family.E8, q=3)) == 1

    def test_h_exponent(self):
        assert h_exponent(Family.E8, None) == 120
        assert h_exponent(Family.PSL, 3) == 3
        assert h_exponent(Family.PSP, 2) == 4
        assert h_exponent(Family.POMEGA_PLUS, 4) == 12

    def test_profile_needs_lie_type(self, a10):
        with pytest.raises(PreconditionError):
            cyclo_profile(a10)


class TestOrderCyclotomic:
    def test_small_sweep(self):
        for group in iter_lie_groups(6, [2, 3, 4, 5, 7, 8, 9, 27]):
            assert order_cyclotomic(group) == order_closed_form(group), group

    @pytest.mark.slow
    def test_full_sweep(self):
        for group in iter_lie_groups(12, ORDER_SWEEP_QS):
            assert order_cyclotomic(group) == order_closed_form(group), group


class TestFactoredOrder:
    @pytest.mark.parametrize(
        ("text", "rendered"),
        [
            ("PSL(3,4)", "2^6·3^2·5·7"),
            ("A(10)", "2^7·3^4·5^2·7"),
            ("M11", "2^4·3^2·5·11"),
            ("2B2(8)", "2^6·5·7·13"),
        ],
    )
    def test_render(self, text, rendered):
        assert factored_order(parse_group(text)).render() == rendered

    def test_value_matches_closed_form(self, e8_2):
        assert factored_order(e8_2).value == order_closed_form(e8_2)
