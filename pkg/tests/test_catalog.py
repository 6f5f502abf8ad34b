"""Tests for the group universe: grammar, validity and closed-form orders."""

from __future__ import annotations

import pytest

from sylowscope.catalog import (
    SPORADIC_NAMES,
    exceptional_isomorphs,
    family_from_tag,
    is_valid,
    iter_lie_groups,
    order_closed_form,
    parse_group,
    rank_range,
    render_group,
    render_pattern,
    sporadic_record,
    sporadic_records,
    twisted_base,
)
from sylowscope.exceptions import GroupSyntaxError, GroupValidityError
from sylowscope.models import Family, GroupId


class TestParseGroup:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("PSL(3,4)", GroupId(Family.PSL, n=3, q=4)),
            ("psl(3, 4)", GroupId(Family.PSL, n=3, q=4)),
            ("PSU(4,2)", GroupId(Family.PSU, n=4, q=2)),
            ("PSp(4,3)", GroupId(Family.PSP, n=2, q=3)),
            ("Omega(7,3)", GroupId(Family.OMEGA_ODD, n=3, q=3)),
            ("POmega+(8,2)", GroupId(Family.POMEGA_PLUS, n=4, q=2)),
            ("POmega-(10,3)", GroupId(Family.POMEGA_MINUS, n=5, q=3)),
            ("2B2(8)", GroupId(Family.SUZUKI, q=8)),
            ("2G2(27)", GroupId(Family.REE, q=27)),
            ("3D4(2)", GroupId(Family.TRIALITY, q=2)),
            ("E8(2)", GroupId(Family.E8, q=2)),
            ("A(10)", GroupId(Family.ALTERNATING, n=10)),
            ("Fi24'", GroupId(Family.SPORADIC, sporadic_name="Fi24'")),
            ("Co1", GroupId(Family.SPORADIC, sporadic_name="Co1")),
        ],
    )
    def test_valid(self, text, expected):
        assert parse_group(text) == expected

    @pytest.mark.parametrize(
        ("text", "code"),
        [
            ("PSL(2,6)", "not-prime-power"),
            ("PSL(2,2)", "not-simple"),
            ("PSL(2,3)", "not-simple"),
            ("PSU(3,2)", "not-simple"),
            ("G2(2)", "not-simple"),
            ("2F4(2)", "not-simple"),
            ("2F4(2)'", "out-of-universe"),
            ("2B2(2)", "twisted-shape"),
            ("2B2(4)", "twisted-shape"),
            ("2G2(3)", "twisted-shape"),
            ("2F4(27)", "twisted-shape"),
            ("A(4)", "rank-range"),
            ("PSp(5,3)", "rank-range"),
            ("Omega(6,3)", "rank-range"),
            ("POmega-(6,2)", "rank-range"),
            ("co1", "unknown-sporadic"),
        ],
    )
    def test_invalid(self, text, code):
        with pytest.raises(GroupValidityError) as excinfo:
            parse_group(text)
        assert excinfo.value.code == code

    @pytest.mark.parametrize("text", ["XYZ(3)", "PSL(3)", "PSL(3,4", "PSL(3,4)'", "PSL(a,4)", ""])
    def test_syntax_errors(self, text):
        with pytest.raises(GroupSyntaxError):
            parse_group(text)

    def test_render_round_trip(self):
        for group in iter_lie_groups(4, [2, 3, 4, 8, 27]):
            assert parse_group(render_group(group)) == group

    def test_sporadic_round_trip(self):
        for name in SPORADIC_NAMES:
            assert render_group(parse_group(name)) == name


class TestRendering:
    def test_render_group(self):
        assert render_group(GroupId(Family.PSP, n=2, q=5)) == "PSp(4,5)"
        assert render_group(GroupId(Family.OMEGA_ODD, n=2, q=5)) == "Omega(5,5)"
        assert render_group(GroupId(Family.TWISTED_E6, q=2)) == "2E6(2)"

    def test_render_pattern(self):
        assert render_pattern(Family.PSL, 4) == "PSL(4,q)"
        assert render_pattern(Family.POMEGA_MINUS, 5) == "POmega-(10,q)"
        assert render_pattern(Family.F4, None) == "F4(q)"


class TestFamilies:
    def test_family_from_tag(self):
        assert family_from_tag("pomega+") is Family.POMEGA_PLUS
        assert family_from_tag("E8") is Family.E8

    def test_family_from_tag_rejects_alternating(self):
        with pytest.raises(GroupSyntaxError):
            family_from_tag("A")

    def test_twisted_base(self):
        assert twisted_base(Family.REE) == 3
        assert twisted_base(Family.TWISTED_F4) == 2
        assert twisted_base(Family.E6) is None

    def test_rank_range(self):
        assert rank_range(Family.PSU, 5) == (3, 4, 5)
        assert rank_range(Family.POMEGA_PLUS, 3) == ()
        assert rank_range(Family.E8, 5) == (None,)

    def test_iter_lie_groups_only_valid(self):
        groups = list(iter_lie_groups(3, [2, 3, 8]))
        assert groups
        assert all(is_valid(g) for g in groups)
        assert GroupId(Family.PSL, n=2, q=2) not in groups
        assert GroupId(Family.SUZUKI, q=8) in groups


class TestOrders:
    @pytest.mark.parametrize(
        ("text", "order"),
        [
            ("A(5)", 60),
            ("PSL(2,4)", 60),
            ("PSL(3,4)", 20160),
            ("PSU(4,2)", 25920),
            ("PSp(4,3)", 25920),
            ("2B2(8)", 29120),
            ("2G2(27)", 10073444472),
            ("G2(3)", 4245696),
            ("3D4(2)", 211341312),
            ("2F4(8)", 264905352699586176614400),
            ("M11", 7920),
            (
                "E8(2)",
                337804753143634806261388190614085595079991692242467651576160959909068800000,
            ),
        ],
    )
    def test_closed_form(self, text, order):
        assert order_closed_form(parse_group(text)) == order


class TestSporadicData:
    def test_all_records_load(self):
        records = sporadic_records()
        assert len(records) == 26
        assert records[0].name == "M11"
        assert records[-1].name == "M"

    def test_record(self):
        record = sporadic_record("J1")
        assert record.order.value == 175560
        assert 11 in record.abelian_odd_primes

    def test_monster_order(self):
        assert sporadic_record("M").order.value == (
            808017424794512875886459904961710757005754368000000000
        )

    def test_unknown(self):
        with pytest.raises(GroupValidityError):
            sporadic_record("M13")


class TestIsomorphs:
    def test_a5(self):
        found = exceptional_isomorphs(GroupId(Family.ALTERNATING, n=5))
        assert GroupId(Family.PSL, n=2, q=4) in found
        assert GroupId(Family.PSL, n=2, q=5) in found

    def test_psp4_omega5(self):
        found = exceptional_isomorphs(GroupId(Family.PSP, n=2, q=7))
        assert found == (GroupId(Family.OMEGA_ODD, n=2, q=7),)

    def test_none(self):
        assert exceptional_isomorphs(GroupId(Family.E8, q=2)) == ()
