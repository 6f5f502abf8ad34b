"""Tests for data models."""

import json

import pytest

from sylowscope.models import (
    LIE_FAMILIES,
    CyclicFactor,
    FactoredInteger,
    Family,
    GroupId,
    OutputRecord,
    ResidueClassSet,
    Rule,
    SylowVerdict,
    VerdictKind,
)


class TestFamily:
    def test_values(self):
        assert Family.POMEGA_MINUS == "POmega-"
        assert str(Family.TWISTED_F4) == "2F4"

    def test_kinds(self):
        assert Family.PSU.is_classical
        assert Family.E8.is_exceptional
        assert not Family.SPORADIC.is_lie
        assert Family.ALTERNATING not in LIE_FAMILIES
        assert len(LIE_FAMILIES) == 16


class TestGroupId:
    def test_frozen(self, psl3_4):
        with pytest.raises(AttributeError):
            psl3_4.q = 5

    def test_hashable(self, psl3_4):
        assert {psl3_4, GroupId(Family.PSL, n=3, q=4)} == {psl3_4}


class TestFactoredInteger:
    def test_value(self):
        order = FactoredInteger({2: 4, 3: 2, 5: 1, 11: 1})
        assert order.value == 7920
        assert order.valuation(3) == 2
        assert order.valuation(7) == 0
        assert order.primes == [2, 3, 5, 11]

    def test_render(self):
        assert FactoredInteger({3: 2, 2: 6, 7: 1, 5: 1}).render() == "2^6·3^2·5·7"
        assert FactoredInteger().render() == "1"

    def test_rejects_non_positive_exponent(self):
        with pytest.raises(ValueError):
            FactoredInteger({5: 0})


class TestResidueClassSet:
    def test_membership(self):
        classes = ResidueClassSet(modulus=9, residues=(4, 7))
        assert 13 in classes
        assert 16 in classes
        assert 10 not in classes
        assert "4" not in classes
        assert len(classes) == 2

    def test_render(self):
        assert ResidueClassSet(9, (2, 5)).render() == "q ≡ 2, 5 (mod 9)"

    @pytest.mark.parametrize(
        "modulus,residues",
        [(0, ()), (9, (7, 4)), (9, (4, 4)), (9, (9,))],
    )
    def test_invalid(self, modulus, residues):
        with pytest.raises(ValueError):
            ResidueClassSet(modulus, residues)


class TestSylowVerdict:
    def _verdict(self, kind, structure=()):
        return SylowVerdict(
            group=GroupId(Family.ALTERNATING, n=10), r=5, m=1, t=1,
            kind=kind, rule=Rule.COR_2_2, structure=structure,
        )  # fmt: skip

    def test_render(self):
        verdict = self._verdict(VerdictKind.ABELIAN, (CyclicFactor(5, 2),))
        assert verdict.render_structure() == "C5^2"
        assert verdict.is_abelian
        assert verdict.order_exponent == 2

    def test_homocyclic_exponent(self):
        verdict = self._verdict(VerdictKind.ABELIAN, (CyclicFactor(25, 3),))
        assert verdict.render_structure() == "C25^3"
        assert verdict.order_exponent == 6

    def test_trivial(self):
        verdict = self._verdict(VerdictKind.TRIVIAL)
        assert verdict.render_structure() == "1"
        assert verdict.is_abelian

    def test_nonabelian(self):
        assert not self._verdict(VerdictKind.NONABELIAN).is_abelian


class TestOutputRecord:
    def test_to_json(self):
        record = OutputRecord(command="order", query={"group": "M11"}, result={"order": "7920"})
        payload = json.loads(record.to_json())
        assert payload == {
            "version": "sylowscope/1",
            "command": "order",
            "query": {"group": "M11"},
            "result": {"order": "7920"},
        }

    def test_single_line(self):
        record = OutputRecord(command="x", query={}, result={"r": "q ≡ 1 (mod 9)"})
        text = record.to_json()
        assert "\n" not in text
        assert "≡" in text
