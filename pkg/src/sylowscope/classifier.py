"""Sylow classification of finite simple groups.

Odd primes go through :func:`classify`, which dispatches on the family:

* alternating groups: abelian iff n < r^2, and then elementary abelian of rank n // r;
* Lie type in defining characteristic: abelian iff the group is PSL_2(q);
* Lie type in cross characteristic: abelian iff e_L(m*r) = 0, where m is the order of
  q modulo r, apart from PSL_3 / PSU_3 at r = 3, which are abelian iff 3 || q^m - 1;
* sporadic groups: the published table, the cyclic r >= 17 rule, and the order bound.

The prime 2 goes through :func:`classify_sylow2` (Walter's list).
"""

from __future__ import annotations

import logging

from sylowscope.catalog import (
    characteristic,
    exceptional_isomorphs,
    render_group,
    sporadic_record,
    validate,
)
from sylowscope.exceptions import PreconditionError, TableEncodingError
from sylowscope.models import (
    CyclicFactor,
    ElementaryCheck,
    Family,
    GroupId,
    OrderMarker,
    ResidueClassSet,
    Rule,
    SylowVerdict,
    VerdictKind,
)
from sylowscope.numtheory import (
    cyclotomic_eval,
    is_prime,
    legendre,
    lifted_residues,
    mult_order,
    padic_val,
)
from sylowscope.tables import cyclo_profile, denominator, e_L, h_exponent, max_cyclotomic_index

logger = logging.getLogger(__name__)

# Mod-9 classes of the PSL_3 / PSU_3 exceptions at r = 3.
PSL3_EXCEPTION_CLASSES = ResidueClassSet(modulus=9, residues=(4, 7))
PSU3_EXCEPTION_CLASSES = ResidueClassSet(modulus=9, residues=(2, 5))


def _cross_characteristic(group: GroupId, r: int) -> tuple[int, int]:
    """``(m, t)``: the order of q mod r and v_r(q^m - 1)."""
    q = group.q or 0
    m = mult_order(q, r)
    return m, padic_val(r, q**m - 1)


def tilde_e(group: GroupId, r: int, m: int) -> int:
    """Extra r-adic valuation of the order coming from the factors Phi_{m r^j}(q), j >= 1."""
    q = group.q
    if not group.family.is_lie or q is None:
        raise PreconditionError(f"tilde_e needs a Lie-type group, got {render_group(group)}")
    if r == 2 or q % r == 0:
        raise PreconditionError(f"tilde_e needs an odd prime coprime to q, got r={r}, q={q}")
    if mult_order(q, r) != m:
        raise PreconditionError(f"{m} is not the order of {q} modulo {r}")

    bound = max_cyclotomic_index(group.family, group.n)
    total = 0
    index = m * r
    while index <= bound:
        exponent = e_L(group.family, group.n, index)
        if exponent:
            total += padic_val(r, cyclotomic_eval(index, q)) * exponent
        index *= r
    return total


def r_valuation_of_order(group: GroupId, r: int) -> int:
    """v_r(|group|), assembled from the family's structure rather than the full order."""
    validate(group)
    family = group.family
    if family is Family.SPORADIC:
        return sporadic_record(str(group.sporadic_name)).order.valuation(r)
    if family is Family.ALTERNATING:
        n = group.n or 0
        return legendre(n, r) - (1 if r == 2 else 0)

    q = group.q or 0
    p, f = characteristic(group)
    if r == p:
        return f * h_exponent(family, group.n)
    if r == 2:
        profile = cyclo_profile(group)
        return sum(
            e * padic_val(2, cyclotomic_eval(m, q)) for m, e in profile.e.items()
        ) - padic_val(2, profile.d)

    m, t = _cross_characteristic(group, r)
    return (
        t * e_L(family, group.n, m) + tilde_e(group, r, m) - padic_val(r, denominator(group))
    )


def _verdict(
    group: GroupId,
    r: int,
    m: int | OrderMarker,
    t: int,
    kind: VerdictKind,
    rule: Rule,
    structure: tuple[CyclicFactor, ...] = (),
) -> SylowVerdict:
    return SylowVerdict(group=group, r=r, m=m, t=t, kind=kind, rule=rule, structure=structure)


def classify(group: GroupId, r: int) -> SylowVerdict:
    """Classify the Sylow r-subgroup of ``group`` for an odd prime r."""
    if r == 2:
        raise PreconditionError("r = 2 is handled by classify_sylow2 (Walter's list)")
    if r < 2 or not is_prime(r):
        raise PreconditionError(f"{r} is not a prime")
    validate(group)

    valuation = r_valuation_of_order(group, r)
    verdict = _dispatch(group, r, valuation)
    logger.debug(
        "%s at r=%d: %s via %s", render_group(group), r, verdict.kind, verdict.rule
    )
    if verdict.kind is VerdictKind.ABELIAN and verdict.order_exponent != valuation:
        raise TableEncodingError(
            f"structure {verdict.render_structure()} of {render_group(group)} does not have "
            f"order {r}^{valuation}"
        )
    return verdict


def _dispatch(group: GroupId, r: int, valuation: int) -> SylowVerdict:
    family = group.family

    if family is Family.ALTERNATING:
        if valuation == 0:
            return _verdict(group, r, OrderMarker.ABSENT, 0, VerdictKind.TRIVIAL, Rule.COPRIME)
        n = group.n or 0
        if n >= r * r:
            return _verdict(group, r, OrderMarker.ABSENT, 0, VerdictKind.NONABELIAN, Rule.THM_2_1)
        rank = n // r
        rule = Rule.COR_2_2 if rank == 2 else Rule.THM_2_1
        return _verdict(
            group, r, OrderMarker.ABSENT, 0, VerdictKind.ABELIAN, rule, (CyclicFactor(r, rank),)
        )

    if family is Family.SPORADIC:
        return _classify_sporadic(group, r, valuation)

    p, f = characteristic(group)
    if r == p:
        if family is Family.PSL and group.n == 2:
            return _verdict(
                group, r, OrderMarker.DEFINING, 0, VerdictKind.ABELIAN, Rule.THM_3_7,
                (CyclicFactor(p, f),),
            )  # fmt: skip
        return _verdict(group, r, OrderMarker.DEFINING, 0, VerdictKind.NONABELIAN, Rule.THM_3_7)

    m, t = _cross_characteristic(group, r)
    if valuation == 0:
        return _verdict(group, r, m, t, VerdictKind.TRIVIAL, Rule.COPRIME)

    exception_rule = _exception_rule(group, r, m)
    if exception_rule is not None:
        # Sylow 3-subgroup of the diagonal torus modulo the centre: order 9, exponent 3.
        if t == 1:
            return _verdict(
                group, r, m, t, VerdictKind.ABELIAN, exception_rule, (CyclicFactor(3, 2),)
            )
        return _verdict(group, r, m, t, VerdictKind.NONABELIAN, exception_rule)

    if e_L(family, group.n, m * r) == 0:
        structure = (CyclicFactor(r**t, e_L(family, group.n, m)),)
        return _verdict(group, r, m, t, VerdictKind.ABELIAN, Rule.COR_3_9, structure)
    return _verdict(group, r, m, t, VerdictKind.NONABELIAN, Rule.THM_3_8)


def _exception_rule(group: GroupId, r: int, m: int) -> Rule | None:
    if r != 3 or group.n != 3:
        return None
    if group.family is Family.PSL and m == 1:
        return Rule.EXC_PSL3
    if group.family is Family.PSU and m == 2:
        return Rule.EXC_PSU3
    return None


def _classify_sporadic(group: GroupId, r: int, valuation: int) -> SylowVerdict:
    record = sporadic_record(str(group.sporadic_name))
    m = OrderMarker.ABSENT
    if valuation == 0:
        return _verdict(group, r, m, 0, VerdictKind.TRIVIAL, Rule.COPRIME)
    structure = (CyclicFactor(r, valuation),)
    if r in record.abelian_odd_primes:
        return _verdict(group, r, m, 0, VerdictKind.ABELIAN, Rule.TABLE4, structure)
    if r >= 17:
        return _verdict(group, r, m, 0, VerdictKind.ABELIAN, Rule.R17_CYCLIC, structure)
    if valuation <= 2:
        # groups of order r or r^2 are abelian
        return _verdict(group, r, m, 0, VerdictKind.ABELIAN, Rule.ORDER_BOUND, structure)
    return _verdict(group, r, m, 0, VerdictKind.NONABELIAN, Rule.TABLE4)


def classify_sylow2(group: GroupId) -> SylowVerdict:
    """Walter's classification of simple groups with abelian Sylow 2-subgroups."""
    validate(group)
    m: OrderMarker = OrderMarker.ABSENT
    if group.family.is_lie and (group.q or 0) % 2 == 0:
        m = OrderMarker.DEFINING

    for candidate in (group, *exceptional_isomorphs(group)):
        family, q = candidate.family, candidate.q or 0
        if family is Family.PSL and candidate.n == 2:
            p, f = characteristic(candidate)
            if p == 2:
                structure = (CyclicFactor(2, f),)
            elif q % 8 in (3, 5):
                structure = (CyclicFactor(2, 2),)
            else:
                continue
            return _verdict(group, 2, m, 0, VerdictKind.ABELIAN, Rule.WALTER, structure)
        if family is Family.REE or (
            family is Family.SPORADIC and candidate.sporadic_name == "J1"
        ):
            return _verdict(group, 2, m, 0, VerdictKind.ABELIAN, Rule.WALTER)
    return _verdict(group, 2, m, 0, VerdictKind.NONABELIAN, Rule.WALTER)


def is_elementary_abelian(group: GroupId, r: int) -> ElementaryCheck:
    """Decide whether an abelian Sylow r-subgroup is elementary abelian."""
    verdict = classify(group, r)
    if verdict.kind is VerdictKind.NONABELIAN:
        raise PreconditionError(
            f"Sylow {r}-subgroup of {render_group(group)} is not abelian"
        )
    if verdict.kind is VerdictKind.TRIVIAL:
        return ElementaryCheck(True, basis="trivial")

    family = group.family
    if family is Family.ALTERNATING:
        return ElementaryCheck(True, basis="always-elementary")
    if family is Family.SPORADIC:
        return ElementaryCheck(True, basis="always-elementary")
    if verdict.m is OrderMarker.DEFINING:
        return ElementaryCheck(True, basis="defining-characteristic")
    if verdict.rule in (Rule.EXC_PSL3, Rule.EXC_PSU3):
        return ElementaryCheck(True, basis="always-elementary")

    assert isinstance(verdict.m, int)
    witness = lifted_residues(r, verdict.m)
    elementary = all(factor.order == r for factor in verdict.structure)
    if ((group.q or 0) in witness) != elementary:
        raise TableEncodingError(
            f"residue witness disagrees with t = {verdict.t} for {render_group(group)}"
        )
    return ElementaryCheck(elementary, witness=witness, basis="residue-classes")
