"""Cyclotomic factorisation of the Lie-type orders.

Every simple group of Lie type satisfies ``|L(q)| = q^h * prod_m Phi_m(q)^{e_L(m)} / d``.
Classical families get ``e_L`` from closed formulas in the rank, exceptional families
from a fixed table of nonzero exponents.
"""

from __future__ import annotations

import logging
from collections import Counter
from math import gcd

from sympy import primerange

from sylowscope.catalog import characteristic, render_group, sporadic_record
from sylowscope.exceptions import PreconditionError, TableEncodingError
from sylowscope.models import CycloProfile, FactoredInteger, Family, GroupId
from sylowscope.numtheory import cyclotomic_eval, factor, lcm2, legendre

logger = logging.getLogger(__name__)

# Nonzero e_L(m) of the exceptional families; absent cells are 0.
EXCEPTIONAL_EXPONENTS: dict[Family, dict[int, int]] = {
    Family.SUZUKI: {1: 1, 4: 1},
    Family.TRIALITY: {1: 2, 2: 2, 3: 2, 6: 2, 12: 1},
    Family.G2: {1: 2, 2: 2, 3: 1, 6: 1},
    Family.REE: {1: 1, 2: 1, 6: 1},
    Family.F4: {1: 4, 2: 4, 3: 2, 4: 2, 6: 2, 8: 1, 12: 1},
    Family.TWISTED_F4: {1: 2, 2: 2, 4: 2, 6: 1, 12: 1},
    Family.E6: {1: 6, 2: 4, 3: 3, 4: 2, 5: 1, 6: 2, 8: 1, 9: 1, 12: 1},
    Family.TWISTED_E6: {1: 4, 2: 6, 3: 2, 4: 2, 6: 3, 8: 1, 10: 1, 12: 1, 18: 1},
    Family.E7: {
        1: 7, 2: 7, 3: 3, 4: 2, 5: 1, 6: 3, 7: 1, 8: 1, 9: 1, 10: 1, 12: 1, 14: 1, 18: 1,
    },
    Family.E8: {
        1: 8, 2: 8, 3: 4, 4: 4, 5: 2, 6: 4, 7: 1, 8: 2, 9: 1, 10: 2, 12: 2, 14: 1, 15: 1,
        18: 1, 20: 1, 24: 1, 30: 1,
    },
}  # fmt: skip

EXCEPTIONAL_H: dict[Family, int] = {
    Family.SUZUKI: 2,
    Family.TRIALITY: 12,
    Family.G2: 6,
    Family.REE: 3,
    Family.F4: 24,
    Family.TWISTED_F4: 12,
    Family.E6: 36,
    Family.TWISTED_E6: 36,
    Family.E7: 63,
    Family.E8: 120,
}


def e_L(family: Family, n: int | None, x: int) -> int:  # noqa: N802
    """Exponent of Phi_x(q) in the cyclotomic factorisation of the family at rank n."""
    if not family.is_lie:
        raise PreconditionError(f"e_L is only defined for Lie-type families, not {family.value}")
    if x < 1:
        raise PreconditionError(f"e_L needs x >= 1, got {x}")
    if family.is_exceptional:
        return EXCEPTIONAL_EXPONENTS[family].get(x, 0)
    if n is None:
        raise PreconditionError(f"{family.value} needs a rank parameter")

    match family:
        case Family.PSL:
            return n - 1 if x == 1 else n // x
        case Family.PSU:
            if x == 2:
                return n - 1
            if x % 4 == 2:
                return 2 * n // x
            return n // lcm2(x)
        case Family.PSP | Family.OMEGA_ODD:
            return 2 * n // lcm2(x)
        case Family.POMEGA_PLUS:
            if n % x and (2 * n) % x == 0:
                return 2 * n // x - 1
            return 2 * n // lcm2(x)
        case Family.POMEGA_MINUS:
            if n % x == 0:
                return 2 * n // lcm2(x) - 1
            return 2 * n // lcm2(x)
    raise PreconditionError(f"no exponent rule for {family.value}")


def max_cyclotomic_index(family: Family, n: int | None) -> int:
    """Largest m with e_L(m) possibly nonzero."""
    if family.is_exceptional:
        return max(EXCEPTIONAL_EXPONENTS[family])
    if n is None:
        raise PreconditionError(f"{family.value} needs a rank parameter")
    return n if family is Family.PSL else 2 * n


def denominator(group: GroupId) -> int:
    """The denominator d, evaluated at the group's q."""
    family, n, q = group.family, group.n or 0, group.q
    if q is None:
        raise PreconditionError(f"{render_group(group)} has no field size")
    match family:
        case Family.PSL:
            return gcd(n, q - 1)
        case Family.PSU:
            return gcd(n, q + 1)
        case Family.PSP | Family.OMEGA_ODD | Family.E7:
            return gcd(2, q - 1)
        case Family.POMEGA_PLUS:
            return gcd(4, q**n - 1)
        case Family.POMEGA_MINUS:
            return gcd(4, q**n + 1)
        case Family.E6:
            return gcd(3, q - 1)
        case Family.TWISTED_E6:
            return gcd(3, q + 1)
    return 1


def h_exponent(family: Family, n: int | None) -> int:
    """The exponent h of q in the order."""
    if family.is_exceptional:
        return EXCEPTIONAL_H[family]
    if n is None:
        raise PreconditionError(f"{family.value} needs a rank parameter")
    match family:
        case Family.PSL | Family.PSU:
            return n * (n - 1) // 2
        case Family.PSP | Family.OMEGA_ODD:
            return n * n
    return n * (n - 1)


def exponent_support(family: Family, n: int | None) -> dict[int, int]:
    """All m with e_L(m) > 0, mapped to e_L(m)."""
    return {
        m: e
        for m in range(1, max_cyclotomic_index(family, n) + 1)
        if (e := e_L(family, n, m)) > 0
    }


def cyclo_profile(group: GroupId) -> CycloProfile:
    if not group.family.is_lie:
        raise PreconditionError(f"{render_group(group)} is not of Lie type")
    return CycloProfile(
        d=denominator(group),
        h=h_exponent(group.family, group.n),
        e=exponent_support(group.family, group.n),
    )


def order_cyclotomic(group: GroupId) -> int:
    """The order reassembled from the cyclotomic profile."""
    profile = cyclo_profile(group)
    q = group.q or 0
    numerator = q**profile.h
    for m, e in profile.e.items():
        numerator *= cyclotomic_eval(m, q) ** e
    order, remainder = divmod(numerator, profile.d)
    if remainder:
        raise TableEncodingError(
            f"cyclotomic order of {render_group(group)} is not divisible by d = {profile.d}"
        )
    return order


def factored_order(group: GroupId) -> FactoredInteger:
    """The prime factorisation of |group|, assembled factor by factor."""
    family = group.family
    if family is Family.SPORADIC:
        return sporadic_record(str(group.sporadic_name)).order
    if family is Family.ALTERNATING:
        n = group.n or 0
        counts = {int(p): legendre(n, int(p)) for p in primerange(2, n + 1)}
        counts[2] -= 1
        return FactoredInteger(counts)

    profile = cyclo_profile(group)
    p, f = characteristic(group)
    exponents: Counter[int] = Counter({p: f * profile.h})
    for m, e in profile.e.items():
        for prime, k in factor(cyclotomic_eval(m, group.q or 0)).factors.items():
            exponents[prime] += k * e
    for prime, k in factor(profile.d).factors.items():
        exponents[prime] -= k
        if exponents[prime] < 0:
            raise TableEncodingError(
                f"d = {profile.d} does not divide the order of {render_group(group)}"
            )
    return FactoredInteger({prime: k for prime, k in exponents.items() if k})
