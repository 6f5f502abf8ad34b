"""Inverse queries: which simple groups have a Sylow r-subgroup of a given abelian type.

Matches are symbolic. A Lie-type match fixes the family, the admissible ranks and the
order m of q modulo r, and constrains q by residue classes; :func:`instantiate` expands a
match into concrete groups up to a bound on q.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable

from sympy import divisors

from sylowscope.catalog import (
    is_valid,
    rank_range,
    sporadic_records,
    twisted_base,
)
from sylowscope.classifier import (
    PSL3_EXCEPTION_CLASSES,
    PSU3_EXCEPTION_CLASSES,
    classify,
)
from sylowscope.exceptions import PreconditionError, StructureSyntaxError
from sylowscope.models import (
    LIE_FAMILIES,
    CongruenceReport,
    CyclicFactor,
    EnumMatch,
    Family,
    GroupId,
    OrderMarker,
    ResidueClassSet,
    Rule,
    Scope,
    VerdictKind,
)
from sylowscope.numtheory import (
    is_prime,
    lifted_residues,
    mult_order,
    order_m_residues,
    padic_val,
    prime_power,
    prime_powers_upto,
)
from sylowscope.tables import e_L

logger = logging.getLogger(__name__)

_STRUCTURE_RE = re.compile(
    r"^C(?:(?P<order>\d+)|\((?P<base>\d+)\^(?P<power>\d+)\)|<(?P<abase>\d+)\^(?P<apower>\d+)>)"
    r"(?:\^(?P<k>\d+))?$"
)

_FAMILY_ORDER = {family: index for index, family in enumerate(Family)}


def parse_structure(text: str) -> tuple[int, int, int]:
    """Parse ``C5``, ``C5^2``, ``C25^3`` or ``C<5^2>^3`` into ``(r, s, k)`` for C_{r^s}^k."""
    match = _STRUCTURE_RE.match(text.replace(" ", ""))
    if match is None:
        raise StructureSyntaxError(f"cannot parse structure '{text}' (expected e.g. C5^2)")
    if match.group("order") is not None:
        order = int(match.group("order"))
    else:
        base = match.group("base") or match.group("abase")
        power = match.group("power") or match.group("apower")
        order = int(base) ** int(power)
    k = int(match.group("k") or 1)
    pf = prime_power(order)
    if pf is None:
        raise StructureSyntaxError(f"cyclic factor order {order} in '{text}' is not a prime power")
    if k < 1:
        raise StructureSyntaxError(f"multiplicity must be positive in '{text}'")
    r, s = pf
    return r, s, k


def _shape_residues(base: int, modulus: int) -> frozenset[int]:
    """Residues modulo ``modulus`` taken by base^(2k+1), k >= 1."""
    seen: list[int] = []
    x = pow(base, 3, modulus)
    step = base * base % modulus
    while x not in seen:
        seen.append(x)
        x = x * step % modulus
    return frozenset(seen)


def _restrict_to_shape(family: Family, condition: ResidueClassSet) -> ResidueClassSet | None:
    base = twisted_base(family)
    if base is None:
        return condition
    reachable = _shape_residues(base, condition.modulus)
    kept = tuple(x for x in condition.residues if x in reachable)
    if not kept:
        return None
    return ResidueClassSet(modulus=condition.modulus, residues=kept)


def _lie_matches(r: int, s: int, k: int, rank_bound: int) -> list[EnumMatch]:
    found: list[EnumMatch] = []
    structure = CyclicFactor(r**s, k)
    for m in map(int, divisors(r - 1)):
        if s == 1:
            base_condition = lifted_residues(r, m)
        else:
            base_condition = ResidueClassSet(
                modulus=r, residues=tuple(sorted(order_m_residues(r, m)))
            )
        for family in LIE_FAMILIES:
            ranks = tuple(
                n
                for n in rank_range(family, rank_bound)
                if not _is_exception(family, n, r, m)
                and e_L(family, n, m) == k
                and e_L(family, n, m * r) == 0
            )
            if not ranks:
                continue
            condition = _restrict_to_shape(family, base_condition)
            if condition is None:
                logger.debug("%s at m=%d has no admissible field size", family.value, m)
                continue
            found.append(
                EnumMatch(
                    r=r,
                    family=family,
                    m=m,
                    structure=structure,
                    ranks=tuple(n for n in ranks if n is not None),
                    condition=condition,
                    valuation=s,
                    rules=(Rule.COR_3_9,),
                )
            )

    if s == 1:
        q = r**k
        if is_valid(GroupId(Family.PSL, n=2, q=q)):
            found.append(
                EnumMatch(
                    r=r, family=Family.PSL, m=OrderMarker.DEFINING, structure=structure,
                    ranks=(2,), q=q, rules=(Rule.THM_3_7,),
                )
            )  # fmt: skip
        if r == 3 and k == 2:
            found.append(
                EnumMatch(
                    r=r, family=Family.PSL, m=1, structure=structure, ranks=(3,),
                    condition=PSL3_EXCEPTION_CLASSES, rules=(Rule.EXC_PSL3,),
                )
            )  # fmt: skip
            found.append(
                EnumMatch(
                    r=r, family=Family.PSU, m=2, structure=structure, ranks=(3,),
                    condition=PSU3_EXCEPTION_CLASSES, rules=(Rule.EXC_PSU3,),
                )
            )  # fmt: skip
    return found


def _is_exception(family: Family, n: int | None, r: int, m: int) -> bool:
    if r != 3 or n != 3:
        return False
    return (family is Family.PSL and m == 1) or (family is Family.PSU and m == 2)


def _alternating_matches(r: int, s: int, k: int) -> list[EnumMatch]:
    if s != 1:
        return []
    ranks = tuple(range(max(5, k * r), min((k + 1) * r, r * r)))
    if not ranks:
        return []
    rule = Rule.COR_2_2 if k == 2 else Rule.THM_2_1
    return [
        EnumMatch(
            r=r, family=Family.ALTERNATING, m=OrderMarker.ABSENT,
            structure=CyclicFactor(r, k), ranks=ranks, rules=(rule,),
        )
    ]  # fmt: skip


def _sporadic_matches(r: int, s: int, k: int) -> list[EnumMatch]:
    if s != 1:
        return []
    found = []
    for record in sporadic_records():
        if record.order.valuation(r) != k:
            continue
        verdict = classify(GroupId(Family.SPORADIC, sporadic_name=record.name), r)
        if verdict.kind is VerdictKind.ABELIAN:
            found.append(
                EnumMatch(
                    r=r, family=Family.SPORADIC, m=OrderMarker.ABSENT,
                    structure=CyclicFactor(r, k), sporadic_name=record.name,
                    rules=(verdict.rule,),
                )
            )  # fmt: skip
    return found


def _sort_key(match: EnumMatch) -> tuple[int, int, int]:
    first_rank = match.ranks[0] if match.ranks else 0
    m = match.m if isinstance(match.m, int) else 0
    return _FAMILY_ORDER[match.family], first_rank, m


def enumerate_by_structure(
    r: int,
    s: int,
    k: int,
    scopes: Iterable[Scope] = tuple(Scope),
    rank_bound: int = 12,
) -> list[EnumMatch]:
    """All simple groups whose Sylow r-subgroup is C_{r^s}^k, as symbolic matches.

    Results are sorted by family, then first rank, then m. Sporadic matches keep the
    row order of the sporadic table.
    """
    if r == 2 or r < 2 or not is_prime(r):
        raise PreconditionError(f"enumeration needs an odd prime, got {r}")
    if s < 1 or k < 1 or rank_bound < 1:
        raise PreconditionError("s, k and rank_bound must be positive")

    wanted = set(scopes)
    found: list[EnumMatch] = []
    if Scope.ALTERNATING in wanted:
        found.extend(_alternating_matches(r, s, k))
    if Scope.LIE in wanted:
        found.extend(_lie_matches(r, s, k, rank_bound))
    if Scope.SPORADIC in wanted:
        found.extend(_sporadic_matches(r, s, k))

    found.sort(key=_sort_key)
    logger.debug("C%d^%d at r=%d: %d matches", r**s, k, r, len(found))
    return found


def matches(match: EnumMatch, group: GroupId) -> bool:
    """Whether the concrete ``group`` satisfies the symbolic ``match``."""
    if group.family is not match.family:
        return False
    if match.family is Family.SPORADIC:
        return group.sporadic_name == match.sporadic_name
    if match.ranks and group.n not in match.ranks:
        return False
    if not match.ranks and group.n is not None:
        return False
    if not is_valid(group):
        return False
    if match.family is Family.ALTERNATING:
        return True

    q = group.q or 0
    if match.q is not None:
        return q == match.q
    r = match.r
    if q % r == 0:
        return False
    if match.condition is not None and q not in match.condition:
        return False
    m = mult_order(q, r)
    return m == match.m and padic_val(r, q**m - 1) == match.valuation


def instantiate(match: EnumMatch, bound: int) -> list[GroupId]:
    """The concrete groups of ``match`` with field size at most ``bound``."""
    family = match.family
    if family is Family.SPORADIC:
        return [GroupId(family, sporadic_name=match.sporadic_name)]
    if family is Family.ALTERNATING:
        return [GroupId(family, n=n) for n in match.ranks]

    ranks: tuple[int | None, ...] = match.ranks or (None,)
    qs = [match.q] if match.q is not None else prime_powers_upto(bound)
    groups = [
        GroupId(family, n=n, q=q)
        for q in qs
        if q <= bound
        for n in ranks
    ]
    return [g for g in groups if matches(match, g)]


def congruence_conditions(
    family: Family, n: int | None, r: int, m: int
) -> CongruenceReport:
    """Residue classes of q giving an elementary abelian Sylow r-subgroup at order m.

    ``criterion`` is e_L(m*r): zero means every q of order m modulo r gives an abelian
    Sylow r-subgroup. PSL_3 and PSU_3 at r = 3 report their mod-9 exception classes.
    """
    if not family.is_lie:
        raise PreconditionError(f"congruence conditions need a Lie-type family, not {family.value}")
    if r < 3 or not is_prime(r):
        raise PreconditionError(f"congruence conditions need an odd prime, got {r}")
    if m < 1 or (r - 1) % m:
        raise PreconditionError(f"{m} does not divide {r - 1}")
    if family.is_exceptional:
        n = None
    elif n is None or n not in rank_range(family, n):
        raise PreconditionError(f"{family.value} needs a rank parameter in its simple range")

    criterion = e_L(family, n, m * r)
    if _is_exception(family, n, r, m):
        exception = Rule.EXC_PSL3 if family is Family.PSL else Rule.EXC_PSU3
        classes = PSL3_EXCEPTION_CLASSES if family is Family.PSL else PSU3_EXCEPTION_CLASSES
        return CongruenceReport(
            family=family, n=n, r=r, m=m, residues=classes, criterion=criterion,
            structure=CyclicFactor(3, 2), rule=exception,
        )  # fmt: skip

    residues = _restrict_to_shape(family, lifted_residues(r, m))
    return CongruenceReport(
        family=family,
        n=n,
        r=r,
        m=m,
        residues=residues or ResidueClassSet(modulus=r * r, residues=()),
        criterion=criterion,
        structure=CyclicFactor(r, e_L(family, n, m)),
        rule=Rule.COR_3_9 if criterion == 0 else Rule.THM_3_8,
    )
