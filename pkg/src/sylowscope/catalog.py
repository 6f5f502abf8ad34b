"""The group universe: grammar, validity rules, closed-form orders and sporadic data."""

from __future__ import annotations

import json
import logging
import re
from collections.abc import Iterable, Iterator
from functools import lru_cache
from importlib import resources
from math import factorial, gcd, prod

from sylowscope.exceptions import GroupSyntaxError, GroupValidityError, TableEncodingError
from sylowscope.models import FactoredInteger, Family, GroupId, SporadicRecord
from sylowscope.numtheory import prime_power

logger = logging.getLogger(__name__)

SPORADIC_NAMES: tuple[str, ...] = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "He", "Ru",
    "Suz", "ON", "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B", "M",
)  # fmt: skip

# Lower-cased textual tag -> (family, number of arguments)
_TAGS: dict[str, tuple[Family, int]] = {
    "a": (Family.ALTERNATING, 1),
    "psl": (Family.PSL, 2),
    "psu": (Family.PSU, 2),
    "psp": (Family.PSP, 2),
    "omega": (Family.OMEGA_ODD, 2),
    "pomega+": (Family.POMEGA_PLUS, 2),
    "pomega-": (Family.POMEGA_MINUS, 2),
    "2b2": (Family.SUZUKI, 1),
    "3d4": (Family.TRIALITY, 1),
    "g2": (Family.G2, 1),
    "2g2": (Family.REE, 1),
    "f4": (Family.F4, 1),
    "2f4": (Family.TWISTED_F4, 1),
    "e6": (Family.E6, 1),
    "2e6": (Family.TWISTED_E6, 1),
    "e7": (Family.E7, 1),
    "e8": (Family.E8, 1),
}

_CALL_RE = re.compile(r"^(?P<tag>[A-Za-z0-9]+[+-]?)\s*\((?P<args>[^()]*)\)(?P<prime>'?)$")
_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9]*'?$")
_INT_RE = re.compile(r"^\d+$")

# Minimum rank parameter per ranked family.
_MIN_RANK: dict[Family, int] = {
    Family.ALTERNATING: 5,
    Family.PSL: 2,
    Family.PSU: 3,
    Family.PSP: 2,
    Family.OMEGA_ODD: 2,
    Family.POMEGA_PLUS: 4,
    Family.POMEGA_MINUS: 4,
}

# (family, n, q) combinations that are not simple.
_NOT_SIMPLE: frozenset[tuple[Family, int | None, int]] = frozenset(
    {
        (Family.PSL, 2, 2),
        (Family.PSL, 2, 3),
        (Family.PSU, 3, 2),
        (Family.PSP, 2, 2),
        (Family.OMEGA_ODD, 2, 2),
        (Family.G2, None, 2),
        (Family.TWISTED_F4, None, 2),
    }
)

# Twisted families whose field size must be an odd power (>= 3) of a fixed prime.
_TWISTED_SHAPE: dict[Family, int] = {
    Family.SUZUKI: 2,
    Family.TWISTED_F4: 2,
    Family.REE: 3,
}


def twisted_base(family: Family) -> int | None:
    """The prime whose odd powers are the admissible field sizes of a twisted family."""
    return _TWISTED_SHAPE.get(family)


def family_from_tag(text: str) -> Family:
    """Look up a Lie-type family by its tag, ignoring case (``psl``, ``POmega+``, ``2F4``)."""
    tag = text.strip().lower()
    if tag not in _TAGS or _TAGS[tag][0] is Family.ALTERNATING:
        raise GroupSyntaxError(f"unknown Lie-type family tag '{text}'")
    return _TAGS[tag][0]


def parse_group(text: str) -> GroupId:
    """Parse and validate a group expression such as ``PSL(3,4)``, ``2B2(8)`` or ``Co1``."""
    stripped = text.strip()
    if stripped in SPORADIC_NAMES:
        return GroupId(Family.SPORADIC, sporadic_name=stripped)

    match = _CALL_RE.match(stripped)
    if match is None:
        if _NAME_RE.match(stripped):
            raise GroupValidityError(
                f"unknown sporadic group '{stripped}' (names are case-sensitive)",
                code="unknown-sporadic",
            )
        raise GroupSyntaxError(f"cannot parse group expression '{text}'")

    tag = match.group("tag").lower()
    if tag not in _TAGS:
        raise GroupSyntaxError(f"unknown family tag '{match.group('tag')}' in '{text}'")
    family, arity = _TAGS[tag]

    raw_args = [a.strip() for a in match.group("args").split(",")]
    if len(raw_args) != arity or not all(_INT_RE.match(a) for a in raw_args):
        raise GroupSyntaxError(
            f"'{match.group('tag')}' takes {arity} integer argument(s), got '{match.group('args')}'"
        )
    args = [int(a) for a in raw_args]

    if match.group("prime"):
        if family is Family.TWISTED_F4 and args == [2]:
            raise GroupValidityError(
                "the Tits group 2F4(2)' is outside the classified universe",
                code="out-of-universe",
            )
        raise GroupSyntaxError(f"derived-subgroup mark is not allowed in '{text}'")

    group = _build(family, args)
    validate(group)
    return group


def _build(family: Family, args: list[int]) -> GroupId:
    if family is Family.ALTERNATING:
        return GroupId(family, n=args[0])
    if family.is_exceptional:
        return GroupId(family, q=args[0])

    dim, q = args
    if family is Family.PSP or family in (Family.POMEGA_PLUS, Family.POMEGA_MINUS):
        if dim % 2:
            raise GroupValidityError(
                f"{family.value} needs an even dimension, got {dim}", code="rank-range"
            )
        return GroupId(family, n=dim // 2, q=q)
    if family is Family.OMEGA_ODD:
        if dim % 2 == 0:
            raise GroupValidityError(f"Omega needs an odd dimension, got {dim}", code="rank-range")
        return GroupId(family, n=(dim - 1) // 2, q=q)
    return GroupId(family, n=dim, q=q)


def validate(group: GroupId) -> None:
    """Raise :class:`GroupValidityError` unless ``group`` names a simple group of the universe."""
    family = group.family
    if family is Family.SPORADIC:
        if group.sporadic_name not in SPORADIC_NAMES:
            raise GroupValidityError(
                f"unknown sporadic group '{group.sporadic_name}'", code="unknown-sporadic"
            )
        return

    if family in _MIN_RANK:
        if group.n is None or group.n < _MIN_RANK[family]:
            raise GroupValidityError(
                f"{render_group(group)} is not simple: {family.value} needs rank parameter "
                f">= {_MIN_RANK[family]}",
                code="rank-range",
            )
    if family is Family.ALTERNATING:
        return

    q = group.q
    if q is None or prime_power(q) is None:
        raise GroupValidityError(
            f"field size {q} of {family.value} is not a prime power", code="not-prime-power"
        )
    if (family, group.n, q) in _NOT_SIMPLE:
        raise GroupValidityError(f"{render_group(group)} is not simple", code="not-simple")
    if family in _TWISTED_SHAPE:
        base = _TWISTED_SHAPE[family]
        p, f = prime_power(q)  # type: ignore[misc]
        if p != base or f % 2 == 0 or f < 3:
            raise GroupValidityError(
                f"{family.value} requires q = {base}^(2k+1) with k >= 1, got q = {q}",
                code="twisted-shape",
            )


def is_valid(group: GroupId) -> bool:
    try:
        validate(group)
    except GroupValidityError:
        return False
    return True


def render_group(group: GroupId) -> str:
    """Canonical text of a group id; :func:`parse_group` inverts it."""
    if group.family is Family.SPORADIC:
        return str(group.sporadic_name)
    return _render(group.family, group.n, str(group.q))


def render_pattern(family: Family, n: int | None) -> str:
    """Text of a family member with the field size left symbolic, e.g. ``PSL(4,q)``."""
    return _render(family, n, "q")


def _render(family: Family, n: int | None, q: str) -> str:
    match family:
        case Family.ALTERNATING:
            return f"A({n})"
        case Family.PSL | Family.PSU:
            return f"{family.value}({n},{q})"
        case Family.PSP | Family.POMEGA_PLUS | Family.POMEGA_MINUS:
            return f"{family.value}({2 * (n or 0)},{q})"
        case Family.OMEGA_ODD:
            return f"Omega({2 * (n or 0) + 1},{q})"
        case _:
            return f"{family.value}({q})"


def characteristic(group: GroupId) -> tuple[int, int]:
    """``(p, f)`` with q = p^f for a Lie-type group."""
    if not group.family.is_lie or group.q is None:
        raise GroupValidityError(f"{render_group(group)} has no defining field", code="invalid")
    pf = prime_power(group.q)
    if pf is None:
        raise GroupValidityError(f"{group.q} is not a prime power", code="not-prime-power")
    return pf


def order_closed_form(group: GroupId) -> int:
    """The group order from the standard product formulas, independent of the cyclotomic tables."""
    family, n, q = group.family, group.n or 0, group.q or 0
    match family:
        case Family.SPORADIC:
            return sporadic_record(str(group.sporadic_name)).order.value
        case Family.ALTERNATING:
            return factorial(n) // 2
        case Family.PSL:
            return q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(2, n + 1)) // gcd(n, q - 1)
        case Family.PSU:
            return (
                q ** (n * (n - 1) // 2)
                * prod(q**i - (-1) ** i for i in range(2, n + 1))
                // gcd(n, q + 1)
            )
        case Family.PSP | Family.OMEGA_ODD:
            return q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1)) // gcd(2, q - 1)
        case Family.POMEGA_PLUS:
            return (
                q ** (n * (n - 1))
                * (q**n - 1)
                * prod(q ** (2 * i) - 1 for i in range(1, n))
                // gcd(4, q**n - 1)
            )
        case Family.POMEGA_MINUS:
            return (
                q ** (n * (n - 1))
                * (q**n + 1)
                * prod(q ** (2 * i) - 1 for i in range(1, n))
                // gcd(4, q**n + 1)
            )
        case Family.SUZUKI:
            return q**2 * (q**2 + 1) * (q - 1)
        case Family.TRIALITY:
            return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
        case Family.G2:
            return q**6 * (q**6 - 1) * (q**2 - 1)
        case Family.REE:
            return q**3 * (q**3 + 1) * (q - 1)
        case Family.F4:
            return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
        case Family.TWISTED_F4:
            return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
        case Family.E6:
            return (
                q**36
                * prod(q**i - 1 for i in (12, 9, 8, 6, 5, 2))
                // gcd(3, q - 1)
            )
        case Family.TWISTED_E6:
            return (
                q**36
                * (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1)
                // gcd(3, q + 1)
            )
        case Family.E7:
            return q**63 * prod(q**i - 1 for i in (18, 14, 12, 10, 8, 6, 2)) // gcd(2, q - 1)
        case Family.E8:
            return q**120 * prod(q**i - 1 for i in (30, 24, 20, 18, 14, 12, 8, 2))
    raise GroupValidityError(f"no order formula for {family}")


@lru_cache(maxsize=1)
def _load_sporadic() -> dict[str, SporadicRecord]:
    raw = json.loads(
        resources.files("sylowscope").joinpath("data/sporadic.json").read_text(encoding="utf-8")
    )
    records: dict[str, SporadicRecord] = {}
    for entry in raw["groups"]:
        order = FactoredInteger({int(p): int(e) for p, e in entry["order"].items()})
        decimal = str(order.value)
        if decimal != entry["decimal"] or sum(map(int, decimal)) != entry["digit_sum"]:
            raise TableEncodingError(f"sporadic order checksum mismatch for {entry['name']}")
        records[entry["name"]] = SporadicRecord(
            name=entry["name"],
            order=order,
            abelian_odd_primes=frozenset(entry["abelian_odd_primes"]),
        )
    if set(records) != set(SPORADIC_NAMES):
        raise TableEncodingError("sporadic data does not list exactly the 26 sporadic groups")
    logger.debug("loaded %d sporadic records", len(records))
    return records


def sporadic_record(name: str) -> SporadicRecord:
    records = _load_sporadic()
    if name not in records:
        raise GroupValidityError(f"unknown sporadic group '{name}'", code="unknown-sporadic")
    return records[name]


def sporadic_records() -> list[SporadicRecord]:
    """All sporadic records, in the row order of the published table."""
    return list(_load_sporadic().values())


def exceptional_isomorphs(group: GroupId) -> tuple[GroupId, ...]:
    """Other identifiers of the same abstract group (low-rank coincidences)."""
    a5, l2_4, l2_5 = (
        GroupId(Family.ALTERNATING, n=5),
        GroupId(Family.PSL, n=2, q=4),
        GroupId(Family.PSL, n=2, q=5),
    )
    classes: list[tuple[GroupId, ...]] = [
        (a5, l2_4, l2_5),
        (GroupId(Family.ALTERNATING, n=6), GroupId(Family.PSL, n=2, q=9)),
        (GroupId(Family.ALTERNATING, n=8), GroupId(Family.PSL, n=4, q=2)),
        (GroupId(Family.PSL, n=2, q=7), GroupId(Family.PSL, n=3, q=2)),
        (GroupId(Family.PSU, n=4, q=2), GroupId(Family.PSP, n=2, q=3)),
    ]
    if group.family in (Family.PSP, Family.OMEGA_ODD) and group.n == 2:
        classes.append(
            (GroupId(Family.PSP, n=2, q=group.q), GroupId(Family.OMEGA_ODD, n=2, q=group.q))
        )
    found: list[GroupId] = []
    for cls in classes:
        if group in cls:
            found.extend(g for g in cls if g != group and g not in found)
    return tuple(found)


def rank_range(family: Family, max_rank: int) -> tuple[int | None, ...]:
    """Rank parameters of ``family`` up to ``max_rank``; ``(None,)`` for rankless families."""
    if family not in _MIN_RANK:
        return (None,)
    return tuple(range(_MIN_RANK[family], max_rank + 1))


def iter_lie_groups(max_rank: int, qs: Iterable[int]) -> Iterator[GroupId]:
    """Every valid Lie-type id with rank parameter <= ``max_rank`` and q drawn from ``qs``."""
    q_values = sorted(set(qs))
    for family in Family:
        if not family.is_lie:
            continue
        for q in q_values:
            for n in rank_range(family, max_rank):
                group = GroupId(family, n=n, q=q)
                if is_valid(group):
                    yield group
