"""Data models for sylowscope."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import StrEnum
from math import prod
from typing import Any

FORMAT_VERSION = "sylowscope/1"


class Family(StrEnum):
    """Families of finite simple groups, tagged by their textual prefix."""

    ALTERNATING = "A"
    PSL = "PSL"
    PSU = "PSU"
    PSP = "PSp"
    OMEGA_ODD = "Omega"
    POMEGA_PLUS = "POmega+"
    POMEGA_MINUS = "POmega-"
    SUZUKI = "2B2"
    TRIALITY = "3D4"
    G2 = "G2"
    REE = "2G2"
    F4 = "F4"
    TWISTED_F4 = "2F4"
    E6 = "E6"
    TWISTED_E6 = "2E6"
    E7 = "E7"
    E8 = "E8"
    SPORADIC = "Sporadic"

    @property
    def is_lie(self) -> bool:
        return self not in (Family.ALTERNATING, Family.SPORADIC)

    @property
    def is_classical(self) -> bool:
        return self in CLASSICAL_FAMILIES

    @property
    def is_exceptional(self) -> bool:
        return self.is_lie and not self.is_classical


CLASSICAL_FAMILIES = frozenset(
    {
        Family.PSL,
        Family.PSU,
        Family.PSP,
        Family.OMEGA_ODD,
        Family.POMEGA_PLUS,
        Family.POMEGA_MINUS,
    }
)

LIE_FAMILIES: tuple[Family, ...] = tuple(f for f in Family if f.is_lie)


class VerdictKind(StrEnum):
    TRIVIAL = "trivial"
    ABELIAN = "abelian"
    NONABELIAN = "nonabelian"


class Rule(StrEnum):
    """Which result decided a verdict."""

    COPRIME = "Coprime"
    THM_2_1 = "Thm2.1"
    COR_2_2 = "Cor2.2"
    THM_3_7 = "Thm3.7"
    THM_3_8 = "Thm3.8"
    COR_3_9 = "Cor3.9"
    EXC_PSL3 = "Exc-PSL3"
    EXC_PSU3 = "Exc-PSU3"
    TABLE4 = "Table4"
    R17_CYCLIC = "R17-cyclic"
    ORDER_BOUND = "Order-bound"
    WALTER = "Walter"


class OrderMarker(StrEnum):
    """Stand-in for the multiplicative order m when it is not defined."""

    DEFINING = "defining"
    ABSENT = "absent"


class Scope(StrEnum):
    ALTERNATING = "alternating"
    LIE = "lie"
    SPORADIC = "sporadic"


@dataclass(frozen=True)
class GroupId:
    """A validated identifier of a finite simple group.

    ``n`` is the parameter of the family's name: the degree of A_n, PSL_n and PSU_n,
    and the half-dimension for PSp_{2n}, Omega_{2n+1} and POmega^{+-}_{2n}.
    Rankless families leave it ``None``; ``q`` is ``None`` for A_n and sporadic groups.
    """

    family: Family
    n: int | None = None
    q: int | None = None
    sporadic_name: str | None = None


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer stored as its prime factorisation."""

    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for p, e in self.factors.items():
            if p < 2 or e < 1:
                raise ValueError(f"invalid prime power {p}^{e}")

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors.items())

    def valuation(self, p: int) -> int:
        return self.factors.get(p, 0)

    @property
    def primes(self) -> list[int]:
        return sorted(self.factors)

    def render(self) -> str:
        return "·".join(
            str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(self.factors.items())
        ) or "1"


@dataclass(frozen=True)
class ResidueClassSet:
    """A set of residues modulo ``modulus``, kept sorted and duplicate free."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if any(b <= a for a, b in zip(self.residues, self.residues[1:], strict=False)):
            raise ValueError("residues must be strictly increasing")
        if self.residues and not (0 <= self.residues[0] and self.residues[-1] < self.modulus):
            raise ValueError(f"residues must lie in [0, {self.modulus})")

    def __contains__(self, q: object) -> bool:
        return isinstance(q, int) and q % self.modulus in self.residues

    def __len__(self) -> int:
        return len(self.residues)

    def render(self) -> str:
        return f"q ≡ {', '.join(map(str, self.residues))} (mod {self.modulus})"


@dataclass(frozen=True)
class CycloProfile:
    """The data (d, h, e_L) of the cyclotomic factorisation |L(q)| = q^h prod Phi_m^e / d."""

    d: int
    h: int
    e: dict[int, int]


@dataclass(frozen=True)
class SporadicRecord:
    """One row of the sporadic table: Atlas order and the primes marked abelian."""

    name: str
    order: FactoredInteger
    abelian_odd_primes: frozenset[int]


@dataclass(frozen=True)
class CyclicFactor:
    """``multiplicity`` copies of the cyclic group of order ``order``."""

    order: int
    multiplicity: int

    def render(self) -> str:
        return f"C{self.order}" if self.multiplicity == 1 else f"C{self.order}^{self.multiplicity}"


@dataclass(frozen=True)
class SylowVerdict:
    """Outcome of a Sylow classification."""

    group: GroupId
    r: int
    m: int | OrderMarker
    t: int
    kind: VerdictKind
    rule: Rule
    structure: tuple[CyclicFactor, ...] = ()

    @property
    def is_abelian(self) -> bool:
        return self.kind in (VerdictKind.TRIVIAL, VerdictKind.ABELIAN)

    @property
    def order_exponent(self) -> int:
        """log_r of the order of the described structure."""
        total = 0
        for factor in self.structure:
            order, s = factor.order, 0
            while order > 1:
                order //= self.r
                s += 1
            total += s * factor.multiplicity
        return total

    def render_structure(self) -> str:
        if self.kind is VerdictKind.TRIVIAL:
            return "1"
        if not self.structure:
            return "—"
        return " × ".join(f.render() for f in self.structure)


@dataclass(frozen=True)
class EnumMatch:
    """A family of simple groups whose Sylow r-subgroup has a given abelian type.

    ``ranks`` lists admissible values of ``n`` (empty for rankless families);
    ``q`` pins a single field size (defining characteristic); ``condition`` constrains
    q modulo its modulus, and ``valuation`` is the required v_r(q^m - 1).
    """

    r: int
    family: Family
    m: int | OrderMarker
    structure: CyclicFactor
    ranks: tuple[int, ...] = ()
    q: int | None = None
    sporadic_name: str | None = None
    condition: ResidueClassSet | None = None
    valuation: int = 1
    rules: tuple[Rule, ...] = ()


@dataclass(frozen=True)
class CongruenceReport:
    """Residue classes of q giving an elementary abelian Sylow r-subgroup, for one family."""

    family: Family
    n: int | None
    r: int
    m: int
    residues: ResidueClassSet
    criterion: int
    structure: CyclicFactor
    rule: Rule

    @property
    def abelian(self) -> bool:
        return self.criterion == 0 or self.rule in (Rule.EXC_PSL3, Rule.EXC_PSU3)


@dataclass(frozen=True)
class OutputRecord:
    """One line of structured output."""

    command: str
    query: dict[str, Any]
    result: dict[str, Any]
    version: str = FORMAT_VERSION

    def to_json(self) -> str:
        payload = {
            "version": self.version,
            "command": self.command,
            "query": self.query,
            "result": self.result,
        }
        return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


@dataclass(frozen=True)
class ElementaryCheck:
    """Whether an abelian Sylow subgroup is elementary abelian, with the evidence used.

    ``witness`` is the residue set that q must fall in for cross-characteristic Lie
    groups; other cases carry a short ``basis`` note instead.
    """

    elementary: bool
    witness: ResidueClassSet | None = None
    basis: str = ""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check.

    ``findings`` are documented discrepancies with the published tables; they are
    reported but never make a check fail.
    """

    name: str
    checked: int
    failures: tuple[str, ...] = ()
    findings: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures
