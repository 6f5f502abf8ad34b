"""sylowscope — Sylow subgroups of the finite simple groups."""

__version__ = "0.1.0"

from sylowscope.catalog import parse_group, render_group
from sylowscope.classifier import classify, classify_sylow2, is_elementary_abelian
from sylowscope.enumerator import enumerate_by_structure
from sylowscope.models import (
    EnumMatch,
    Family,
    GroupId,
    SylowVerdict,
    VerdictKind,
)

__all__ = [
    "EnumMatch",
    "Family",
    "GroupId",
    "SylowVerdict",
    "VerdictKind",
    "__version__",
    "classify",
    "classify_sylow2",
    "enumerate_by_structure",
    "is_elementary_abelian",
    "parse_group",
    "render_group",
]
