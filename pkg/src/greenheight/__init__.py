"""Finite-semigroup computation: Green's relation posets and heights,
ideal-type subsets with relative heights, height bounds with reports,
string-rewriting presentations, and reference constructions.
"""

from . import constructions
from .core import (
    FiniteSemigroup,
    SubsetHandle,
    closure_violation,
    format_table_text,
    from_table,
    parse_table_text,
    product_of_sets,
    restrict_to_subsemigroup,
)
from .errors import (
    CapExceeded,
    NotAssociative,
    NotClosed,
    NotConfluent,
    ParseError,
    PreconditionViolated,
    UnsupportedInfinite,
)
from .green import (
    ClassPoset,
    InverseStructure,
    KernelInfo,
    class_poset,
    has_local_right_identity,
    height,
    idempotents,
    inverse_structure,
    kernel,
    leq,
    regular_elements,
)
from .ideals import (
    IDEAL_KINDS,
    BoundReport,
    bound_report,
    chain_into_kernel,
    chain_param,
    generate,
    is_kind,
    relative_height,
)
from .rewriting import (
    ZERO,
    CriticalPair,
    RewritingSystem,
    Rule,
    critical_pairs,
    element_index,
    enumerate_irreducibles,
    format_presentation,
    is_complete,
    parse_presentation,
    reduce_word,
    semigroup_from_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapExceeded",
    "ClassPoset",
    "CriticalPair",
    "FiniteSemigroup",
    "IDEAL_KINDS",
    "InverseStructure",
    "KernelInfo",
    "NotAssociative",
    "NotClosed",
    "NotConfluent",
    "ParseError",
    "PreconditionViolated",
    "RewritingSystem",
    "Rule",
    "SubsetHandle",
    "UnsupportedInfinite",
    "ZERO",
    "bound_report",
    "chain_into_kernel",
    "chain_param",
    "class_poset",
    "closure_violation",
    "constructions",
    "critical_pairs",
    "element_index",
    "enumerate_irreducibles",
    "format_presentation",
    "format_table_text",
    "from_table",
    "generate",
    "has_local_right_identity",
    "height",
    "idempotents",
    "inverse_structure",
    "is_complete",
    "is_kind",
    "kernel",
    "leq",
    "parse_presentation",
    "parse_table_text",
    "product_of_sets",
    "reduce_word",
    "regular_elements",
    "relative_height",
    "restrict_to_subsemigroup",
    "semigroup_from_presentation",
]
