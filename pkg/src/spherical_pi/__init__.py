"""Exact computation of component and fundamental group data for
spherical homogeneous spaces, from their lattice data."""

from .arith import divisors, is_prime
from .catalog import (
    CHARACTERISTICS,
    CatalogEntry,
    EntryRun,
    ExpectedPi,
    catalog,
    catalog_entry,
    run_entry,
)
from .documents import (
    ParseError,
    document_dict,
    format_pi,
    format_quotient,
    parse,
    report_dict,
    serialize_datum,
    serialize_report,
)
from .intmat import (
    DimensionError,
    HnfResult,
    IntMatrix,
    SnfResult,
    hnf,
    snf,
    solve_in_lattice,
    stack_rows,
)
from .lattices import (
    FinGenAbQuotient,
    Lattice,
    NotASublatticeError,
    SaturatedSet,
    dual_saturation,
    intersect,
    p_prime_part,
    quotient,
)
from .oracle import (
    ENUMERATION_BUDGET,
    EnumerationBudgetError,
    MatchResult,
    TorsionGroupSample,
    enumerate_torsion,
    structure_match,
)
from .root_data import (
    ADJOINT,
    SIMPLY_CONNECTED,
    RootDatum,
    build_standard,
    cartan_matrix,
    coroot_saturation,
    product,
    restrict_coroots,
    torus,
)
from .spherical import (
    CheckOutcome,
    PiResult,
    Report,
    SphericalDatum,
    ValidationError,
    ambient_color_saturation,
    ambient_saturation_quotient,
    color_saturation,
    full_report,
    pi0_p_prime,
    pi1_p_prime,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ADJOINT",
    "CHARACTERISTICS",
    "CatalogEntry",
    "CheckOutcome",
    "DimensionError",
    "ENUMERATION_BUDGET",
    "EntryRun",
    "EnumerationBudgetError",
    "ExpectedPi",
    "FinGenAbQuotient",
    "HnfResult",
    "IntMatrix",
    "Lattice",
    "MatchResult",
    "NotASublatticeError",
    "ParseError",
    "PiResult",
    "Report",
    "RootDatum",
    "SIMPLY_CONNECTED",
    "SaturatedSet",
    "SnfResult",
    "SphericalDatum",
    "TorsionGroupSample",
    "ValidationError",
    "ambient_color_saturation",
    "ambient_saturation_quotient",
    "build_standard",
    "cartan_matrix",
    "catalog",
    "catalog_entry",
    "color_saturation",
    "coroot_saturation",
    "divisors",
    "document_dict",
    "dual_saturation",
    "enumerate_torsion",
    "format_pi",
    "format_quotient",
    "full_report",
    "hnf",
    "intersect",
    "is_prime",
    "p_prime_part",
    "parse",
    "pi0_p_prime",
    "pi1_p_prime",
    "product",
    "quotient",
    "report_dict",
    "restrict_coroots",
    "run_entry",
    "serialize_datum",
    "serialize_report",
    "snf",
    "solve_in_lattice",
    "stack_rows",
    "structure_match",
    "torus",
    "validate",
]
