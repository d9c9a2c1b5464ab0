"""Picture fuzzy set algebra, topology construction and law checking.

Grades are exact scaled integers (resolution 1/10000); every operation is
a pure function over immutable values, so the package is safe for
unrestricted concurrent use.
"""

from .core import (
    SCALE,
    Grade,
    InclusionMode,
    MembershipTriple,
    PictureFuzzySet,
    Universe,
    complement,
    equals,
    full,
    includes,
    intersection,
    intersection_many,
    null,
    pfs_from_decimals,
    refusal,
    union,
    union_many,
)
from .construction import (
    ConstructionTrace,
    chain_topology,
    generate_from_base,
    generate_from_subbase,
    intersection_closure,
    trivial_topology,
    union_closure,
)
from .families import Family, NamedSet, canonical_order
from .familydoc import family_to_doc, load_family, save_family
from .laws import (
    CATALOG,
    CATALOG_ORDER,
    Exhaustive,
    Fixtures,
    LawVerdict,
    Randomized,
    SearchDomain,
    check_law,
    check_law_default,
    default_domains,
    run_catalog,
)
from .relations import (
    RhoClass,
    RhoPartition,
    balanced,
    partition_by_rho,
    rank_of,
    rho_equivalent,
    rho_vector,
    zero_rho_join,
)
from .topology import (
    AxiomReport,
    BaseReport,
    CoverageReport,
    MinimalityReport,
    Violation,
    ViolationKind,
    check_axioms,
    check_base,
    check_subbase_minimality,
    verify_base_for,
)
from . import errors

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
