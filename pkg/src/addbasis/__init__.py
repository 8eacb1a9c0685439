"""Search tools for extremal restricted additive 2-bases."""

__version__ = "0.1.0"

from .core import (  # noqa: E402,F401
    Basis,
    BasisClass,
    BasisError,
    SumCoverage,
    as_basis,
    basis_range,
    classify,
    covers,
    format_basis,
    mirror,
    parse_basis,
    sum_coverage,
)
from .enumeration import (  # noqa: E402,F401
    EnumSpec,
    PartialState,
    count_admissible,
    enumerate_admissible,
    gaps_prune,
    next_candidates,
)
from .mitm import (  # noqa: E402,F401
    SearchReport,
    SearchTarget,
    assemble,
    find_extremal_restricted,
    search_restricted,
    upper_bound_restricted,
)
from .oracle import OracleResult, brute_force  # noqa: E402,F401
