"""Exact reconstruction of the Plimpton 322 tablet."""

from .errors import CATALOG, ErrorModel, classify, regular_terminal_lines, simulate_error
from .problems import CaneProblem, solve_cane
from .procedures import (
    ProcedureSpec,
    TableRow,
    build_table,
    derive_bounds,
    enumerate_ratios,
    gap_analysis,
    named_procedure,
    pool_statistics,
    procedure_table,
    shape_filter,
)
from .sexagesimal import (
    Sexagesimal,
    approximate_reciprocal,
    expand,
    format_sexagesimal,
    is_regular,
    parse_sexagesimal,
    reciprocal,
    regular_factorization,
    sqrt2_constant,
    standard_reciprocal_table,
)
from .tablet import ErrorRecord, Tablet, attested_tablet, corrected_tablet, diff_tablets
from .triples import GeneratingPair, Triple, column_one, pq_triple, r_method

__version__ = "0.1.0"
