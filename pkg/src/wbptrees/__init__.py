"""Exact counting of weighted bi-colored plane trees with prescribed
passports, with an independent brute-force oracle, closed forms for the
(q^p | p^q) family, and the component census of HCMU sphere moduli spaces."""

from .passport import (
    STAR,
    ConsistencyError,
    LabeledWeight,
    Passport,
    PassportPartition,
    PassportSyntaxError,
    divide,
    divisor_set,
    enumerate_partitions,
    fill,
    forget_fill,
    g_vector,
    parse_passport,
    print_passport,
)
from .count import (
    CountReport,
    big_g,
    count_ftree,
    count_trees,
    count_trees_sym,
    divisors,
    moebius,
    report,
    totient,
)
from .closedform import count_closed, g_table_closed
from .oracle import (
    CanonicalCode,
    WBPTree,
    aut_order,
    canonical_code,
    count_labeled_direct,
    enumerate_trees,
    labeled_symmetry_census,
    symmetry_census,
)
from .hcmu import PqCensus, admissible, census, run_verification

__version__ = "0.1.0"

__all__ = [
    "STAR", "ConsistencyError", "LabeledWeight", "Passport",
    "PassportPartition", "PassportSyntaxError", "divide", "divisor_set",
    "enumerate_partitions", "fill", "forget_fill", "g_vector",
    "parse_passport", "print_passport",
    "CountReport", "big_g", "count_ftree", "count_trees", "count_trees_sym",
    "divisors", "moebius", "report", "totient",
    "count_closed", "g_table_closed",
    "CanonicalCode", "WBPTree", "aut_order", "canonical_code",
    "count_labeled_direct", "enumerate_trees", "labeled_symmetry_census",
    "symmetry_census",
    "PqCensus", "admissible", "census", "run_verification",
]
