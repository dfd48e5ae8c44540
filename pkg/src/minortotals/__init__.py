"""Unit's-digit gaps in the minor totals (partial sums) of integer sequences."""

from .difftab import (
    DifferenceTable,
    ResidueProfile,
    build_table,
    certify_faulhaber,
    certify_simple,
    predict_profile,
)
from .oracle import DigitHistogram, empirical_histogram, oracle_profile, witness
from .seqcore import (
    MinorTotal,
    PrimeTable,
    SequenceId,
    minor_total_accumulated,
    minor_total_closed,
    term,
)

__version__ = "0.1.0"
