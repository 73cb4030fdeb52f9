"""msum: exact integer-set algebra around sums and multisums.

A value m is a *sum* of a set S when m = s + t for members s, t (equal
allowed), and a *multisum* when it has two unordered representations:
equivalently m = s + t = u + v with all four members distinct except
possibly u = v.  The package provides the pair-count profile machinery,
bounded closure under sums or multisums, detection and verification of
eventually linear tails, a constructive certification pipeline that
extracts the linear modulus from a qualifying prefix, and a census of the
related set families.
"""

from .census import FAMILIES, CensusRecord, density_extremes, enumerate_family
from .closure import ClosureResult, multisum_closure, sum_closure
from .construction import (
    ConditionReport,
    DerivationTrace,
    LadderPair,
    LadderResolution,
    MinimalPeriodTrace,
    ModulusResult,
    MultiplesTrace,
    MultisumCertificate,
    PeriodStep,
    SequencePrefix,
    WitnessQuintuple,
    check_conditions,
    confirm_multiples,
    derive_witness,
    extract_modulus,
    minimize_modulus,
    resolve_ladder_pair,
    search_quintuples,
)
from .errors import (
    ConditionError,
    MsumError,
    ParameterError,
    ResourceLimitError,
    SetFormatError,
    WitnessError,
    bmax,
)
from .intset import (
    Classification,
    IntSet,
    SumProfile,
    classify,
    multisums,
    strict_multisums,
    sum_profile,
    sums,
)
from .linearity import (
    LinearityCertificate,
    LinearityResult,
    detect_linear,
    verify_certificate,
)
from .textio import format_set_text, parse_set_text, read_set_file, write_set_file

__version__ = "0.1.0"

__all__ = [
    "IntSet",
    "SumProfile",
    "Classification",
    "sum_profile",
    "sums",
    "multisums",
    "strict_multisums",
    "classify",
    "ClosureResult",
    "multisum_closure",
    "sum_closure",
    "LinearityCertificate",
    "LinearityResult",
    "detect_linear",
    "verify_certificate",
    "SequencePrefix",
    "ConditionReport",
    "check_conditions",
    "WitnessQuintuple",
    "MultisumCertificate",
    "MultiplesTrace",
    "search_quintuples",
    "confirm_multiples",
    "LadderPair",
    "LadderResolution",
    "resolve_ladder_pair",
    "DerivationTrace",
    "derive_witness",
    "PeriodStep",
    "MinimalPeriodTrace",
    "minimize_modulus",
    "ModulusResult",
    "extract_modulus",
    "FAMILIES",
    "CensusRecord",
    "enumerate_family",
    "density_extremes",
    "parse_set_text",
    "read_set_file",
    "format_set_text",
    "write_set_file",
    "MsumError",
    "ParameterError",
    "SetFormatError",
    "ResourceLimitError",
    "ConditionError",
    "WitnessError",
    "bmax",
]
