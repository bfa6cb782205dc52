"""Small strongly admissible labellings for abstract argumentation.

The package computes labellings that certify membership of an argument in
the grounded extension of an argumentation framework, together with the
min-max numbering that witnesses strong admissibility.  The fast path is a
bottom-up construction followed by a pruning pass; a brute-force oracle is
available for cross-checking on small frameworks.
"""

from .af import (
    ArgumentationFramework,
    load_af,
    parse_apx,
    parse_tgf,
    serialize_apx,
    serialize_tgf,
)
from .construct import construct_for, grounded_with_minmax
from .errors import (
    MismatchedFrameworkError,
    NotAdmissibleError,
    NotConflictFreeError,
    NotInGroundedError,
    OracleTooLargeError,
    ParseError,
    PreconditionError,
    UndeclaredArgumentError,
)
from .labelling import (
    IN,
    INFINITY,
    OUT,
    UNDEC,
    Certificate,
    ConstructResult,
    Label,
    Labelling,
    format_certificate,
    parse_certificate,
)
from .oracle import (
    DEFAULT_LIMIT,
    OracleLimit,
    enumerate_all_strongly_admissible_labellings,
    enumerate_strongly_admissible_sets,
    minimal_strongly_admissible_for,
)
from .pipeline import ComparisonRow, compare, small_strongly_admissible
from .prune import prune, prune_unchecked
from .semantics import (
    args2lab,
    characteristic,
    compute_minmax,
    defends,
    grounded_extension_fixpoint,
    is_admissible_labelling,
    is_complete_labelling,
    is_conflict_free,
    is_strongly_admissible_labelling,
    is_strongly_admissible_set,
    lab2args,
    lab_leq,
    lab_size,
    minmax_violations,
    verify_minmax,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentationFramework",
    "Certificate",
    "ComparisonRow",
    "ConstructResult",
    "DEFAULT_LIMIT",
    "IN",
    "INFINITY",
    "Label",
    "Labelling",
    "MismatchedFrameworkError",
    "NotAdmissibleError",
    "NotConflictFreeError",
    "NotInGroundedError",
    "OUT",
    "OracleLimit",
    "OracleTooLargeError",
    "ParseError",
    "PreconditionError",
    "UNDEC",
    "UndeclaredArgumentError",
    "args2lab",
    "characteristic",
    "compare",
    "compute_minmax",
    "construct_for",
    "defends",
    "enumerate_all_strongly_admissible_labellings",
    "enumerate_strongly_admissible_sets",
    "format_certificate",
    "grounded_extension_fixpoint",
    "grounded_with_minmax",
    "is_admissible_labelling",
    "is_complete_labelling",
    "is_conflict_free",
    "is_strongly_admissible_labelling",
    "is_strongly_admissible_set",
    "lab2args",
    "lab_leq",
    "lab_size",
    "load_af",
    "minimal_strongly_admissible_for",
    "minmax_violations",
    "parse_apx",
    "parse_certificate",
    "parse_tgf",
    "prune",
    "prune_unchecked",
    "serialize_apx",
    "serialize_tgf",
    "small_strongly_admissible",
    "verify_minmax",
]
