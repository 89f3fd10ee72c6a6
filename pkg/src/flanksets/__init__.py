"""Exceptional sets of n*sigma_k(n) == 2 (mod phi(n)) and their flanking structure.

Two independent routes compute the same sets: a structural fast path driven
by one factorization per index (`exceptional`), and an exhaustive congruence
scan (`congruence`) used as the oracle. `flanking` classifies how members
recur across indexes and who flanks whom; `report` renders the result tables
deterministically; `cli` exposes everything as subcommands.
"""

from .arith import (
    DEFAULT_FACTOR_BUDGET,
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mod_pow,
    multiplicative_order,
    sigma_k_mod,
)
from .congruence import (
    DEFAULT_ORACLE_CAP,
    CongruenceInstance,
    brute_force_exceptional_set,
    satisfies_congruence,
)
from .errors import (
    BadShape,
    CapExceeded,
    FactorizationTimeout,
    MechanismViolation,
    NotCoprime,
    NotPrime,
)
from .exceptional import (
    DEFAULT_FAST_PATH_CAP,
    ExceptionalSet,
    exceptional_set,
    is_bound_sharp,
    membership_2p,
    theoretical_bound,
)
from .flanking import (
    FlankedRow,
    FlankerCandidate,
    FlankingClass,
    FlankingVariant,
    HlPair,
    OccurrencePattern,
    classify_flanking,
    flanked_values_scan,
    flanker_candidates,
    hl_pair_scan,
    least_negation_exponent,
    mod8_audit,
    occurrence_pattern,
    verify_flank,
)
from .report import (
    parse_flanked_csv,
    parse_hl_csv,
    parse_sets_csv,
    render_flanked,
    render_hl,
    render_sets,
)

__version__ = "0.1.0"

__all__ = [
    "BadShape",
    "CapExceeded",
    "CongruenceInstance",
    "DEFAULT_FACTOR_BUDGET",
    "DEFAULT_FAST_PATH_CAP",
    "DEFAULT_ORACLE_CAP",
    "ExceptionalSet",
    "Factorization",
    "FactorizationTimeout",
    "FlankedRow",
    "FlankerCandidate",
    "FlankingClass",
    "FlankingVariant",
    "HlPair",
    "MechanismViolation",
    "NotCoprime",
    "NotPrime",
    "OccurrencePattern",
    "brute_force_exceptional_set",
    "classify_flanking",
    "divisors",
    "euler_phi",
    "exceptional_set",
    "factorize",
    "flanked_values_scan",
    "flanker_candidates",
    "hl_pair_scan",
    "is_bound_sharp",
    "is_prime",
    "least_negation_exponent",
    "membership_2p",
    "mod8_audit",
    "mod_pow",
    "multiplicative_order",
    "occurrence_pattern",
    "parse_flanked_csv",
    "parse_hl_csv",
    "parse_sets_csv",
    "render_flanked",
    "render_hl",
    "render_sets",
    "satisfies_congruence",
    "sigma_k_mod",
    "theoretical_bound",
    "verify_flank",
]
