"""Argumentation solving through backdoors into tractable fragments.

Decides credulous/skeptical acceptance and enumerates extensions under
five semantics by finding a small backdoor into a tractable fragment
(acyclic, no-even-cycle, symmetric, bipartite), sweeping the 3^k partial
labelings of the backdoor, propagating labels and filtering the resulting
candidates. A brute-force oracle provides ground truth.
"""

from .backdoor import (
    Backdoor,
    detect,
    detect_acyc,
    detect_bip,
    detect_bruteforce,
    detect_sym,
    distance,
)
from .evaluation import (
    DetectionBudgetExceeded,
    NoEvenSubSolver,
    NotInFragmentError,
    OracleSubSolver,
    candidates_for_backdoor,
    candidates_for_labeling,
    complete_extensions,
    credulous,
    extensions,
    skeptical,
)
from .fileformats import ParseError, parse_apx, parse_tgf, serialize_apx
from .fragments import (
    FragmentClass,
    SearchBudgetExceeded,
    asymmetric_pairs,
    recognize,
)
from .framework import ArgumentationFramework, Semantics, satisfies
from .gadgets import (
    CnfFormula,
    generate_random,
    parse_dimacs,
    reduce_ca_bip,
    reduce_ca_sym,
    reduce_sa_bip,
    reduce_sa_sym,
)
from .labeling import (
    Label,
    PartialLabeling,
    is_compatible,
    labeling_from_set,
    propagate,
    residual,
)
from .oracle import (
    OracleGuardError,
    canonical_extensions,
    credulous_oracle,
    enumerate_all,
    enumerate_oracle,
    skeptical_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentationFramework",
    "Backdoor",
    "CnfFormula",
    "DetectionBudgetExceeded",
    "FragmentClass",
    "Label",
    "NoEvenSubSolver",
    "NotInFragmentError",
    "OracleGuardError",
    "OracleSubSolver",
    "ParseError",
    "PartialLabeling",
    "SearchBudgetExceeded",
    "Semantics",
    "asymmetric_pairs",
    "candidates_for_backdoor",
    "candidates_for_labeling",
    "canonical_extensions",
    "complete_extensions",
    "credulous",
    "credulous_oracle",
    "detect",
    "detect_acyc",
    "detect_bip",
    "detect_bruteforce",
    "detect_sym",
    "distance",
    "enumerate_all",
    "enumerate_oracle",
    "extensions",
    "generate_random",
    "is_compatible",
    "labeling_from_set",
    "parse_apx",
    "parse_dimacs",
    "parse_tgf",
    "propagate",
    "recognize",
    "reduce_ca_bip",
    "reduce_ca_sym",
    "reduce_sa_bip",
    "reduce_sa_sym",
    "residual",
    "satisfies",
    "serialize_apx",
    "skeptical",
    "skeptical_oracle",
]
