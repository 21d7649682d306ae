"""Extended Ostrowski numeration for Sturmian words.

Standard words and characteristic-word prefixes, valid representations
with their bend/unbend rewrite system, palindrome occurrence analysis,
and a palindromic-length engine with unboundedness witnesses.
"""

from .errors import (
    BudgetExceeded,
    ConstructionFailed,
    DirectiveExhausted,
    DomainError,
    InsufficientDirective,
    InternalNontermination,
    InvalidCuts,
    InvalidInput,
    NotABoundary,
    NotAnOccurrence,
    NotApplicable,
    NotAPalindrome,
    ParseError,
    SturmianError,
)
from .numeration import (
    Representation,
    enumerate_valid,
    is_legal,
    is_ostrowski,
    is_valid,
    ostrowski,
    value,
)
from .pal_length import (
    ENGINE,
    FactorizationResult,
    WitnessSpec,
    build_witness,
    counting_audit,
    pal_length_fast,
    pal_length_oracle,
    verify_witness,
)
from .palindromes import (
    PalindromeOccurrence,
    ReprPair,
    classify_central,
    enumerate_repr_pairs,
    is_palindrome_occurrence,
    maximal_extension,
    palindrome_repr_pair,
)
from .transforms import (
    StepKind,
    TransformStep,
    TransformTrace,
    bend,
    normalize,
    reachable_set,
    trace_between,
    unbend,
    z_profile,
)
from .words import (
    BlockPartition,
    BlockTag,
    DirectiveSequence,
    WordFamily,
    build_family,
    central_word,
    characteristic_prefix,
    decompose_prefix_at_occurrence,
    n_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BlockPartition",
    "BlockTag",
    "BudgetExceeded",
    "ConstructionFailed",
    "DirectiveExhausted",
    "DirectiveSequence",
    "DomainError",
    "ENGINE",
    "FactorizationResult",
    "InsufficientDirective",
    "InternalNontermination",
    "InvalidCuts",
    "InvalidInput",
    "NotABoundary",
    "NotAnOccurrence",
    "NotAPalindrome",
    "NotApplicable",
    "PalindromeOccurrence",
    "ParseError",
    "Representation",
    "ReprPair",
    "StepKind",
    "SturmianError",
    "TransformStep",
    "TransformTrace",
    "WitnessSpec",
    "WordFamily",
    "bend",
    "build_family",
    "build_witness",
    "central_word",
    "characteristic_prefix",
    "classify_central",
    "counting_audit",
    "decompose_prefix_at_occurrence",
    "enumerate_repr_pairs",
    "enumerate_valid",
    "is_legal",
    "is_ostrowski",
    "is_palindrome_occurrence",
    "is_valid",
    "maximal_extension",
    "n_partition",
    "normalize",
    "ostrowski",
    "pal_length_fast",
    "pal_length_oracle",
    "palindrome_repr_pair",
    "reachable_set",
    "trace_between",
    "unbend",
    "value",
    "verify_witness",
    "z_profile",
]
