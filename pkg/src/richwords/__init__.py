"""Combinatorics-on-words toolkit.

Finite words and morphisms, an eertree with exact rollback for palindromic
richness, exact-rational repetition exponents, backtracking generation of
lexicographically least words, and a verification CLI that rebuilds and
checks the engineered rich threshold word.
"""

from .words import (
    AlphabetMismatchError,
    NotAPrefixError,
    OrderRelation,
    Word,
    factors,
    is_palindrome,
    lex_compare,
    reversal,
    strip_prefix,
)
from .morphisms import (
    CubeDetectedError,
    DecodeResult,
    FixedPointStream,
    Morphism,
    STANDARD,
    compose,
    fixed_point_prefix,
    is_order_preserving,
    strip_3free_header,
)
from .palindromes import (
    Eertree,
    ReturnWord,
    RichnessReport,
    check_glen_characterization,
    complete_return,
    is_rich,
    palindromic_factors_naive,
)
from .repetitions import (
    ExponentReport,
    FreenessPolicy,
    dejean_threshold,
    extension_exponent,
    is_free,
    max_exponent,
    max_exponent_bruteforce,
    rich_threshold,
)
from .search import (
    FreenessChecker,
    RichnessChecker,
    SearchOutcome,
    check_recurrence,
    lex_least_extendable,
    lex_least_of_length,
)
from .verify import (
    RunConfig,
    VerificationReport,
    build_ell,
    build_gh,
    build_v,
    exponent_sweep,
    run_all,
    verify_controls,
    verify_exponent_oracles,
    verify_lemma6,
    verify_lemma9,
    verify_main_theorem,
    verify_morphism_constants,
    verify_morphism_oracles,
    verify_prefix_palindrome,
    verify_recurrence,
    verify_richness_oracles,
)

__version__ = "0.1.0"
