"""Exact ordinal arithmetic, the ordinal bicyclic inverse monoids, and a
bounded verifier for their locally compact neighborhood topology."""

from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    OrdinalSyntaxError,
    SubtractionUndefinedError,
    add,
    cnf_terms,
    compare,
    fmt,
    is_additively_indecomposable,
    is_limit,
    make,
    nat,
    omega_pow,
    order_type_oracle,
    parse,
    subtract,
)
from .bicyclic import (
    ContextMismatchError,
    Element,
    Monoid,
    classic_from_word,
    classic_to_word,
    embed,
    fiber_member,
    fmt_element,
    identity,
    inverse,
    is_idempotent,
    multiply,
    parse_element,
)
from .orderiso import UpperSetIso, apply, compose, identity_iso, represent, unrepresent
from .topology import (
    MONOID,
    Neighborhood,
    Singleton,
    Verdict,
    classify_forced_isolated,
    enumerate_prefix,
    hausdorff_separate,
    inv_nbhd,
    is_isolated,
    member,
    nbhd_difference,
)
from .checker import (
    Query,
    Report,
    classify_case,
    refutation_search,
    sweep,
    verify_inversion_continuity,
    verify_multiplication_continuity,
)

__version__ = "0.1.0"
