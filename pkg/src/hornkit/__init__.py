"""hornkit: closure systems, implication bases, prime implicates,
hypergraph dualization, and compact 012n enumeration of Horn model sets.
"""

from .canonical import (
    PseudoclosedReport,
    gd_base,
    is_minimum,
    pseudoclosed_sets,
    remove_redundancy,
    shock_minimize,
    trim_conclusions,
)
from .closure import (
    Closure,
    ClosureTrace,
    close,
    close_family,
    close_trace,
    entails,
    enumerate_closed_lectic,
    equivalent,
    is_closed,
    quasiclosure,
    step,
)
from .core import (
    AttrSet,
    Implication,
    ImplicationSet,
    MeasureReport,
    SetFamily,
    Universe,
    aggregate,
    load_family,
    load_implications,
    measures,
    normalize,
    parse_family,
    parse_implication,
    parse_implications,
    parse_universe,
    unit_expand,
)
from .direct import (
    OrderedBase,
    StemClassification,
    StemTable,
    canonical_direct,
    classify_stems,
    d_basis,
    ordered_close,
    stem_table,
)
from .dualize import (
    MaxNonCover,
    cmax_from_stems,
    max_noncover_table,
    max_noncovers,
    meet_irreducibles,
    minimal_keys,
    minimal_transversals,
    stems_from_meetirr,
)
from .errors import (
    BoundExceededError,
    HornkitError,
    NotAcyclicError,
    NotDirectError,
    ParseError,
    UniverseMismatchError,
)
from .primes import (
    HornClause,
    ImplicationGraph,
    acyclic_base,
    clauses_of,
    consensus_closure,
    implications_of,
    is_acyclic,
    is_prime_implicate,
    unit_primes,
)
from .rows import (
    HornSystem,
    Row012n,
    RowSystem,
    count,
    enumerate_compact,
    enumerate_horn,
    horn_satisfiable,
    impose_complication,
    impose_implication,
    near_minimum_base,
    to_012,
)

__all__ = [
    "AttrSet",
    "BoundExceededError",
    "Closure",
    "ClosureTrace",
    "HornClause",
    "HornSystem",
    "HornkitError",
    "Implication",
    "ImplicationGraph",
    "ImplicationSet",
    "MaxNonCover",
    "MeasureReport",
    "NotAcyclicError",
    "NotDirectError",
    "OrderedBase",
    "ParseError",
    "PseudoclosedReport",
    "Row012n",
    "RowSystem",
    "SetFamily",
    "StemClassification",
    "StemTable",
    "Universe",
    "UniverseMismatchError",
    "acyclic_base",
    "aggregate",
    "canonical_direct",
    "clauses_of",
    "classify_stems",
    "close",
    "close_family",
    "close_trace",
    "cmax_from_stems",
    "consensus_closure",
    "count",
    "d_basis",
    "entails",
    "enumerate_closed_lectic",
    "enumerate_compact",
    "enumerate_horn",
    "equivalent",
    "gd_base",
    "horn_satisfiable",
    "implications_of",
    "impose_complication",
    "impose_implication",
    "is_acyclic",
    "is_closed",
    "is_minimum",
    "is_prime_implicate",
    "load_family",
    "load_implications",
    "max_noncover_table",
    "max_noncovers",
    "measures",
    "meet_irreducibles",
    "minimal_keys",
    "minimal_transversals",
    "normalize",
    "ordered_close",
    "parse_family",
    "parse_implication",
    "parse_implications",
    "parse_universe",
    "pseudoclosed_sets",
    "quasiclosure",
    "remove_redundancy",
    "shock_minimize",
    "stem_table",
    "stems_from_meetirr",
    "step",
    "near_minimum_base",
    "to_012",
    "trim_conclusions",
    "unit_expand",
    "unit_primes",
]
