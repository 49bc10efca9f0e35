"""Horn-bound knowledge compilation with model-based belief change.

A knowledge base is kept as a pair of Horn formulas bracketing it from
below and above.  Updates step both bounds (linear time for single Horn
clauses), clause queries answer three-valued in linear time, and every
operator also exists as an exact desk-scale oracle for cross-checking.
"""

from .change import (
    MODEL_BASED,
    FormalismTag,
    fuv_update,
    maximal_consistent_subsets,
    update_cnf,
    update_models,
    widtio_update,
)
from .config import DEFAULT_LIMITS, Limits
from .errors import (
    BadIndex,
    EmptyClause,
    EmptyModelSet,
    HornkitError,
    NeedsSemanticFallback,
    NotClosed,
    NotHorn,
    NotPure,
    ParseError,
    SetTooLarge,
    TautologicalClause,
    TooLarge,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownVariable,
    UnsatisfiableBase,
    UnsatisfiableUpdate,
)
from .fastpath import fast_update, fast_update_pick
from .formula import (
    CNF,
    Clause,
    KnowledgeBase,
    Literal,
    VarUniverse,
    condition,
    format_symbolic,
    negate_clause,
    parse_clause,
    parse_dimacs,
    parse_formula,
    parse_symbolic,
)
from .hornsat import entails, entails_cnf, horn_sat
from .recompile import (
    BeliefState,
    QueryVerdict,
    StepRecord,
    check_bracket,
    init_compile,
    init_horn,
    query,
    read_session,
    session_from_json,
    session_to_json,
    step,
    write_session,
)
from .reductions import (
    Graph,
    Hypergraph,
    fuv_reduction,
    maxmodel,
    nodecover_reduction,
    parse_graph,
    parse_hypergraph,
    pure3sat_reduction,
    transversals,
)
from .semantics import (
    Model,
    ModelSet,
    and_closure,
    characteristic_models,
    cores_from_models,
    enumerate_models,
    envelope_from_models,
    format_models,
    is_horn_representable,
    parse_models,
)

__version__ = "0.1.0"
