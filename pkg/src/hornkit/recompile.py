"""Incremental recompilation: a pair of Horn bounds stepped through updates.

A belief state keeps a lower (strict) and an upper (relaxed) Horn bound.
Each update replaces the upper bound by the Horn envelope of its update
and the lower bound by a Horn core of its update, taking the linear fast
path whenever the update is a single Horn clause it can handle.  Queries
answer three-valued from the two bounds in linear time; the bounds may
stop bracketing each other under the non-additive formalisms, which is
surfaced, never repaired.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum

from .change import MODEL_BASED, FormalismTag, update_cnf
from .config import DEFAULT_LIMITS, Limits
from .errors import (
    NeedsSemanticFallback,
    NotHorn,
    ParseError,
    UniverseMismatch,
    UnsatisfiableBase,
    UnsatisfiableUpdate,
)
from .fastpath import fast_update, fast_update_pick
from .formula import CNF, Clause, VarUniverse, parse_clause
from .hornsat import entails, entails_cnf, horn_sat
from .semantics import cores_from_models, enumerate_models, envelope_from_models


class QueryVerdict(str, Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"
    CONTRADICTORY_BOUNDS = "ContradictoryBounds"


@dataclass(frozen=True)
class StepRecord:
    """One applied update: the formula, which path ran, and the core pick.

    core_pick is the 1-based index into the fast-path core list, or 0 when
    the lower bound came from the semantic core selection.  gap is the
    number of upper-bound models outside the lower bound, when the
    universe is small enough to count them.
    """

    phi: CNF
    path: str
    core_pick: int
    gap: int | None = None


@dataclass(frozen=True)
class BeliefState:
    """Immutable (lower, upper) Horn pair with its formalism and history."""

    universe: VarUniverse
    lower: CNF
    upper: CNF
    formalism: FormalismTag
    log: tuple = ()


def _require_model_based(formalism) -> FormalismTag:
    tag = FormalismTag(formalism)
    if tag not in MODEL_BASED:
        raise ValueError(f"belief states require a model-based formalism, not {tag.value}")
    return tag


def init_horn(g: CNF, formalism: FormalismTag) -> BeliefState:
    """Start from a Horn formula; both bounds equal its canonical form."""
    tag = _require_model_based(formalism)
    if not g.horn():
        raise NotHorn("init_horn requires a Horn formula")
    if horn_sat(g) is None:
        raise UnsatisfiableBase("initial formula is unsatisfiable")
    canon = g.canonical()
    return BeliefState(g.universe, canon, canon, tag)


def init_compile(g: CNF, formalism: FormalismTag, *, core_mode: str = "exact-max",
                 limits: Limits = DEFAULT_LIMITS) -> BeliefState:
    """Start from an arbitrary formula by compiling its envelope and core."""
    tag = _require_model_based(formalism)
    ms = enumerate_models(g, limits)
    if not ms:
        raise UnsatisfiableBase("initial formula is unsatisfiable")
    upper = envelope_from_models(ms, limits)
    lower = cores_from_models(ms, core_mode, limits)[0]
    return BeliefState(g.universe, lower, upper, tag)


def _gap_size(state: BeliefState, limits: Limits):
    if len(state.universe) > limits.gap_vars:
        return None
    upper = enumerate_models(state.upper, limits)
    lower = enumerate_models(state.lower, limits)
    return len(upper.masks - lower.masks)


def step(state: BeliefState, phi: CNF, *, pick="first", core_mode: str = "exact-max",
         allow_fallback: bool = True, limits: Limits = DEFAULT_LIMITS) -> BeliefState:
    """Apply one update to both bounds and append it to the log.

    Single Horn-clause updates take the linear fast path per bound; the
    rest (multi-clause or non-Horn updates, and winslett when a bound is
    consistent with the clause) go through exact enumeration.  With
    allow_fallback false the winslett consistent case raises instead.
    """
    if phi.universe != state.universe:
        raise UniverseMismatch("update formula over a different universe")
    if phi.horn() and horn_sat(phi) is None:
        raise UnsatisfiableUpdate("update formula is unsatisfiable")

    single = len(phi.clauses) == 1 and phi.clauses[0].horn() and bool(phi.clauses[0].codes)
    upper_new = lower_new = None
    upper_fast = lower_fast = False
    pick_used = 0

    if single:
        clause = phi.clauses[0]
        try:
            upper_new, _ = fast_update(state.upper, clause, state.formalism)
            upper_fast = True
        except NeedsSemanticFallback:
            if not allow_fallback:
                raise
        try:
            _, lower_new = fast_update_pick(state.lower, clause, state.formalism, pick)
            pick_used = 1 if pick == "first" else int(pick)
            lower_fast = True
        except NeedsSemanticFallback:
            if not allow_fallback:
                raise

    if upper_new is None:
        upper_new = envelope_from_models(
            update_cnf(state.upper, phi, state.formalism, limits), limits)
    if lower_new is None:
        lower_new = cores_from_models(
            update_cnf(state.lower, phi, state.formalism, limits), core_mode, limits)[0]
        pick_used = 0

    path = "fast" if upper_fast and lower_fast else "semantic"
    new_state = replace(state, lower=lower_new, upper=upper_new)
    gap = _gap_size(new_state, limits)
    record = StepRecord(phi.canonical(), path, pick_used, gap)
    return replace(new_state, log=state.log + (record,))


def query(state: BeliefState, psi: Clause) -> QueryVerdict:
    """Three-valued clause query against the two bounds.

    Upper entailment is sound for Yes, failed lower entailment is sound
    for No; upper-only entailment exposes bounds that stopped bracketing.
    """
    from_upper = entails(state.upper, psi)
    from_lower = entails(state.lower, psi)
    if from_upper and from_lower:
        return QueryVerdict.YES
    if not from_upper and not from_lower:
        return QueryVerdict.NO
    if from_lower:
        return QueryVerdict.UNKNOWN
    return QueryVerdict.CONTRADICTORY_BOUNDS


def check_bracket(state: BeliefState) -> bool:
    """Whether the lower bound still entails the upper bound."""
    return entails_cnf(state.lower, state.upper)


# ---------------------------------------------------------------------------
# session files


def _cnf_to_json(cnf: CNF):
    return [cl.tokens(cnf.universe) for cl in cnf.canonical().clauses]


def _cnf_from_json(data, universe: VarUniverse) -> CNF:
    clauses = tuple(parse_clause(" ".join(tokens), universe) for tokens in data)
    return CNF(universe, clauses)


def session_to_json(state: BeliefState) -> str:
    """Canonical JSON text for a belief state; identical runs are byte-identical."""
    doc = {
        "vars": list(state.universe.names),
        "formalism": state.formalism.value,
        "lower": _cnf_to_json(state.lower),
        "upper": _cnf_to_json(state.upper),
        "log": [
            {
                "phi": _cnf_to_json(rec.phi),
                "path": rec.path,
                "core_pick": rec.core_pick,
                "gap": rec.gap,
            }
            for rec in state.log
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def session_from_json(text: str) -> BeliefState:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad session file: {exc}") from exc
    try:
        universe = VarUniverse(doc["vars"])
        formalism = _require_model_based(doc["formalism"])
        lower = _cnf_from_json(doc["lower"], universe)
        upper = _cnf_from_json(doc["upper"], universe)
        log = tuple(
            StepRecord(
                phi=_cnf_from_json(rec["phi"], universe),
                path=rec["path"],
                core_pick=int(rec["core_pick"]),
                gap=rec.get("gap"),
            )
            for rec in doc.get("log", ())
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad session file: {exc}") from exc
    return BeliefState(universe, lower, upper, formalism, log)


def write_session(state: BeliefState, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(session_to_json(state))


def read_session(path) -> BeliefState:
    with open(path, "r", encoding="utf-8") as fp:
        return session_from_json(fp.read())
