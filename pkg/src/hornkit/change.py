"""The seven belief-change formalisms as exact desk-scale operators.

Two syntactic operators work over knowledge bases (maximal consistent
subsets, and their when-in-doubt-throw-it-out intersection); five
model-based operators project the update's models onto the nearest ones,
differing in distance notion (Hamming vs. set difference) and scope
(globally nearest vs. nearest per base model).
"""
from __future__ import annotations

from enum import Enum
from itertools import combinations

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    EmptyModelSet,
    UniverseMismatch,
    UnsatisfiableBase,
    UnsatisfiableUpdate,
)
from .formula import CNF, KnowledgeBase
from .hornsat import horn_sat
from .semantics import ModelSet, enumerate_models


class FormalismTag(str, Enum):
    FUV = "fuv"
    WIDTIO = "widtio"
    DALAL = "dalal"
    SATOH = "satoh"
    BORGIDA = "borgida"
    FORBUS = "forbus"
    WINSLETT = "winslett"


MODEL_BASED = frozenset({
    FormalismTag.DALAL,
    FormalismTag.SATOH,
    FormalismTag.BORGIDA,
    FormalismTag.FORBUS,
    FormalismTag.WINSLETT,
})


def _minimal_diff_masks(diffs):
    """Subset-minimal masks among the given xor-masks."""
    out = []
    for d in sorted(set(diffs), key=lambda v: (v.bit_count(), v)):
        if not any(o & d == o for o in out):
            out.append(d)
    return out


def update_models(g: ModelSet, f: ModelSet, tag: FormalismTag) -> ModelSet:
    """Project the base models g onto the update models f, per formalism."""
    tag = FormalismTag(tag)
    if tag not in MODEL_BASED:
        raise ValueError(f"{tag.value} is not a model-based formalism")
    if g.universe != f.universe:
        raise UniverseMismatch("update across different universes")
    if not g.masks or not f.masks:
        raise EmptyModelSet("model-based update needs nonempty model sets")
    gm = g.masks
    fm = f.masks
    inter = gm & fm

    if tag is FormalismTag.WINSLETT:
        result = set()
        for a in gm:
            if a in fm:
                result.add(a)
                continue
            for d in _minimal_diff_masks(a ^ b for b in fm):
                result.add(a ^ d)
        return ModelSet(g.universe, result)

    if inter:
        return ModelSet(g.universe, inter)

    if tag is FormalismTag.DALAL:
        best = min((a ^ b).bit_count() for a in gm for b in fm)
        result = {b for b in fm if any((a ^ b).bit_count() == best for a in gm)}
        return ModelSet(g.universe, result)

    if tag is FormalismTag.SATOH:
        minimal = set(_minimal_diff_masks(a ^ b for a in gm for b in fm))
        result = {b for b in fm if any(a ^ b in minimal for a in gm)}
        return ModelSet(g.universe, result)

    if tag is FormalismTag.FORBUS:
        result = set()
        for a in gm:
            best = min((a ^ b).bit_count() for b in fm)
            result.update(b for b in fm if (a ^ b).bit_count() == best)
        return ModelSet(g.universe, result)

    # borgida: per-model subset-minimal difference
    result = set()
    for a in gm:
        for d in _minimal_diff_masks(a ^ b for b in fm):
            result.add(a ^ d)
    return ModelSet(g.universe, result)


def update_cnf(g: CNF, f: CNF, tag: FormalismTag,
               limits: Limits = DEFAULT_LIMITS) -> ModelSet:
    """Model-based update of one CNF by another, via enumeration."""
    gm = enumerate_models(g, limits)
    if not gm:
        raise UnsatisfiableBase("cannot update an unsatisfiable base")
    fm = enumerate_models(f, limits)
    if not fm:
        raise UnsatisfiableUpdate("update formula is unsatisfiable")
    return update_models(gm, fm, tag)


# ---------------------------------------------------------------------------
# syntactic formalisms


def _satisfiable(cnf: CNF, limits: Limits) -> bool:
    if cnf.horn():
        return horn_sat(cnf) is not None
    return bool(enumerate_models(cnf, limits))


def _subset_consistent(kb: KnowledgeBase, indices, f: CNF, limits: Limits) -> bool:
    clauses = []
    for i in indices:
        clauses.extend(kb.items[i][1].clauses)
    clauses.extend(f.clauses)
    return _satisfiable(CNF(kb.universe, tuple(clauses)), limits)


def _fresh_name(base: str, taken) -> str:
    if base not in taken:
        return base
    i = 2
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def maximal_consistent_subsets(kb: KnowledgeBase, f: CNF,
                               limits: Limits = DEFAULT_LIMITS) -> list:
    """Index sets of the maximal sub-bases consistent with f, largest first."""
    if kb.universe != f.universe:
        raise UniverseMismatch("update formula over a different universe")
    if not _satisfiable(f, limits):
        raise UnsatisfiableUpdate("update formula is unsatisfiable")
    n = len(kb.items)
    everything = tuple(range(n))
    if _subset_consistent(kb, everything, f, limits):
        return [everything]
    found = []
    for size in range(n - 1, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if any(sset <= set(big) for big in found):
                continue
            if _subset_consistent(kb, subset, f, limits):
                found.append(subset)
    return found


def fuv_update(kb: KnowledgeBase, f: CNF,
               limits: Limits = DEFAULT_LIMITS, update_name: str = "phi") -> list:
    """All maximal subsets of the base consistent with f, each with f added."""
    subsets = maximal_consistent_subsets(kb, f, limits)
    out = []
    for subset in subsets:
        base = kb.restricted(subset)
        name = _fresh_name(update_name, set(base.names()))
        out.append(base.extended(name, f))
    return out


def widtio_update(kb: KnowledgeBase, f: CNF,
                  limits: Limits = DEFAULT_LIMITS, update_name: str = "phi") -> KnowledgeBase:
    """Positional intersection of all maximal consistent subsets, plus f."""
    subsets = maximal_consistent_subsets(kb, f, limits)
    surviving = set(subsets[0])
    for subset in subsets[1:]:
        surviving &= set(subset)
    base = kb.restricted(sorted(surviving))
    name = _fresh_name(update_name, set(base.names()))
    return base.extended(name, f)
