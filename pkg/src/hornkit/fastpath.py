"""Linear-time envelope and core of a Horn base updated by one Horn clause.

When the base contradicts the clause, the base factors as the clause's
body variables forced true (and its head forced false) conjoined with a
remainder obtained by substitution.  The updated envelope and the k
candidate cores are then emitted directly as Horn CNF, without ever
enumerating models; all five model-based formalisms coincide on this case.
"""
from __future__ import annotations

from .change import MODEL_BASED, FormalismTag
from .errors import (
    BadIndex,
    NeedsSemanticFallback,
    NotHorn,
    UnsatisfiableBase,
    UnsatisfiableUpdate,
)
from .formula import CNF, Clause, condition
from .hornsat import horn_sat


def _unit(var: int, positive: bool) -> Clause:
    return Clause.from_codes((2 * var + (0 if positive else 1),))


def fast_update(g: CNF, phi: Clause, tag: FormalismTag):
    """Envelope and core list for a Horn base updated by a Horn clause.

    Returns (envelope, cores); cores are listed in canonical order.  When
    the base is consistent with the clause the result is simply their
    conjunction, except under winslett whose projection semantics has no
    known fast construction for that case (NeedsSemanticFallback).
    """
    tag = FormalismTag(tag)
    if tag not in MODEL_BASED:
        raise ValueError(f"{tag.value} is not a model-based formalism")
    if not phi.horn():
        raise NotHorn("update clause must be Horn")
    if not g.horn():
        raise NotHorn("base must be Horn")
    if horn_sat(g) is None:
        raise UnsatisfiableBase("cannot update an unsatisfiable base")
    if phi.is_empty():
        raise UnsatisfiableUpdate("cannot update by the empty clause")

    combined = g.extend((phi,))
    if horn_sat(combined) is not None:
        if tag is FormalismTag.WINSLETT:
            raise NeedsSemanticFallback(
                "winslett prefers the projection even when base and clause agree")
        merged = combined.canonical()
        return merged, [merged]

    # base contradicts the clause: every body variable is forced true and
    # the head (if any) false, so the remainder drops out by substitution
    body = list(phi.neg_vars())
    head = phi.head_var()
    assignment = {v: True for v in body}
    if head is not None:
        assignment[head] = False
    remainder = condition(g, assignment)

    if head is None:
        envelope = remainder.extend((phi,)).canonical()
        cores = []
        for i in body:
            extra = [_unit(i, False)]
            extra.extend(_unit(j, True) for j in body if j != i)
            cores.append(remainder.extend(extra).canonical())
    elif not body:
        envelope = remainder.extend((_unit(head, True),)).canonical()
        cores = [envelope]
    else:
        extra = [Clause.from_codes(tuple(sorted((2 * head + 1, 2 * i)))) for i in body]
        envelope = remainder.extend(extra + [phi]).canonical()
        cores = []
        for i in body:
            extra = [_unit(j, True) for j in body if j != i]
            extra.append(Clause.from_codes(tuple(sorted((2 * i + 1, 2 * head)))))
            extra.append(Clause.from_codes(tuple(sorted((2 * head + 1, 2 * i)))))
            cores.append(remainder.extend(extra).canonical())
    cores.sort(key=CNF.sort_key)
    return envelope, cores


def fast_update_pick(g: CNF, phi: Clause, tag: FormalismTag, pick="first"):
    """fast_update with one core selected.

    pick is "first" for the canonical first core, or a 1-based index into
    the canonical core list; out-of-range indices raise BadIndex.
    """
    envelope, cores = fast_update(g, phi, tag)
    if pick == "first":
        index = 1
    else:
        try:
            index = int(pick)
        except (TypeError, ValueError):
            raise BadIndex(f"bad core pick {pick!r}") from None
    if not 1 <= index <= len(cores):
        raise BadIndex(f"core index {index} out of range 1..{len(cores)}")
    return envelope, cores[index - 1]
