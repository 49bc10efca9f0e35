"""Exact model-set semantics at desk scale.

Models are total assignments stored as integer bit masks (bit i is the
value of variable i); the text form writes variable 0 first, so mask 0b110
over (x, y, z) prints as "011".  All operations here enumerate and are
guarded by the Limits knobs; the linear-time machinery lives elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    NotClosed,
    ParseError,
    SetTooLarge,
    UniverseMismatch,
    UniverseTooLarge,
)
from .formula import CNF, Clause, VarUniverse


@dataclass(frozen=True)
class Model:
    """Total assignment over a universe, one bit per variable."""

    mask: int
    width: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.width):
            raise ValueError("mask outside the universe width")

    def bit(self, var: int) -> int:
        return (self.mask >> var) & 1

    def popcount(self) -> int:
        return self.mask.bit_count()

    def hamming(self, other: "Model") -> int:
        self._check(other)
        return (self.mask ^ other.mask).bit_count()

    def diff_vars(self, other: "Model") -> frozenset:
        """Variables on which the two models disagree."""
        self._check(other)
        xor = self.mask ^ other.mask
        return frozenset(v for v in range(self.width) if (xor >> v) & 1)

    def __and__(self, other: "Model") -> "Model":
        self._check(other)
        return Model(self.mask & other.mask, self.width)

    def _check(self, other):
        if self.width != other.width:
            raise UniverseMismatch("models of different widths")

    def text(self) -> str:
        return "".join("1" if (self.mask >> v) & 1 else "0" for v in range(self.width))

    @staticmethod
    def from_text(text: str) -> "Model":
        if not text or any(ch not in "01" for ch in text):
            raise ParseError(f"bad model text {text!r}")
        mask = 0
        for v, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << v
        return Model(mask, len(text))

    def __repr__(self):
        return f"Model({self.text()})"


def _mask_text(mask: int, width: int) -> str:
    return "".join("1" if (mask >> v) & 1 else "0" for v in range(width))


class ModelSet:
    """Deduplicated collection of equal-width models over one universe."""

    __slots__ = ("universe", "masks")

    def __init__(self, universe: VarUniverse, models=()):
        n = len(universe)
        masks = set()
        for m in models:
            if isinstance(m, Model):
                if m.width != n:
                    raise UniverseMismatch("model width differs from universe size")
                masks.add(m.mask)
            else:
                if not 0 <= m < (1 << n):
                    raise ValueError("mask outside the universe width")
                masks.add(m)
        self.universe = universe
        self.masks = frozenset(masks)

    def __len__(self):
        return len(self.masks)

    def __bool__(self):
        return bool(self.masks)

    def __contains__(self, item):
        if isinstance(item, Model):
            return item.mask in self.masks
        return item in self.masks

    def __eq__(self, other):
        return isinstance(other, ModelSet) and self.universe == other.universe \
            and self.masks == other.masks

    def __hash__(self):
        return hash((self.universe, self.masks))

    @property
    def models(self) -> tuple:
        n = len(self.universe)
        return tuple(Model(m, n) for m in self.sorted_masks())

    def sorted_masks(self) -> list:
        n = len(self.universe)
        return sorted(self.masks, key=lambda m: _mask_text(m, n))

    def texts(self) -> list:
        n = len(self.universe)
        return [_mask_text(m, n) for m in self.sorted_masks()]

    def and_closed(self) -> bool:
        masks = self.masks
        for a, b in combinations(masks, 2):
            if a & b not in masks:
                return False
        return True

    def __repr__(self):
        return f"ModelSet{{{', '.join(self.texts())}}}"


def parse_models(text: str, universe: VarUniverse) -> ModelSet:
    """Model-set file: one bit-string model per line, '#' comments."""
    n = len(universe)
    masks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        model = Model.from_text(line)
        if model.width != n:
            raise ParseError(f"line {lineno}: model width {model.width}, expected {n}")
        masks.append(model.mask)
    return ModelSet(universe, masks)


def format_models(ms: ModelSet) -> str:
    return "\n".join(ms.texts()) + ("\n" if ms.masks else "")


# ---------------------------------------------------------------------------
# enumeration and closure


def enumerate_models(cnf: CNF, limits: Limits = DEFAULT_LIMITS) -> ModelSet:
    """All satisfying total assignments, by exhaustive enumeration."""
    n = len(cnf.universe)
    if n > limits.enumeration_vars:
        raise UniverseTooLarge(f"{n} variables exceeds enumeration limit "
                               f"{limits.enumeration_vars}")
    if cnf.has_empty_clause():
        return ModelSet(cnf.universe, ())
    specs = []
    for cl in cnf.clauses:
        pos = neg = 0
        for code in cl.codes:
            if code & 1:
                neg |= 1 << (code >> 1)
            else:
                pos |= 1 << (code >> 1)
        specs.append((pos, neg))
    masks = []
    for m in range(1 << n):
        for pos, neg in specs:
            if not m & pos and m & neg == neg:
                break
        else:
            masks.append(m)
    return ModelSet(cnf.universe, masks)


def close_masks(masks, cap: int = 0):
    """AND-closure of a set of masks; None if it grows past a nonzero cap."""
    closed = set(masks)
    work = list(closed)
    while work:
        a = work.pop()
        for b in list(closed):
            c = a & b
            if c not in closed:
                if cap and len(closed) >= cap:
                    return None
                closed.add(c)
                work.append(c)
    return closed


def and_closure(ms: ModelSet, limits: Limits = DEFAULT_LIMITS) -> ModelSet:
    """Smallest superset closed under componentwise AND."""
    closed = close_masks(ms.masks, cap=limits.closure_cap)
    if closed is None:
        raise SetTooLarge(f"AND-closure exceeds cap {limits.closure_cap}")
    return ModelSet(ms.universe, closed)


def is_horn_representable(ms: ModelSet) -> bool:
    """True iff some Horn CNF has exactly this model set (iff AND-closed)."""
    return ms.and_closed()


def in_closure(mask: int, masks) -> bool:
    """Membership of mask in the AND-closure of masks, without materializing it.

    mask is an AND of elements of masks iff the AND of all its supersets
    in masks reproduces it.
    """
    acc = None
    for v in masks:
        if v & mask == mask:
            acc = v if acc is None else acc & v
            if acc == mask:
                return True
    return acc == mask if acc is not None else False


# ---------------------------------------------------------------------------
# Horn envelope


def _horn_clause_candidates(n: int, width: int):
    """All Horn clauses of the given width, in canonical order."""
    out = []
    for negs in combinations(range(n), width):
        out.append(tuple(2 * v + 1 for v in negs))
    if width >= 1:
        for negs in combinations(range(n), width - 1):
            negset = set(negs)
            for p in range(n):
                if p not in negset:
                    out.append(tuple(sorted([2 * p] + [2 * v + 1 for v in negs])))
    out.sort()
    return out


def envelope_from_models(ms: ModelSet, limits: Limits = DEFAULT_LIMITS) -> CNF:
    """Strongest Horn CNF implied by the model set.

    The result's models are exactly the AND-closure of the input; clauses
    are searched width-ascending and the returned CNF is irredundant.
    """
    n = len(ms.universe)
    if n > limits.envelope_vars:
        raise UniverseTooLarge(f"{n} variables exceeds envelope limit "
                               f"{limits.envelope_vars}")
    closure = close_masks(ms.masks)
    if not closure:
        return CNF(ms.universe, (Clause.from_codes(()),))
    target = len(closure)
    sat = set(range(1 << n))
    if len(sat) == target:
        return CNF(ms.universe, ())
    kept = []
    kept_sets = []
    for width in range(1, n + 1):
        for codes in _horn_clause_candidates(n, width):
            pos = neg = 0
            for code in codes:
                if code & 1:
                    neg |= 1 << (code >> 1)
                else:
                    pos |= 1 << (code >> 1)
            fs = frozenset(codes)
            if any(ks <= fs for ks in kept_sets):
                continue
            ok = True
            for m in closure:
                if not m & pos and m & neg == neg:
                    ok = False
                    break
            if not ok:
                continue
            new_sat = {m for m in sat if m & pos or m & neg != neg}
            if len(new_sat) == len(sat):
                continue
            kept.append(codes)
            kept_sets.append(fs)
            sat = new_sat
            if len(sat) == target:
                break
        if len(sat) == target:
            break
    # drop clauses made redundant by combinations kept later
    i = 0
    while i < len(kept):
        rest = kept[:i] + kept[i + 1:]
        if _model_count(rest, n) == target:
            kept = rest
        else:
            i += 1
    clauses = tuple(Clause.from_codes(c) for c in kept)
    return CNF(ms.universe, clauses).canonical()


def _model_count(clause_codes, n):
    specs = []
    for codes in clause_codes:
        pos = neg = 0
        for code in codes:
            if code & 1:
                neg |= 1 << (code >> 1)
            else:
                pos |= 1 << (code >> 1)
        specs.append((pos, neg))
    count = 0
    for m in range(1 << n):
        for pos, neg in specs:
            if not m & pos and m & neg == neg:
                break
        else:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Horn cores


def _close_into(base: frozenset, mask: int, allowed: frozenset):
    """Closure of base + mask if it stays inside allowed, else None."""
    closed = set(base)
    work = [mask]
    if mask not in allowed:
        return None
    while work:
        a = work.pop()
        if a in closed:
            continue
        closed.add(a)
        for b in list(closed):
            c = a & b
            if c not in closed:
                if c not in allowed:
                    return None
                work.append(c)
    return frozenset(closed)


def maximal_closed_subsets(masks) -> list:
    """All maximal AND-closed subsets of a set of masks."""
    allowed = frozenset(masks)
    order = sorted(allowed)
    results = set()

    def leaf(sub):
        for m in allowed - sub:
            if _close_into(sub, m, allowed) is not None:
                return
        results.add(sub)

    def dfs(sub, idx, banned):
        while idx < len(order) and order[idx] in sub:
            idx += 1
        if idx == len(order):
            leaf(sub)
            return
        m = order[idx]
        grown = _close_into(sub, m, allowed)
        if grown is None:
            dfs(sub, idx + 1, banned)
            return
        if not grown & banned:
            dfs(grown, idx + 1, banned)
        dfs(sub, idx + 1, banned | {m})

    dfs(frozenset(), 0, frozenset())
    return sorted(results, key=lambda s: (-len(s), sorted(s)))


def greedy_closed_subset(masks) -> frozenset:
    """One maximal AND-closed subset, grown in descending popcount order."""
    allowed = frozenset(masks)
    chosen = frozenset()
    for m in sorted(allowed, key=lambda v: (-v.bit_count(), v)):
        grown = _close_into(chosen, m, allowed)
        if grown is not None:
            chosen = grown
    return chosen


def cores_from_models(ms: ModelSet, mode: str = "exact-max",
                      limits: Limits = DEFAULT_LIMITS) -> list:
    """Horn cores of a model set: maximal AND-closed subsets, as Horn CNFs.

    exact-max returns the single core with the most models (canonical
    tie-break), all-exact returns every maximal closed subset, greedy
    returns one maximal subset without the exact-mode size limit.
    """
    if mode not in ("exact-max", "greedy", "all-exact"):
        raise ValueError(f"unknown core mode {mode!r}")
    n = len(ms.universe)
    if not ms.masks:
        return [envelope_from_models(ms, limits)]
    if mode == "greedy":
        subsets = [greedy_closed_subset(ms.masks)]
    else:
        if len(ms.masks) > limits.core_models:
            raise SetTooLarge(f"{len(ms.masks)} models exceeds exact core limit "
                              f"{limits.core_models}")
        subsets = maximal_closed_subsets(ms.masks)
        subsets.sort(key=lambda s: (-len(s), tuple(_mask_text(m, n) for m in
                                                   sorted(s, key=lambda v: _mask_text(v, n)))))
        if mode == "exact-max":
            subsets = subsets[:1]
    return [envelope_from_models(ModelSet(ms.universe, s), limits) for s in subsets]


# ---------------------------------------------------------------------------
# characteristic models


def characteristic_models(ms: ModelSet) -> ModelSet:
    """Unique minimal generating subset of an AND-closed model set.

    A model is characteristic iff it is not the AND of its strict
    supersets inside the set.
    """
    if not ms.and_closed():
        raise NotClosed("model set is not closed under componentwise AND")
    chars = []
    for m in ms.masks:
        acc = None
        for v in ms.masks:
            if v != m and v & m == m:
                acc = v if acc is None else acc & v
        if acc is None or acc != m:
            chars.append(m)
    return ModelSet(ms.universe, chars)
