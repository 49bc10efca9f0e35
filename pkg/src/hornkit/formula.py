"""Variable universes, literals, clauses, CNF formulas and knowledge bases.

Literals are encoded as integers: variable v gives code 2*v for the
positive literal and 2*v + 1 for the negative one.  Sorting codes
numerically sorts literals by variable index with the positive literal
first, which is the canonical literal order used throughout.  Clause text
is rendered body-first (negative literals, then positive ones, each by
variable index), so a Horn implication reads antecedents-then-head.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyClause,
    ParseError,
    TautologicalClause,
    UniverseMismatch,
    UnknownVariable,
)


class VarUniverse:
    """Fixed, ordered collection of distinct variable names."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("a universe needs at least one variable")
        for name in names:
            if (not name) or name.startswith("-") or name.startswith("#") \
                    or any(ch.isspace() for ch in name):
                raise ValueError(f"bad variable name: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarUniverse) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarUniverse({' '.join(self.names)})"


@dataclass(frozen=True)
class Literal:
    """A variable occurrence with a sign."""

    var: int
    positive: bool = True

    @property
    def code(self) -> int:
        return 2 * self.var + (0 if self.positive else 1)

    @staticmethod
    def from_code(code: int) -> "Literal":
        return Literal(code >> 1, not code & 1)

    def negated(self) -> "Literal":
        return Literal(self.var, not self.positive)

    def token(self, universe: VarUniverse) -> str:
        name = universe.names[self.var]
        return name if self.positive else "-" + name


def _normalize_codes(codes) -> tuple:
    out = sorted(set(codes))
    if out and out[0] < 0:
        raise ValueError("negative literal code")
    for a, b in zip(out, out[1:]):
        if a ^ 1 == b:
            raise TautologicalClause(f"variable {a >> 1} occurs with both signs")
    return tuple(out)


class Clause:
    """Disjunction of literals, at most one literal per variable.

    The empty clause is allowed and denotes falsity.  Tautological input
    (x together with -x) is rejected at construction.
    """

    __slots__ = ("codes",)

    def __init__(self, literals=()):
        self.codes = _normalize_codes(lit.code for lit in literals)

    @classmethod
    def from_codes(cls, codes) -> "Clause":
        cl = object.__new__(cls)
        cl.codes = _normalize_codes(codes)
        return cl

    @property
    def literals(self) -> tuple:
        return tuple(Literal.from_code(c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def width(self) -> int:
        return len(self.codes)

    def is_empty(self) -> bool:
        return not self.codes

    def horn(self) -> bool:
        positives = 0
        for c in self.codes:
            if not c & 1:
                positives += 1
                if positives > 1:
                    return False
        return True

    def negative(self) -> bool:
        return all(c & 1 for c in self.codes)

    def pos_vars(self) -> tuple:
        return tuple(c >> 1 for c in self.codes if not c & 1)

    def neg_vars(self) -> tuple:
        return tuple(c >> 1 for c in self.codes if c & 1)

    def head_var(self):
        """The positive variable of a Horn clause, or None."""
        for c in self.codes:
            if not c & 1:
                return c >> 1
        return None

    def sort_key(self):
        return (len(self.codes), self.codes)

    def subsumes(self, other: "Clause") -> bool:
        return set(self.codes) <= set(other.codes)

    def satisfied_by_mask(self, mask: int) -> bool:
        for c in self.codes:
            if (mask >> (c >> 1)) & 1 != c & 1:
                return True
        return False

    def tokens(self, universe: VarUniverse) -> list:
        negs = [c for c in self.codes if c & 1]
        poss = [c for c in self.codes if not c & 1]
        return ["-" + universe.names[c >> 1] for c in negs] + \
               [universe.names[c >> 1] for c in poss]

    def text(self, universe: VarUniverse) -> str:
        return " ".join(self.tokens(universe))

    def __eq__(self, other):
        return isinstance(other, Clause) and self.codes == other.codes

    def __hash__(self):
        return hash(self.codes)

    def __repr__(self):
        body = " ".join(("-" if c & 1 else "") + f"v{c >> 1}" for c in self.codes)
        return f"Clause<{body}>"


class CNF:
    """Conjunction of clauses over a fixed universe.

    An empty clause list denotes truth; a CNF containing the empty clause
    denotes falsity.  Values are immutable; canonical() returns the sorted,
    subsumption-free form.
    """

    __slots__ = ("universe", "clauses")

    def __init__(self, universe: VarUniverse, clauses=()):
        clauses = tuple(clauses)
        n = len(universe)
        for cl in clauses:
            if cl.codes and cl.codes[-1] >> 1 >= n:
                raise UnknownVariable(
                    f"variable index {cl.codes[-1] >> 1} outside universe of size {n}")
        self.universe = universe
        self.clauses = clauses

    def horn(self) -> bool:
        return all(cl.horn() for cl in self.clauses)

    def is_true(self) -> bool:
        return not self.clauses

    def has_empty_clause(self) -> bool:
        return any(not cl.codes for cl in self.clauses)

    def extend(self, clauses) -> "CNF":
        return CNF(self.universe, self.clauses + tuple(clauses))

    def conjoin(self, other: "CNF") -> "CNF":
        if self.universe != other.universe:
            raise UniverseMismatch("conjoining CNFs over different universes")
        return CNF(self.universe, self.clauses + other.clauses)

    def canonical(self) -> "CNF":
        """Sorted, deduplicated, subsumption-free equivalent."""
        uniq = sorted(set(self.clauses), key=Clause.sort_key)
        if uniq and not uniq[0].codes:
            return CNF(self.universe, (uniq[0],))
        kept = []
        kept_sets = []
        occ = {}
        for cl in uniq:
            fs = frozenset(cl.codes)
            subsumed = False
            seen = set()
            for code in cl.codes:
                for idx in occ.get(code, ()):
                    if idx in seen:
                        continue
                    seen.add(idx)
                    if kept_sets[idx] <= fs:
                        subsumed = True
                        break
                if subsumed:
                    break
            if subsumed:
                continue
            idx = len(kept)
            kept.append(cl)
            kept_sets.append(fs)
            for code in cl.codes:
                occ.setdefault(code, []).append(idx)
        return CNF(self.universe, tuple(kept))

    def sort_key(self):
        return tuple(cl.sort_key() for cl in self.clauses)

    def one_line(self) -> str:
        """Single-line rendering: bare unit literals, parenthesized wider clauses."""
        if not self.clauses:
            return "true"
        if self.has_empty_clause():
            return "false"
        parts = []
        for cl in self.clauses:
            body = cl.text(self.universe)
            parts.append(body if len(cl) == 1 else f"({body})")
        return " ".join(parts)

    def __eq__(self, other):
        return isinstance(other, CNF) and self.universe == other.universe \
            and self.clauses == other.clauses

    def __hash__(self):
        return hash((self.universe, self.clauses))

    def __repr__(self):
        return f"CNF<{self.one_line()}>"


class KnowledgeBase:
    """Ordered list of named CNF formulas; identity is positional."""

    __slots__ = ("universe", "items")

    def __init__(self, universe: VarUniverse, items=()):
        items = tuple((name, cnf) for name, cnf in items)
        names = [name for name, _ in items]
        if len(set(names)) != len(names):
            raise ValueError("knowledge base item names must be unique")
        for _, cnf in items:
            if cnf.universe != universe:
                raise UniverseMismatch("knowledge base item over a different universe")
        self.universe = universe
        self.items = items

    def names(self) -> tuple:
        return tuple(name for name, _ in self.items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def horn(self) -> bool:
        return all(cnf.horn() for _, cnf in self.items)

    def conjunction(self) -> CNF:
        clauses = []
        for _, cnf in self.items:
            clauses.extend(cnf.clauses)
        return CNF(self.universe, tuple(clauses))

    def restricted(self, indices) -> "KnowledgeBase":
        return KnowledgeBase(self.universe, tuple(self.items[i] for i in sorted(indices)))

    def extended(self, name: str, cnf: CNF) -> "KnowledgeBase":
        return KnowledgeBase(self.universe, self.items + ((name, cnf),))

    def __eq__(self, other):
        return isinstance(other, KnowledgeBase) and self.universe == other.universe \
            and self.items == other.items

    def __repr__(self):
        return f"KnowledgeBase<{', '.join(self.names())}>"


def parse_clause(text: str, universe: VarUniverse) -> Clause:
    """Parse a whitespace-separated clause; '-' prefixes negation.

    Repeated literals are deduplicated; opposite signs of one variable
    raise TautologicalClause.
    """
    codes = []
    for token in text.split():
        positive = not token.startswith("-")
        name = token if positive else token[1:]
        if name not in universe.index:
            raise UnknownVariable(f"unknown variable {name!r}")
        codes.append(2 * universe.index[name] + (0 if positive else 1))
    return Clause.from_codes(codes)


def negate_clause(clause: Clause) -> list:
    """Negation of a clause as a list of sign-flipped unit clauses."""
    if not clause.codes:
        raise EmptyClause("cannot negate the empty clause")
    return [Clause.from_codes((code ^ 1,)) for code in clause.codes]


def condition(cnf: CNF, assignment) -> CNF:
    """Substitute fixed truth values into a CNF.

    Clauses with a satisfied literal are dropped, falsified literals are
    removed from the rest; a clause losing all literals becomes the empty
    clause.  The result mentions no assigned variable.
    """
    n = len(cnf.universe)
    fixed = {}
    for var, value in assignment.items():
        if not 0 <= var < n:
            raise UnknownVariable(f"variable index {var} outside universe of size {n}")
        fixed[var] = bool(value)
    out = []
    for cl in cnf.clauses:
        satisfied = False
        keep = []
        for code in cl.codes:
            var = code >> 1
            if var in fixed:
                if (not code & 1) == fixed[var]:
                    satisfied = True
                    break
            else:
                keep.append(code)
        if not satisfied:
            out.append(Clause.from_codes(keep))
    return CNF(cnf.universe, tuple(out))


# ---------------------------------------------------------------------------
# file formats


def parse_symbolic(text: str) -> CNF:
    """Symbolic formula file: 'vars ...' header, one clause per line, '#' comments."""
    universe = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if universe is None:
            fields = line.split()
            if fields[0] != "vars" or len(fields) < 2:
                raise ParseError(f"line {lineno}: expected 'vars <names...>' header")
            try:
                universe = VarUniverse(fields[1:])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
            continue
        clauses.append(parse_clause(line, universe))
    if universe is None:
        raise ParseError("missing 'vars' header line")
    return CNF(universe, tuple(clauses))


def parse_dimacs(text: str) -> CNF:
    """DIMACS CNF: 'p cnf n m' header, signed integers, 0-terminated clauses.

    Variable i is named v<i>.
    """
    nvars = None
    literal_tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) < 4 or fields[1] != "cnf":
                raise ParseError(f"line {lineno}: bad DIMACS header {line!r}")
            try:
                nvars = int(fields[2])
                int(fields[3])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad DIMACS header {line!r}") from exc
            continue
        if nvars is None:
            raise ParseError(f"line {lineno}: clause before 'p cnf' header")
        for token in line.split():
            try:
                literal_tokens.append(int(token))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: non-integer token {token!r}") from exc
    if nvars is None:
        raise ParseError("missing 'p cnf' header")
    if nvars < 1:
        raise ParseError("DIMACS header declares no variables")
    universe = VarUniverse(tuple(f"v{i}" for i in range(1, nvars + 1)))
    clauses = []
    current = []
    for lit in literal_tokens:
        if lit == 0:
            clauses.append(current)
            current = []
            continue
        if abs(lit) > nvars:
            raise ParseError(f"literal {lit} outside declared range 1..{nvars}")
        current.append(2 * (abs(lit) - 1) + (0 if lit > 0 else 1))
    if current:
        clauses.append(current)
    return CNF(universe, tuple(Clause.from_codes(c) for c in clauses))


def parse_formula(text: str, fmt: str = "auto") -> CNF:
    if fmt == "sym":
        return parse_symbolic(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt != "auto":
        raise ValueError(f"unknown format {fmt!r}")
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("p ") or line.startswith("p\t"):
            return parse_dimacs(text)
    return parse_symbolic(text)


def format_symbolic(cnf: CNF) -> str:
    """Canonical symbolic file text; parse_symbolic inverts it."""
    canon = cnf.canonical()
    if canon.has_empty_clause():
        raise ValueError("the empty clause has no symbolic file form")
    lines = ["vars " + " ".join(cnf.universe.names)]
    lines.extend(cl.text(cnf.universe) for cl in canon.clauses)
    return "\n".join(lines) + "\n"
