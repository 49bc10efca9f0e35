"""Seeded random instances for the property suites.

Everything takes an explicit random.Random so identical seeds reproduce
identical instances, reports and counterexamples.
"""
from __future__ import annotations

from .formula import CNF, Clause, VarUniverse
from .hornsat import horn_sat
from .reductions import Hypergraph
from .semantics import ModelSet


def universe_of(n: int) -> VarUniverse:
    return VarUniverse(tuple(f"x{i}" for i in range(1, n + 1)))


def random_clause(rng, n: int, max_width: int = 3, horn: bool = False) -> Clause:
    width = rng.randint(1, min(max_width, n))
    variables = rng.sample(range(n), width)
    codes = []
    if horn:
        head = rng.random() < 0.5
        for pos, v in enumerate(variables):
            positive = head and pos == 0
            codes.append(2 * v + (0 if positive else 1))
    else:
        codes = [2 * v + rng.randint(0, 1) for v in variables]
    return Clause.from_codes(codes)


def random_cnf(rng, n: int, max_clauses: int = 8, max_width: int = 3,
               horn: bool = False) -> CNF:
    universe = universe_of(n)
    clauses = tuple(random_clause(rng, n, max_width, horn)
                    for _ in range(rng.randint(1, max_clauses)))
    return CNF(universe, clauses)


def random_satisfiable_horn(rng, n: int, max_clauses: int = 8,
                            unit_bias: float = 0.4) -> CNF:
    """Random satisfiable Horn CNF, seeded with a few unit clauses.

    The units make entailed variables common, so contradicting update
    clauses are easy to derive from the minimal model.
    """
    universe = universe_of(n)
    while True:
        clauses = []
        for v in rng.sample(range(n), rng.randint(1, max(1, n // 2))):
            if rng.random() < unit_bias:
                clauses.append(Clause.from_codes((2 * v + rng.randint(0, 1),)))
        for _ in range(rng.randint(1, max_clauses)):
            clauses.append(random_clause(rng, n, 3, horn=True))
        cnf = CNF(universe, tuple(clauses))
        if horn_sat(cnf) is not None:
            return cnf


def contradicting_horn_clause(rng, g: CNF, max_body: int = 3):
    """A Horn clause phi with g & phi unsatisfiable, or None.

    Body variables are drawn from those true in the minimal model (hence
    entailed), the optional head from variables entailed false.
    """
    minimal = horn_sat(g)
    if minimal is None:
        return None
    n = len(g.universe)
    entailed_true = [v for v in range(n) if minimal.bit(v)]
    if not entailed_true:
        return None
    entailed_false = [
        v for v in range(n)
        if not minimal.bit(v)
        and horn_sat(g.extend((Clause.from_codes((2 * v,)),))) is None
    ]
    body = rng.sample(entailed_true, rng.randint(1, min(max_body, len(entailed_true))))
    codes = [2 * v + 1 for v in body]
    if entailed_false and rng.random() < 0.5:
        codes.append(2 * rng.choice(entailed_false))
    return Clause.from_codes(codes)


def random_model_set(rng, n: int, max_size: int = 12) -> ModelSet:
    universe = universe_of(n)
    size = rng.randint(1, max_size)
    masks = {rng.randrange(1 << n) for _ in range(size)}
    return ModelSet(universe, masks)


def random_hypergraph(rng, max_vertices: int = 7, max_edges: int = 8) -> Hypergraph:
    n = rng.randint(2, max_vertices)
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        size = rng.randint(2, n)
        edge = frozenset(rng.sample(range(1, n + 1), size))
        if edge not in edges:
            edges.append(edge)
    return Hypergraph(n, tuple(edges))
