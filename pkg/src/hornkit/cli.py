"""Command-line surface: compile, update, query, verify, reduce, session.

Exit codes are a stable contract: 0 success (query Yes), 1 verify
mismatch, 2 parse error, 3 limit exceeded or refused fallback, 4
unsatisfiable compile input, 5 universe too large on update, and the
query verdicts No/Unknown/ContradictoryBounds map to 10/11/12.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .change import FormalismTag
from .config import DEFAULT_LIMITS
from .errors import (
    HornkitError,
    NeedsSemanticFallback,
    ParseError,
    TautologicalClause,
    TooLarge,
    UniverseTooLarge,
    UnsatisfiableBase,
)
from .formula import CNF, parse_clause, parse_formula
from .recompile import (
    check_bracket,
    init_compile,
    init_horn,
    query,
    read_session,
    step,
    write_session,
)
from .reductions import (
    fuv_reduction,
    maxmodel,
    nodecover_reduction,
    parse_graph,
    parse_hypergraph,
    pure3sat_reduction,
    transversals,
)
from .semantics import cores_from_models, enumerate_models, envelope_from_models
from .verify import (
    find_additivity_witness,
    run_bijection_suite,
    run_bracketing_suite,
    run_closure_suite,
    run_fastpath_suite,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_UNSAT = 4
EXIT_UNIVERSE = 5
QUERY_EXITS = {"Yes": 0, "No": 10, "Unknown": 11, "ContradictoryBounds": 12}


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fp:
            return fp.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _limits(args):
    limits = DEFAULT_LIMITS
    if getattr(args, "vars_limit", None):
        limits = limits.with_vars_limit(args.vars_limit)
    if getattr(args, "core_limit", None):
        limits = replace(limits, core_models=args.core_limit)
    return limits


def cmd_compile(args) -> int:
    limits = _limits(args)
    cnf = parse_formula(_read(args.input), args.format)
    try:
        models = enumerate_models(cnf, limits)
        if not models:
            print("UNSAT")
            return EXIT_UNSAT
        mode = "all-exact" if args.all_cores else args.core_mode
        cores = cores_from_models(models, mode, limits)
        envelope = envelope_from_models(models, limits)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    for core in cores:
        print(f"core: {core.one_line()}")
    print(f"envelope: {envelope.one_line()}")
    return EXIT_OK


def _parse_update_formula(args, universe) -> CNF:
    if args.clause is not None:
        return CNF(universe, (parse_clause(args.clause, universe),))
    text = _read(args.clause_file)
    clauses = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            clauses.append(parse_clause(line, universe))
    if not clauses:
        raise ParseError(f"no clauses in {args.clause_file}")
    return CNF(universe, tuple(clauses))


def cmd_update(args) -> int:
    limits = _limits(args)
    state = read_session(args.state)
    if args.formalism:
        state = replace(state, formalism=FormalismTag(args.formalism))
    phi = _parse_update_formula(args, state.universe)
    pick = "first" if args.pick is None else args.pick
    try:
        state = step(state, phi, pick=pick, core_mode=args.core_mode,
                     allow_fallback=not args.no_fallback, limits=limits)
    except NeedsSemanticFallback as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except UniverseTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNIVERSE
    write_session(state, args.state)
    print(f"path={state.log[-1].path}")
    print(f"bracket={'OK' if check_bracket(state) else 'BROKEN'}")
    return EXIT_OK


def cmd_query(args) -> int:
    state = read_session(args.state)
    psi = parse_clause(args.clause, state.universe)
    verdict = query(state, psi)
    print(verdict.value)
    return QUERY_EXITS[verdict.value]


def cmd_session_new(args) -> int:
    limits = _limits(args)
    cnf = parse_formula(_read(args.formula), args.format)
    tag = FormalismTag(args.formalism)
    try:
        if cnf.horn() and not args.compile:
            state = init_horn(cnf, tag)
        else:
            state = init_compile(cnf, tag, core_mode=args.core_mode, limits=limits)
    except UnsatisfiableBase as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSAT
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    write_session(state, args.state)
    print(f"initialized {args.state}")
    return EXIT_OK


def cmd_verify(args) -> int:
    out = print
    if args.adversarial_additivity:
        tag = FormalismTag(args.formalism or "dalal")
        witness = find_additivity_witness(args.n, args.trials, args.seed, tag)
        if witness is None:
            out(f"additivity: no witness found for {tag.value} "
                f"({args.trials} trials)")
            return EXIT_OK if tag is FormalismTag.WINSLETT else EXIT_MISMATCH
        g1, g2, f = witness
        out(f"additivity: witness found for {tag.value}")
        out(f"  A: {' '.join(g1.texts())}")
        out(f"  B: {' '.join(g2.texts())}")
        out(f"  phi: {' '.join(f.texts())}")
        return EXIT_OK
    suites = {
        "fastpath": lambda: run_fastpath_suite(
            args.n, args.trials, args.seed, out,
            tags=[FormalismTag(args.formalism)] if args.formalism else None),
        "closure": lambda: run_closure_suite(args.n, args.trials, args.seed, out),
        "bijection": lambda: run_bijection_suite(args.trials, args.seed, out),
        "bracketing": lambda: run_bracketing_suite(
            args.sessions, args.steps, args.seed, out, n=min(args.n, 8)),
    }
    selected = list(suites) if args.suite == "all" else [args.suite]
    ok = True
    for name in selected:
        ok = suites[name]() and ok
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_reduce(args) -> int:
    limits = _limits(args)
    text = _read(args.input)
    try:
        if args.kind == "transversal":
            h = parse_hypergraph(text)
            for t in transversals(h):
                print(" ".join(str(v) for v in t))
        elif args.kind == "fuv":
            h = parse_hypergraph(text)
            kb, phi = fuv_reduction(h)
            print("vars " + " ".join(kb.universe.names))
            for name, cnf in kb.items:
                print(f"item {name}: {cnf.one_line()}")
            print(f"phi: {phi.one_line()}")
        elif args.kind == "pure3sat":
            source = parse_formula(text, args.format)
            kb, _, phi = pure3sat_reduction(source)
            print("vars " + " ".join(kb.universe.names))
            for name, cnf in kb.items:
                print(f"item {name}: {cnf.one_line()}")
            print(f"phi: {phi.one_line()}")
        elif args.kind == "nodecover":
            if args.bound is None:
                raise ParseError("nodecover needs a cover bound argument")
            g = parse_graph(text)
            m1, m2, k = nodecover_reduction(g, args.bound, limits)
            print("vars " + " ".join(m1.universe.names))
            for line in m1.texts():
                print(f"m1 {line}")
            for line in m2.texts():
                print(f"m2 {line}")
            print(f"k {k}")
            print(f"maxmodel {'yes' if maxmodel(m1, m2, k, limits) else 'no'}")
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hornkit",
        description="Horn-bound knowledge compilation with model-based updates")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars-limit", type=int, default=None,
                        help="override the enumeration/envelope variable limits")
    common.add_argument("--core-limit", type=int, default=None,
                        help="override the exact-core model count limit")
    common.add_argument("--format", choices=("auto", "sym", "dimacs"), default="auto",
                        help="formula input format (default: auto-detect)")

    p = sub.add_parser("compile", parents=[common],
                       help="print the Horn core(s) and envelope of a formula")
    p.add_argument("input")
    p.add_argument("--all-cores", action="store_true",
                   help="print every maximal core")
    p.add_argument("--core-mode", choices=("exact-max", "greedy"), default="exact-max")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("update", parents=[common],
                       help="apply an update to a session file")
    p.add_argument("state")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--clause", help="inline clause, e.g. '-x y'")
    group.add_argument("--clause-file", help="file with one clause per line")
    p.add_argument("--formalism", choices=[t.value for t in FormalismTag
                                           if t.value not in ("fuv", "widtio")])
    p.add_argument("--pick", type=int, default=None,
                   help="1-based core pick for the fast path")
    p.add_argument("--no-fallback", action="store_true",
                   help="fail instead of enumerating when no fast path exists")
    p.add_argument("--core-mode", choices=("exact-max", "greedy"), default="exact-max")
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("query", help="three-valued clause query against a session")
    p.add_argument("state")
    p.add_argument("--clause", required=True)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("session", help="session file management")
    session_sub = p.add_subparsers(dest="session_command", required=True)
    p = session_sub.add_parser("new", parents=[common], help="create a session file")
    p.add_argument("state")
    p.add_argument("--formula", required=True, help="initial formula file")
    p.add_argument("--formalism", required=True,
                   choices=[t.value for t in FormalismTag
                            if t.value not in ("fuv", "widtio")])
    p.add_argument("--compile", action="store_true",
                   help="force envelope/core compilation even for Horn input")
    p.add_argument("--core-mode", choices=("exact-max", "greedy"), default="exact-max")
    p.set_defaults(func=cmd_session_new)

    p = sub.add_parser("verify", parents=[common],
                       help="run the oracle-equivalence property suites")
    p.add_argument("--n", type=int, default=8, help="max universe size")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sessions", type=int, default=20,
                   help="bracketing suite session count")
    p.add_argument("--steps", type=int, default=10,
                   help="updates per bracketing session")
    p.add_argument("--formalism", choices=[t.value for t in FormalismTag
                                           if t.value not in ("fuv", "widtio")])
    p.add_argument("--suite", choices=("all", "fastpath", "closure", "bijection",
                                       "bracketing"), default="all")
    p.add_argument("--adversarial-additivity", action="store_true",
                   help="search for a non-additivity witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", parents=[common],
                       help="run a reduction construction on an instance file")
    p.add_argument("kind", choices=("transversal", "fuv", "pure3sat", "nodecover"))
    p.add_argument("input")
    p.add_argument("bound", type=int, nargs="?", default=None,
                   help="cover bound (nodecover only)")
    p.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TautologicalClause) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HornkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
