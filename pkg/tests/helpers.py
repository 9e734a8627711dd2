"""Shared generators for the randomized suites."""

import random

from dyncount import (ArgumentationFramework, EngineConfig, FormulaState,
                      Session, normalize_clause)

ALL_CONFIGS = [
    EngineConfig(cache_mode=mode, heuristic=heuristic, td_mode=td)
    for mode in ("no_shared", "shared", "shared_sym")
    for heuristic in ("dlcs", "vsads")
    for td in ("off", "shared")
]


def random_cnf(rng, n_vars, n_clauses, max_len=3):
    clauses = set()
    guard = 0
    while len(clauses) < n_clauses and guard < 50 * n_clauses:
        guard += 1
        length = rng.randint(1, min(max_len, n_vars))
        vs = rng.sample(range(1, n_vars + 1), length)
        clauses.add(normalize_clause(
            [v if rng.random() < 0.5 else -v for v in vs]))
    return FormulaState(set(range(1, n_vars + 1)), clauses)


def random_3cnf(rng, n_vars, n_clauses):
    clauses = set()
    while len(clauses) < n_clauses:
        vs = rng.sample(range(1, n_vars + 1), 3)
        clauses.add(normalize_clause(
            [v if rng.random() < 0.5 else -v for v in vs]))
    return FormulaState(set(range(1, n_vars + 1)), clauses)


def random_af(rng, max_args=12):
    n = rng.randint(1, max_args)
    args = frozenset(range(1, n + 1))
    density = rng.uniform(0.0, 2.5)
    attacks = set()
    target = int(density * n)
    for _ in range(target):
        attacks.add((rng.randint(1, n), rng.randint(1, n)))
    return ArgumentationFramework(args, frozenset(attacks))


def session_for(config, state=None):
    session = Session(EngineConfig(cache_mode=config.cache_mode,
                                   heuristic=config.heuristic,
                                   td_mode=config.td_mode,
                                   cache_byte_budget=config.cache_byte_budget))
    if state is not None:
        session.state = state.copy()
    return session


EXAMPLE1 = [[1, 2, 3], [-1, -2, -3], [4, -1], [5, 1], [5, 2, 3], [4, -2, -3]]


def example1_state():
    return FormulaState(set(range(1, 6)),
                        {normalize_clause(c) for c in EXAMPLE1})
