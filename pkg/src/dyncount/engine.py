"""Search-based exact counter: propagation, decomposition, cache, branching."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .cache import make_key
from .formula import decompose_components, is_tautology, vars_of
from .heuristics import HYBRID_WEIGHT, record_conflict, select_branch_variable

NO_SHARED = "no_shared"
SHARED = "shared"
SHARED_SYM = "shared_sym"
CACHE_MODES = (NO_SHARED, SHARED, SHARED_SYM)


class ResourceLimitError(RuntimeError):
    """Configured time budget exceeded during a count."""


@dataclass
class EngineConfig:
    cache_mode: str = SHARED_SYM
    heuristic: str = "dlcs"            # dlcs | vsads
    td_mode: str = "off"               # off | shared
    cache_byte_budget: int = 512 * 1024 * 1024
    td_staleness: str = "keep"         # keep | recompute
    hybrid_weight: int = HYBRID_WEIGHT
    time_budget: float | None = None   # seconds per count, None = unlimited

    def __post_init__(self):
        if self.cache_mode not in CACHE_MODES:
            raise ValueError("unknown cache mode %r" % self.cache_mode)
        if self.heuristic not in ("dlcs", "vsads"):
            raise ValueError("unknown heuristic %r" % self.heuristic)
        if self.td_mode not in ("off", "shared"):
            raise ValueError("unknown td mode %r" % self.td_mode)
        if self.cache_byte_budget <= 0:
            raise ValueError("cache byte budget must be positive")


@dataclass
class SearchStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    positive_hits: int = 0
    negative_hits: int = 0
    cache_stores: int = 0
    evictions: int = 0

    def merge(self, other):
        self.decisions += other.decisions
        self.propagations += other.propagations
        self.conflicts += other.conflicts
        self.positive_hits += other.positive_hits
        self.negative_hits += other.negative_hits
        self.cache_stores += other.cache_stores
        self.evictions += other.evictions


@dataclass
class CountResult:
    count: int
    stats: SearchStats


def unit_propagate(clauses, assignment, stats=None):
    """Condition on the assignment and propagate units to fixpoint.

    Returns (residual clause set, extended assignment, None) on success or
    (None, assignment, falsified original clause) on conflict. The conflict
    clause is the input clause whose residual became empty, for VSADS.
    """
    assignment = dict(assignment)
    pending = [(c, c) for c in clauses]
    while True:
        reduced = []
        units = {}
        for orig, cur in pending:
            keep = []
            sat = False
            for l in cur:
                val = assignment.get(abs(l))
                if val is None:
                    keep.append(l)
                elif (l > 0) == val:
                    sat = True
                    break
            if sat:
                continue
            if not keep:
                return None, assignment, orig
            if len(keep) == 1:
                l = keep[0]
                v = abs(l)
                want = l > 0
                prev = units.get(v)
                if prev is not None and prev != want:
                    return None, assignment, orig
                units[v] = want
                continue
            reduced.append((orig, tuple(keep)))
        if not units:
            return {cur for _, cur in reduced}, assignment, None
        assignment.update(units)
        if stats is not None:
            stats.propagations += len(units)
        pending = reduced


class _Search:
    """One count over a fixed state; owns the per-count statistics."""

    def __init__(self, config, cache, conflicts, td):
        self.config = config
        self.cache = cache
        self.conflicts = conflicts if conflicts is not None else {}
        self.td = td if config.td_mode == "shared" else None
        self.sym = config.cache_mode == SHARED_SYM
        self.stats = SearchStats()
        self.deadline = None
        if config.time_budget is not None:
            self.deadline = time.monotonic() + config.time_budget
        self._tick = 0

    def _check_budget(self):
        self._tick += 1
        if self.deadline is not None and self._tick % 256 == 0:
            if time.monotonic() > self.deadline:
                raise ResourceLimitError("count exceeded the configured time budget")

    def _lookup(self, key):
        hit = self.cache.lookup(key)
        if hit is None:
            self.stats.negative_hits += 1
        else:
            self.stats.positive_hits += 1
        return hit

    def _store(self, key, count):
        before = len(self.cache.entries)
        evicted_before = self.cache.stats.evictions
        self.cache.store(key, count)
        if len(self.cache.entries) > before:
            self.stats.cache_stores += 1
        self.stats.evictions += self.cache.stats.evictions - evicted_before

    def count_clause_set(self, clauses, variables):
        """Count over exactly `variables` (all occurring in `clauses`).

        Handles the root: cache lookup on the whole set, then initial
        propagation, free-variable factoring and component recursion.
        """
        key = make_key(clauses, self.sym)
        hit = self._lookup(key)
        if hit is not None:
            return hit
        residual, assignment, conflict = unit_propagate(clauses, {}, self.stats)
        if conflict is not None:
            record_conflict(self.conflicts, conflict)
            self.stats.conflicts += 1
            result = 0
        else:
            free = variables - assignment.keys() - vars_of(residual)
            result = 1 << len(free)
            for comp in decompose_components(residual):
                result *= self.count_component(comp.clauses, comp.variables)
        self._store(key, result)
        return result

    def count_component(self, comp_clauses, comp_vars):
        """Cache lookup, branch on the heuristic pick, recurse, sum, store."""
        self._check_budget()
        key = make_key(comp_clauses, self.sym)
        hit = self._lookup(key)
        if hit is not None:
            return hit
        v = select_branch_variable(comp_clauses, self.config.heuristic,
                                   self.conflicts, self.td,
                                   self.config.hybrid_weight)
        self.stats.decisions += 1
        total = 0
        for value in (True, False):
            residual, assignment, conflict = unit_propagate(
                comp_clauses, {v: value}, self.stats)
            if conflict is not None:
                record_conflict(self.conflicts, conflict)
                self.stats.conflicts += 1
                continue
            free = comp_vars - assignment.keys() - vars_of(residual)
            branch = 1 << len(free)
            for comp in decompose_components(residual):
                branch *= self.count_component(comp.clauses, comp.variables)
            total += branch
        self._store(key, total)
        return total


def count(state, config, cache, conflicts=None, td=None):
    """Exact model count of the state over its active variables.

    In no-shared mode the cache is cleared first; in shared modes it is
    reused and extended. Deterministic for fixed inputs and cache content.
    """
    if config.cache_mode == NO_SHARED:
        cache.clear()
    cache.revision = state.revision
    clauses = {c for c in state.clauses if not is_tautology(c)}
    if () in clauses:
        return CountResult(0, SearchStats())
    occurring = vars_of(clauses)
    free_global = len(state.active_vars) - len(occurring)
    search = _Search(config, cache, conflicts, td)
    limit = 3000 + 40 * len(occurring)
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    if clauses:
        over_occurring = search.count_clause_set(frozenset(clauses), occurring)
    else:
        over_occurring = 1
    return CountResult(over_occurring << free_global, search.stats)
