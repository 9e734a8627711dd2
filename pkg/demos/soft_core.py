"""Greedily shrink a formula while keeping the count under a slack threshold.

A clause is dropped if the count after its removal stays within
(1 + delta) times the original count. What survives is a soft core:
removing any one of its clauses would overshoot the budget.
"""

import random

from dyncount import (Session, SoftCoreConfig, compute_soft_core,
                      normalize_clause, verify_soft_core)
from dyncount.formula import FormulaState

rng = random.Random(7)
n = 10
clauses = set()
while len(clauses) < 18:
    vs = rng.sample(range(1, n + 1), 3)
    clauses.add(normalize_clause([v if rng.random() < 0.5 else -v for v in vs]))
state = FormulaState(set(range(1, n + 1)), clauses)

config = SoftCoreConfig(delta=0.20)
result = compute_soft_core(state, config, Session())

print("base count:", result.base_count)
print("threshold:", result.threshold)
for step in result.per_step:
    verdict = "removed" if step.accepted else "kept"
    print("  clause %2d -> count %5d  %s" % (step.index, step.count, verdict))
print("final count:", result.final_count)
print("core size: %d of %d clauses" % (len(result.kept_indices),
                                       len(result.clause_order)))
print("verified:", verify_soft_core(state, result, config))
