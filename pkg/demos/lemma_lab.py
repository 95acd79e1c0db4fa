"""Running the structural lemma checkers over all small graphs.

Each checker verifies its own hypotheses first and refuses instances that do
not meet them, so the instance counts below are non-vacuous checks. Two
cases worth seeing: the diameter-2 checker never finds an instance, and the
independence bound for mid-length cycles needs connectivity.
"""

from __future__ import annotations

import sys

from cbstruct.enumeration import run_lemma_suite
from cbstruct.expansion import expand
from cbstruct.graph import cycle_graph, diameter, from_edge_list
from cbstruct.lemmas import check_lemma_mid

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 6

# %% Suite summary
print(f"{'lemma':<30}{'instances':>10}{'holds':>10}{'violations':>12}")
for t in run_lemma_suite(n_max).values():
    print(f"{t.lemma_id:<30}{t.instances:>10}{t.holds:>10}{len(t.violations):>12}")

# %% Long cycle expansions keep diameter at least 3, however large the bags
for k in (1, 2, 3):
    print(f"C_6 with bags of size {k}: diameter {diameter(expand(cycle_graph(6), [k] * 6)[0])}")

# %% C_4 plus an isolated vertex: longest induced cycle 4 but three independent vertices
print(check_lemma_mid(from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0)])))
