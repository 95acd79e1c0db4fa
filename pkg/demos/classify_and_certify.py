"""Classifying connected graphs with checkable certificates.

A connected graph without induced claw or bull is an expansion of a path on
at least 5 vertices, an expansion of a cycle on at least 6, or has
independence number at most 2. Otherwise the classifier returns the claw or
bull it found. Every answer comes with evidence that can be re-checked
independently.
"""

from __future__ import annotations

import json

from cbstruct.classifier import classification_to_record, classify, corollary_check, verify_certificate
from cbstruct.expansion import expand
from cbstruct.graph import claw_graph, complete_bipartite, cycle_graph, path_graph, petersen_graph

examples = {
    "P_5": path_graph(5),
    "C_5": cycle_graph(5),
    "C_6": cycle_graph(6),
    "C_6 blown up": expand(cycle_graph(6), [1, 2, 1, 2, 1, 2])[0],
    "claw": claw_graph(),
    "Petersen": petersen_graph(),
}

# %% One record per graph, the same shape the command line prints
for name, g in examples.items():
    c = classify(g)
    rec = classification_to_record(c)
    print(f"{name:>13}: {json.dumps(rec)}  verified={verify_certificate(g, c)}")

# %% Triangle-free graphs: complete bipartite, or complement of an alpha <= 2 graph
for name, t in (("K_{3,3}", complete_bipartite(3, 3)), ("C_5", cycle_graph(5)), ("P_5", path_graph(5))):
    r = corollary_check(t)
    label = None if r.complement_class is None else r.complement_class.label
    print(f"{name}: complete bipartite={r.is_complete_bipartite} complement={label} ok={not r.counterexample}")
