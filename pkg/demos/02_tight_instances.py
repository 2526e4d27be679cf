"""Small hand-built inputs on which the target algorithm lands exactly on 3/5.

Each instance comes with the arrival order that forces the bad outcome; the
decomposition of greedy-plus-optimum shows why nothing better was reachable.
"""

from semimatch.algorithms import ALGORITHMS, greedy_maximal_matching
from semimatch.generators import tight_instance
from semimatch.oracle import decompose_union, max_matching

for which in ("alg1", "alg4", "esfandiari:3"):
    ti = tight_instance(which)
    M = ALGORITHMS[ti.target_algorithm](ti.source(), **ti.params)
    opt = max_matching(ti.graph)
    base = greedy_maximal_matching(ti.ordering, ti.graph.n)
    d = decompose_union(base, opt)
    print(f"{ti.name}: {ti.target_algorithm} finds {len(M)} of {len(opt)}")
    print(f"  greedy base {len(base)} edges; 3-augmenting paths {d.k3}, 5-augmenting {d.k_i.get(5, 0)}")
