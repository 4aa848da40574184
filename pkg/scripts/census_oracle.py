"""Independent count of connected trivalent multigraphs (loops allowed).

Enumerates every multiset of 3g-3 edges on 2g-2 labelled vertices and
deduplicates with networkx's VF2 isomorphism test.  Shares no code with
``cxlab.surface_models``.
"""

import json
import sys
from itertools import combinations_with_replacement

import networkx as nx


def classes(genus):
    n, e = 2 * genus - 2, 3 * genus - 3
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    reps = []
    for edges in combinations_with_replacement(pairs, e):
        deg = [0] * n
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        if deg != [3] * n:
            continue
        g = nx.MultiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        if not nx.is_connected(g):
            continue
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


if __name__ == "__main__":
    out = {str(g): len(classes(g)) for g in map(int, sys.argv[1:] or ["2", "3"])}
    json.dump({"oracle": "networkx VF2 over all edge multisets", "counts": out},
              sys.stdout, indent=1, sort_keys=True)
    print()
