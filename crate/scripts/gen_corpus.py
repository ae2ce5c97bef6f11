"""Generate the bundled corpora of connected graphs (orders 1..8) in graph6.

Orders 1..7 come straight from the networkx graph atlas. Order 8 is built by
extending every connected 7-vertex graph with one new vertex (every connected
graph has a non-cut vertex) and deduplicating up to isomorphism.
Encoding uses networkx's own graph6 writer.
"""
import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(out_dir):
    by_order = defaultdict(list)
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            by_order[g.number_of_nodes()].append(g)

    buckets = defaultdict(list)
    eight = []
    for base in by_order[7]:
        for r in range(1, 8):
            for nbrs in combinations(range(7), r):
                g = base.copy()
                g.add_node(7)
                g.add_edges_from((7, u) for u in nbrs)
                key = (
                    tuple(sorted(d for _, d in g.degree())),
                    nx.weisfeiler_lehman_graph_hash(g, iterations=3),
                )
                if any(GraphMatcher(g, h).is_isomorphic() for h in buckets[key]):
                    continue
                buckets[key].append(g)
                eight.append(g)
    by_order[8] = eight

    for n in range(1, 9):
        with open(f"{out_dir}/connected_n{n}.g6", "w") as f:
            f.write(">>graph6<<\n" if n == 8 else "")
            for g in by_order[n]:
                f.write(g6(g) + "\n")
        print(n, len(by_order[n]))


if __name__ == "__main__":
    main(sys.argv[1])
