#!/usr/bin/env python3
"""Convert a SocioPatterns contact log into a hyperedge list.

Each input line is `t i j [class_i class_j]`. For every timestamp the pairwise
contacts form a graph whose maximal cliques become hyperedges. The output has
one comma-separated hyperedge per line, duplicates removed, sorted.

Usage: contacts_to_hyperedges.py High-School_data_2013.csv > contact-high-school.txt
"""

import sys
from collections import defaultdict


def maximal_cliques(adj):
    """Bron-Kerbosch with pivoting."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), set(adj), set())
    return out


def main(path):
    by_time = defaultdict(list)
    with open(path) as f:
        for line in f:
            parts = line.split()
            if len(parts) < 3:
                continue
            by_time[int(parts[0])].append((int(parts[1]), int(parts[2])))

    edges = set()
    for contacts in by_time.values():
        adj = defaultdict(set)
        for i, j in contacts:
            if i != j:
                adj[i].add(j)
                adj[j].add(i)
        for clique in maximal_cliques(adj):
            edges.add(tuple(sorted(clique)))

    for e in sorted(edges):
        print(",".join(map(str, e)))


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    main(sys.argv[1])
