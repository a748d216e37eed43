"""Slow, independent reference implementations used only by the tests."""
from itertools import combinations, product

import sympy


def sympy_meet(s, t) -> bool:
    a = sympy.Segment(sympy.Point(*s.a), sympy.Point(*s.b))
    b = sympy.Segment(sympy.Point(*t.a), sympy.Point(*t.b))
    return bool(a.intersection(b))


def coplanar_points(*hom_points) -> bool:
    return sympy.Matrix([list(p) for p in hom_points]).det() == 0


def brute_clique(adj) -> int:
    n = len(adj)
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if all(adj[u][v] for u, v in combinations(sub, 2)):
                return size
    return 0


def brute_chromatic(adj) -> int:
    n = len(adj)
    if n == 0:
        return 0
    edges = [(u, v) for u, v in combinations(range(n), 2) if adj[u][v]]
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n - 1):
            col = (0,) + col
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def adjacency(g):
    return [[bool(x) for x in row] for row in g.adj]


def complement(adj):
    n = len(adj)
    return [[u != v and not adj[u][v] for v in range(n)] for u in range(n)]
