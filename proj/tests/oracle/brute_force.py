"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Nothing here shares code with the C++ library; it recomputes quantities straight
from their definitions (exhaustive clique search, exhaustive subset search).
Run:  python3 tests/oracle/brute_force.py
"""
import itertools
from math import comb
from fractions import Fraction

import networkx as nx


def js(v, k, t, lam):
    x = (lam * (v - t + 1)) // (k - t + 1)
    for i in range(t - 2, -1, -1):
        x = ((v - i) * x) // (k - i)
    return x


def pdn_clique(v, k, t):
    """PDN_1(v,k,t) as a maximum clique: blocks compatible iff they share < t points."""
    blocks = list(itertools.combinations(range(v), k))
    g = nx.Graph()
    g.add_nodes_from(range(len(blocks)))
    sets = [frozenset(b) for b in blocks]
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if len(sets[i] & sets[j]) < t:
                g.add_edge(i, j)
    best, _ = nx.max_weight_clique(g, weight=None)
    return len(best)


def pdn_multiset(v, k, t, lam, cap=12):
    """PDN_lam(v,k,t) by exhaustive multiset search (tiny instances only)."""
    blocks = list(itertools.combinations(range(v), k))
    tsub = [list(itertools.combinations(b, t)) for b in blocks]
    best = 0
    count = {}

    def dfs(start, size):
        nonlocal best
        best = max(best, size)
        if size == cap:
            return
        for i in range(start, len(blocks)):
            if all(count.get(s, 0) < lam for s in tsub[i]):
                for s in tsub[i]:
                    count[s] = count.get(s, 0) + 1
                dfs(i, size + 1)
                for s in tsub[i]:
                    count[s] -= 1
    dfs(0, 0)
    return best


def dpdn(v, k):
    """DPDN(v,k) by exhaustive search over ordered k-tuples (tiny instances)."""
    tuples = list(itertools.permutations(range(v), k))
    pairs = [frozenset((a, b) for a, b in itertools.combinations(tp, 2)) for tp in tuples]
    best = 0

    def dfs(start, used, size):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(tuples)):
            if not (pairs[i] & used):
                dfs(i + 1, used | pairs[i], size + 1)
    dfs(0, frozenset(), 0)
    return best


def lcs(a, b):
    dp = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a)):
        for j in range(len(b)):
            dp[i + 1][j + 1] = dp[i][j] + 1 if a[i] == b[j] else max(dp[i][j + 1], dp[i + 1][j])
    return dp[-1][-1]


def gsj_feasible(d, v, k, t, lam):
    q, r = divmod(d * k, v)
    return (t - 1) * comb(d, lam + 1) >= v * comb(q, lam + 1) + r * comb(q, lam)


def n_window(v, k, t, lam):
    hits = [n for n in range(1, 200)
            if n * k - (t - 1) * comb(n, lam + 1) <= lam * v < (n + 1) * k - (t - 1) * comb(n + 1, lam + 1)]
    assert len(hits) <= 1
    return hits[0] if hits else None


def ell_window(v, k, t, lam):
    ell = next(l for l in range(0, 500) if (t - 1) * comb(l, lam) > k)
    lo = ell * k - (t - 1) * comb(ell, lam + 1)
    hi = Fraction(lam + 1, lam + 2) * (ell + 1) * k - Fraction(t - 1, lam + 2) * comb(ell + 1, lam + 1)
    return ell if lo <= lam * v < hi else None


if __name__ == "__main__":
    print("JS:", js(6, 3, 2, 1), js(14, 5, 2, 1), js(5, 5, 2, 1), js(5, 3, 2, 1), js(7, 3, 2, 1))
    print("n_window (8,4)", n_window(8, 4, 2, 1), "(9,4)", n_window(9, 4, 2, 1), "(14,5)", n_window(14, 5, 2, 1),
          "(6,3)", n_window(6, 3, 2, 1), "ell_window (6,3)", ell_window(6, 3, 2, 1))
    print("PDN clique (6,3,2)", pdn_clique(6, 3, 2), "(4,3,2)", pdn_clique(4, 3, 2),
          "(8,4,2)", pdn_clique(8, 4, 2), "(9,4,2)", pdn_clique(9, 4, 2))
    print("PDN_1 grid v<=9, 3<=k<=5, t=2:")
    for v in range(3, 10):
        print(" ", v, [pdn_clique(v, k, 2) for k in range(3, min(v, 5) + 1)])
    print("PDN_1 t=3 (6,4,3)", pdn_clique(6, 4, 3), "(7,4,3)", pdn_clique(7, 4, 3), "(8,5,3)", pdn_clique(8, 5, 3))
    print("PDN_2 (4,3)", pdn_multiset(4, 3, 2, 2), "(5,4)", pdn_multiset(5, 4, 2, 2), "(6,4)", pdn_multiset(6, 4, 2, 2),
          "(6,5)", pdn_multiset(6, 5, 2, 2))
    print("DPDN (4,3)", dpdn(4, 3), "(6,4)", dpdn(6, 4), "(3,3)", dpdn(3, 3), "(4,4)", dpdn(4, 4), "(5,5)", dpdn(5, 5),
          "(5,4)", dpdn(5, 4))
    ex43 = [(1, 0, 2, 3, 4, 5, 6), (4, 3, 7, 8, 0, 9, 1), (6, 5, 10, 11, 9, 2, 0), (2, 1, 9, 11, 10, 8, 7)]
    print("LCS ex4.3", max(lcs(a, b) for a, b in itertools.combinations(ex43, 2)))
    ex12 = [(0, 1, 2, 3), (4, 3, 5, 0), (5, 3, 2, 4), (2, 1, 0, 5)]
    print("LCS ex1.2", max(lcs(a, b) for a, b in itertools.combinations(ex12, 2)))
    ex11 = [{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}]
    print("Hamming ex1.1", min(len(a ^ b) for a, b in itertools.combinations(ex11, 2)))
    print("GSJ (6,3,2,1) d=5", gsj_feasible(5, 6, 3, 2, 1), "(14,5,2,1) d=5", gsj_feasible(5, 14, 5, 2, 1),
          "d=4", gsj_feasible(4, 14, 5, 2, 1), "(12,7,2,2) d=5", gsj_feasible(5, 12, 7, 2, 2))
    print("directed (12,7)", n_window(12, 7, 2, 2), "(6,4)", n_window(6, 4, 2, 2))
