"""Independent brute-force oracles.

None of these reuse the library's code paths: forests are found by
scanning edge subsets with union-find, determinants by Laplace expansion,
permutation signs by cycle decomposition.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for c in range(n):
        if rows[0][c] == 0:
            continue
        sub = [r[:c] + r[c + 1:] for r in rows[1:]]
        total += (-1) ** c * rows[0][c] * cofactor_det(sub)
    return total


def cycle_sign(images):
    """Sign of the permutation sorting ``images`` via its cycle structure."""
    order = sorted(images)
    perm = [order.index(x) for x in images]
    seen = [False] * len(perm)
    sign = 1
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cayley(n):
    return n ** (n - 2) if n >= 2 else 1


def _components(n, edges):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return None
        parent[ru] = rv
    comps = defaultdict(list)
    for v in range(1, n + 1):
        comps[find(v)].append(v)
    return list(comps.values())


@lru_cache(maxsize=None)
def all_forests(n):
    """Map (U, W) -> frozenset of edge sets of forests from U to W."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    table = defaultdict(set)
    for m in range(n):
        for edges in combinations(pairs, m):
            indeg = defaultdict(int)
            for _, v in edges:
                indeg[v] += 1
            if any(d > 1 for d in indeg.values()):
                continue
            comps = _components(n, edges)
            if comps is None:
                continue
            # one root per tree and every edge points away from it
            roots = [[v for v in comp if indeg[v] == 0] for comp in comps]
            if any(len(r) != 1 for r in roots):
                continue
            U = tuple(sorted(r[0] for r in roots))
            for choice in product(*comps):
                W = tuple(sorted(choice))
                table[(U, W)].add(frozenset(edges))
    return {k: frozenset(v) for k, v in table.items()}


def forests_between(n, U, W):
    return all_forests(n).get((tuple(U), tuple(W)), frozenset())


def reachable(edges, a, b):
    adj = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
    stack, seen = [a], {a}
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def tree_bijection(n, edges, U, W):
    comps = _components(n, edges)
    out = {}
    for comp in comps:
        (u,) = [x for x in comp if x in U]
        (w,) = [x for x in comp if x in W]
        out[u] = w
    return out


def epsilon_oracle(n, U, W, edges):
    pi = tree_bijection(n, edges, U, W)
    sign = (-1) ** (n + len(U) + sum(U) + sum(W))
    return sign * cycle_sign([pi[u] for u in sorted(U)])
