"""Brute-force reference computations, independent of the package internals
except for reading a group's multiplication table."""

from itertools import combinations


def perm_order(p):
    k, q = 1, tuple(p)
    ident = tuple(range(len(p)))
    while q != ident:
        q = tuple(p[i] for i in q)
        k += 1
    return k


def powers(G, x):
    out = [G.identity]
    y = x
    while y != G.identity:
        out.append(y)
        y = G.product[y][x]
    return frozenset(out)


def cyclic_subgroup_sets(G):
    return {powers(G, x) for x in range(G.order)}


def is_subgroup(G, S):
    return G.identity in S and all(G.product[a][b] in S for a in S for b in S)


def all_subgroups(G):
    """Every subset closed under multiplication; only usable for tiny groups."""
    others = [x for x in range(G.order) if x != G.identity]
    found = set()
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            S = frozenset((G.identity,) + extra)
            if G.order % len(S) == 0 and is_subgroup(G, S):
                found.add(S)
    return found


def breaking_sets(nodes, bottom, tops):
    """Nodes comparable by inclusion with every node, excluding bottom and tops."""
    return {
        H for H in nodes
        if H != bottom and H not in tops
        and all(X <= H or H <= X for X in nodes)
    }


def conjugates(G, H):
    inv = G.inverse
    return {frozenset(G.product[G.product[inv[g]][h]][g] for h in H) for g in range(G.order)}


def divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)
