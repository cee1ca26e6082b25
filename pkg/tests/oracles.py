"""Naive reference implementations working directly on permutations."""

from itertools import product

from cdlattice.group import Group, Permutation


def perms(G: Group) -> list[Permutation]:
    return [G.permutation(i) for i in range(G.order)]


def naive_centralizer(G: Group, S) -> set[int]:
    ps = perms(G)
    return {i for i, g in enumerate(ps) if all(g * ps[s] == ps[s] * g for s in S)}


def naive_classes(G: Group) -> list[set[int]]:
    ps = perms(G)
    index = {p: i for i, p in enumerate(ps)}
    classes, seen = [], set()
    for i, g in enumerate(ps):
        if i in seen:
            continue
        cls = {index[x.inverse() * g * x] for x in ps}
        seen |= cls
        classes.append(cls)
    return classes


def naive_closure(G: Group, gens) -> set[int]:
    ps = perms(G)
    index = {p: i for i, p in enumerate(ps)}
    found = {0}
    frontier = [0]
    while frontier:
        new = []
        for a, g in product(frontier, gens):
            c = index[ps[a] * ps[g]]
            if c not in found:
                found.add(c)
                new.append(c)
        frontier = new
    return found


def naive_measure(G: Group, members) -> int:
    return len(members) * len(naive_centralizer(G, members))
