"""Isomorphism testing for small enumerated groups.

Cheap invariants screen out most pairs; survivors go to a backtracking search
that maps a greedy minimal generating sequence of the first group onto tuples
of the second group with matching element orders and class sizes.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .group import Group, GroupTooLarge, center
from .structure import class_of, conjugacy_classes, derived_series

ISOMORPHISM_CAP = 2000


def invariants(G: Group) -> tuple:
    orders = Counter(int(o) for o in G.element_orders)
    # Element orders paired with class sizes refine both histograms.
    sizes = {}
    for cls in conjugacy_classes(G):
        key = (int(G.element_orders[cls[0]]), len(cls))
        sizes[key] = sizes.get(key, 0) + 1
    return (
        G.order,
        tuple(sorted(orders.items())),
        center(G).order,
        tuple(sorted(sizes.items())),
        tuple(D.order for D in derived_series(G)),
    )


def _minimal_generating_sequence(G: Group) -> list[int]:
    """Greedy: repeatedly adjoin the element (largest order first) that enlarges the subgroup most."""
    orders = G.element_orders
    candidates = sorted(range(1, G.order), key=lambda x: (-int(orders[x]), x))
    gens: list[int] = []
    mask = 1
    while mask != G.full_mask:
        best, best_mask = None, mask
        for x in candidates:
            if (mask >> x) & 1:
                continue
            m = G.closure_mask(gens + [x])
            if m.bit_count() > best_mask.bit_count():
                best, best_mask = x, m
                if m == G.full_mask:
                    break
        gens.append(best)
        mask = best_mask
    return gens


def find_isomorphism(G1: Group, G2: Group, cap: int = ISOMORPHISM_CAP) -> np.ndarray | None:
    """An isomorphism as an index array ``phi[g1] = g2``, or ``None``."""
    for G in (G1, G2):
        if G.order > cap:
            raise GroupTooLarge(G.order, cap)
    if G1.order != G2.order:
        return None
    if G1.order == 1:
        return np.zeros(1, dtype=np.int64)
    if invariants(G1) != invariants(G2):
        return None

    gens = _minimal_generating_sequence(G1)
    cls1, cls2 = class_of(G1), class_of(G2)
    size1 = np.array([len(c) for c in conjugacy_classes(G1)])[cls1]
    size2 = np.array([len(c) for c in conjugacy_classes(G2)])[cls2]
    o1, o2 = G1.element_orders, G2.element_orders
    candidates = [
        [y for y in range(G2.order) if o2[y] == o1[x] and size2[y] == size1[x]] for x in gens
    ]

    # Words for every element of G1 over ``gens``: element = parent * gens[via].
    parent = np.full(G1.order, -1, dtype=np.int64)
    via = np.full(G1.order, -1, dtype=np.int64)
    seen = np.zeros(G1.order, dtype=bool)
    seen[0] = True
    order_bfs = [0]
    level_bounds = []  # number of BFS-reached elements when only gens[:k+1] are used
    for k in range(len(gens)):
        head = 0
        frontier = list(order_bfs)
        while head < len(frontier):
            e = frontier[head]
            head += 1
            for s in range(k + 1):
                f = G1.mul(e, gens[s])
                if not seen[f]:
                    seen[f] = True
                    parent[f], via[f] = e, s
                    frontier.append(f)
                    order_bfs.append(f)
        level_bounds.append(len(order_bfs))

    def extend(images: list[int]) -> np.ndarray | None:
        """Extend generator images along the BFS words; ``None`` on a conflict."""
        k = len(images)
        phi = np.full(G1.order, -1, dtype=np.int64)
        phi[0] = 0
        for e in order_bfs[1 : level_bounds[k - 1]]:
            phi[e] = G2.mul(int(phi[parent[e]]), images[via[e]])
        reached = np.array(order_bfs[: level_bounds[k - 1]])
        if len(set(phi[reached].tolist())) != len(reached):
            return None
        # Homomorphism check on the subgroup generated so far.
        for s in range(k):
            col1 = G1.col(gens[s])[reached]
            if (phi[col1] < 0).any():
                return None
            if not np.array_equal(phi[col1], G2.col(images[s])[phi[reached]]):
                return None
        return phi

    def search(images: list[int]) -> np.ndarray | None:
        if images:
            phi = extend(images)
            if phi is None:
                return None
            if len(images) == len(gens):
                return phi
        for y in candidates[len(images)]:
            if y in images:
                continue
            found = search(images + [y])
            if found is not None:
                return found
        return None

    return search([])


def is_isomorphic(G1: Group, G2: Group, cap: int = ISOMORPHISM_CAP) -> bool:
    return find_isomorphism(G1, G2, cap) is not None
