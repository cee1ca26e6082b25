"""Conjugacy, normal subgroups, Sylow theory, quotients, products and solvability."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import (
    Group,
    Permutation,
    Subgroup,
    bits_to_bool,
    bits_to_indices,
    bool_to_bits,
    conjugate_mask,
    element_cap,
    generate_group,
    indices_to_bits,
    is_normal,
    join,
    normalizer,
    GroupTooLarge,
)
from .numtheory import p_part

ORACLE_CAP = 48


def conjugacy_classes(G: Group) -> list[list[int]]:
    """Conjugacy classes as sorted index lists, ordered by smallest member."""
    cached = G.cache.get("classes")
    if cached is not None:
        return cached
    maps = [G.conj_map(g) for g in G.generator_indices]
    label = np.full(G.order, -1, dtype=np.int64)
    classes = []
    for start in range(G.order):
        if label[start] >= 0:
            continue
        label[start] = len(classes)
        orbit = [start]
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for m in maps:
                y = int(m[x])
                if label[y] < 0:
                    label[y] = len(classes)
                    orbit.append(y)
        classes.append(sorted(orbit))
    G.cache["classes"] = classes
    return classes


def class_of(G: Group) -> np.ndarray:
    label = np.empty(G.order, dtype=np.int64)
    for c, members in enumerate(conjugacy_classes(G)):
        label[members] = c
    return label


def normal_closure(G: Group, gens: list[int]) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``gens``."""
    mask = G.closure_mask(gens)
    while True:
        H = Subgroup(G, mask)
        extra = []
        for x in G.generator_indices:
            cm = G.conj_map(x)
            extra.extend(int(cm[h]) for h in H.generators if not (mask >> int(cm[h])) & 1)
        if not extra:
            return H
        mask = G.closure_mask(H.generators + extra)


def normal_subgroups(G: Group, minimal_only: bool = False) -> list[Subgroup]:
    """All normal subgroups (sorted by order, then members), or only the minimal ones.

    Every normal subgroup is the join of the normal closures of the conjugacy
    classes it contains, so it suffices to close those under joins.
    """
    cached = G.cache.get("normals")
    if cached is None:
        basic = {}
        for cls in conjugacy_classes(G)[1:]:
            N = normal_closure(G, [cls[0]])
            basic[N.mask] = N
        found = {1: G.trivial_subgroup}
        found.update(basic)
        work = list(basic.values())
        while work:
            N = work.pop()
            for B in list(basic.values()):
                if B <= N:
                    continue
                J = join(N, B)
                if J.mask not in found:
                    found[J.mask] = J
                    work.append(J)
        cached = sorted(found.values(), key=Subgroup.key)
        G.cache["normals"] = cached
    if not minimal_only:
        return list(cached)
    nontrivial = [N for N in cached if not N.is_trivial()]
    return [N for N in nontrivial if not any(M < N for M in nontrivial)]


def derived_subgroup(H: Subgroup) -> Subgroup:
    """``[H, H]``: normal closure in ``H`` of the commutators of its generators."""
    G = H.parent
    gens = H.generators
    comms = [G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    mask = G.closure_mask(comms)
    while True:
        D = Subgroup(G, mask)
        extra = []
        for x in gens:
            cm = G.conj_map(x)
            extra.extend(int(cm[d]) for d in D.generators if not (mask >> int(cm[d])) & 1)
        if not extra:
            return D
        mask = G.closure_mask(D.generators + extra)


def derived_series(G: Group) -> list[Subgroup]:
    series = [G.whole]
    while True:
        D = derived_subgroup(series[-1])
        if D == series[-1]:
            return series
        series.append(D)


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_p_element(G: Group, x: int, p: int) -> bool:
    o = int(G.element_orders[x])
    while o % p == 0:
        o //= p
    return o == 1


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup.

    Starts from a cyclic subgroup of a ``p``-element of largest order and
    repeatedly adjoins a ``p``-element of the normalizer lying outside.
    """
    cache = G.cache.setdefault("sylow", {})
    if p in cache:
        return cache[p]
    _, target = p_part(G.order, p)
    orders = G.element_orders
    p_elements = [x for x in range(1, G.order) if is_p_element(G, x, p)]
    if target == 1 or not p_elements:
        cache[p] = G.trivial_subgroup
        return cache[p]
    start = max(p_elements, key=lambda x: (int(orders[x]), -x))
    P = G.subgroup([start])
    while P.order < target:
        N = normalizer(G, P)
        x = next(x for x in p_elements if x in N and x not in P)
        P = Subgroup(G, G.closure_mask(P.generators + [x]))
    cache[p] = P
    return P


def sylow_count(G: Group, p: int) -> int:
    P = sylow_subgroup(G, p)
    return G.order // normalizer(G, P).order


def sylow_subgroups(G: Group, p: int) -> list[Subgroup]:
    """Every Sylow ``p``-subgroup, in order of first appearance as ``P^g``."""
    P = sylow_subgroup(G, p)
    count = sylow_count(G, p)
    found = {P.mask: P}
    for g in range(G.order):
        if len(found) == count:
            break
        m = conjugate_mask(G, P.mask, g)
        if m not in found:
            found[m] = Subgroup(G, m)
    return list(found.values())


def o_p(G: Group, p: int) -> Subgroup:
    """Largest normal ``p``-subgroup, as the intersection of all Sylow ``p``-subgroups."""
    mask = G.full_mask
    for P in sylow_subgroups(G, p):
        mask &= P.mask
    return Subgroup(G, mask)


@dataclass
class Quotient:
    """``G/N`` acting regularly on the right cosets of ``N``."""

    group: Group
    projection: np.ndarray  # element of G -> element of the quotient
    coset_of: np.ndarray = field(repr=False)  # element of G -> coset number

    def preimage(self, mask: int) -> int:
        flags = bits_to_bool(mask, self.group.order)
        return bool_to_bits(flags[self.projection])

    def preimage_representative(self, q: int) -> int:
        return int(np.flatnonzero(self.projection == q)[0])


def quotient(G: Group, N: Subgroup) -> Quotient:
    if not is_normal(N):
        raise ValueError("quotient requires a normal subgroup")
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    members = N.members
    for g in range(G.order):
        if coset[g] < 0:
            coset[G.col(g)[members]] = len(reps)
            reps.append(g)
    k = len(reps)
    # Action of every element on the cosets: Nr * g = N(rg).
    actions = np.empty((G.order, k), dtype=np.int64)
    for c, r in enumerate(reps):
        actions[:, c] = coset[G.row(r)]
    gens = [Permutation(tuple(int(x) + 1 for x in actions[g])) for g in G.generator_indices]
    Q = generate_group(k, gens, name=None)
    projection = Q.lookup_rows(actions)
    return Quotient(Q, projection, coset)


@dataclass
class DirectProduct:
    group: Group
    embed1: np.ndarray
    embed2: np.ndarray
    factor1: Group = field(repr=False)
    factor2: Group = field(repr=False)

    def image1(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.group, indices_to_bits(self.embed1[H.members]))

    def image2(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.group, indices_to_bits(self.embed2[H.members]))

    def product_of(self, H1: Subgroup, H2: Subgroup) -> Subgroup:
        """``H1 x H2`` as a subgroup of the product."""
        G = self.group
        return Subgroup(G, G.closure_mask(list(self.embed1[H1.generators]) + list(self.embed2[H2.generators])))


def direct_product(G1: Group, G2: Group, cap: int | None = None) -> DirectProduct:
    cap = element_cap() if cap is None else cap
    if G1.order * G2.order > cap:
        raise GroupTooLarge(G1.order * G2.order, cap)
    d1, d2 = G1.degree, G2.degree
    gens = [Permutation(g.images + tuple(range(d1 + 1, d1 + d2 + 1))) for g in G1.generators]
    gens += [Permutation(tuple(range(1, d1 + 1)) + tuple(x + d1 for x in g.images)) for g in G2.generators]
    name = f"{G1.name} x {G2.name}" if G1.name and G2.name else None
    G = generate_group(d1 + d2, gens, cap=cap, name=name)
    dtype = G.perms.dtype
    ident2 = np.arange(d1, d1 + d2, dtype=dtype)
    ident1 = np.arange(d1, dtype=dtype)
    rows1 = np.hstack([G1.perms.astype(dtype), np.tile(ident2, (G1.order, 1))])
    rows2 = np.hstack([np.tile(ident1, (G2.order, 1)), G2.perms.astype(dtype) + d1])
    return DirectProduct(G, G.lookup_rows(rows1), G.lookup_rows(rows2), G1, G2)


def all_subgroups(G: Group, cap: int = ORACLE_CAP) -> list[Subgroup]:
    """Every subgroup, by closing the cyclic subgroups under joins (test oracle)."""
    if G.order > cap:
        raise GroupTooLarge(G.order, cap)
    cyclic = {}
    for x in range(G.order):
        m = G.closure_mask([x])
        cyclic.setdefault(m, Subgroup(G, m))
    found = dict(cyclic)
    work = list(cyclic.values())
    cyc = list(cyclic.values())
    while work:
        H = work.pop()
        for C in cyc:
            if C <= H:
                continue
            J = join(H, C)
            if J.mask not in found:
                found[J.mask] = J
                work.append(J)
    return sorted(found.values(), key=Subgroup.key)


def abelian_normal_subgroups(G: Group) -> list[Subgroup]:
    return [N for N in normal_subgroups(G) if N.is_abelian()]


def product_set_mask(H: Subgroup, K: Subgroup) -> int:
    """Mask of the set ``HK``."""
    G = H.parent
    flags = np.zeros(G.order, dtype=bool)
    hm = H.members
    for k in K.members:
        flags[G.col(int(k))[hm]] = True
    return bool_to_bits(flags)


def commute_elementwise(H: Subgroup, K: Subgroup) -> bool:
    G = H.parent
    return K.mask & ~G.centralizer_mask_of_set(H.generators) == 0


def index_set(H: Subgroup) -> list[int]:
    return [int(i) for i in bits_to_indices(H.mask)]
