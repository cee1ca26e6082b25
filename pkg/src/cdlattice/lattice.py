"""Chermak-Delgado measure and lattice.

Every member ``H`` of the lattice satisfies ``H = C_G(C_G(H))``, so it is a
centralizer, hence an intersection of element centralizers.  The search space
is therefore the intersection closure of ``{C_G(x)}`` plus ``G`` and the
centralizers of those, which is far smaller than the subgroup lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .group import Group, Subgroup, bits_to_indices, is_normal, join, product_size
from .structure import DirectProduct

MEASURE_LIMIT = 2**63


def cd_measure(G: Group, H: Subgroup) -> int:
    """``|H| * |C_G(H)|``."""
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not H.is_closed():
        raise ValueError("element set is not a subgroup")
    return H.order * G.centralizer_mask_of_set(H.generators).bit_count()


def _centralizer_of_mask(G: Group, mask: int) -> int:
    return G.centralizer_mask_of_set(bits_to_indices(mask))


@dataclass
class CDLattice:
    parent: Group
    max_measure: int
    members: list[Subgroup]
    duality: dict[int, int] = field(repr=False)  # member mask -> mask of its centralizer

    @property
    def least(self) -> Subgroup:
        return self.members[0]

    @property
    def greatest(self) -> Subgroup:
        return self.members[-1]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, H: Subgroup) -> bool:
        return H.mask in self.duality

    def dual(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.duality[H.mask])

    def covers(self) -> list[tuple[Subgroup, Subgroup]]:
        """Pairs ``(H, K)`` of members with ``H < K`` and nothing strictly between."""
        out = []
        for H in self.members:
            for K in self.members:
                if H < K and not any(H < R < K for R in self.members):
                    out.append((H, K))
        return out

    def atoms(self) -> list[Subgroup]:
        least = self.least
        return [K for H, K in self.covers() if H == least]

    def masks(self) -> set[int]:
        return set(self.duality)


def cd_lattice(G: Group) -> CDLattice:
    cached = G.cache.get("cd_lattice")
    if cached is not None:
        return cached
    if G.order >= 2**32:
        raise OverflowError("|G|^2 would not fit in 64 bits")
    family: set[int] = {G.element_centralizer_mask(x) for x in range(1, G.order)}
    family.add(G.full_mask)
    work = list(family)
    while work:
        a = work.pop()
        for b in list(family):
            c = a & b
            if c not in family:
                family.add(c)
                work.append(c)
    duals = {m: _centralizer_of_mask(G, m) for m in family}
    for m in list(duals.values()):
        if m not in duals:
            duals[m] = _centralizer_of_mask(G, m)
    measures = {m: m.bit_count() * c.bit_count() for m, c in duals.items()}
    best = max(measures.values())
    assert best < MEASURE_LIMIT
    members = sorted((Subgroup(G, m) for m, v in measures.items() if v == best), key=Subgroup.key)
    lattice = CDLattice(G, best, members, {H.mask: duals[H.mask] for H in members})
    G.cache["cd_lattice"] = lattice
    return lattice


def is_cd_simple(G: Group) -> bool:
    masks = cd_lattice(G).masks()
    return masks == {1, G.full_mask}


@dataclass
class IdentityReport:
    group: Group
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed:
            self.failures.append(f"{name}: {detail}" if detail else name)


def verify_lattice_identities(G: Group, lattice: CDLattice | None = None) -> IdentityReport:
    """Check the structural identities every Chermak-Delgado lattice satisfies."""
    L = cd_lattice(G) if lattice is None else lattice
    report = IdentityReport(G)
    members = L.members
    masks = L.masks()

    for H in members:
        C = L.dual(H)
        report.record("dual is member", C.mask in masks, f"C(H) for |H|={H.order}")
        if C.mask in masks:
            report.record("double centralizer", L.duality[C.mask] == H.mask, f"|H|={H.order}")
        report.record("duality preserves measure", cd_measure(G, H) == cd_measure(G, C))

    for H, K in combinations(members, 2):
        J = join(H, K)
        hk = product_size(H, K)
        report.record("HK is the join", J.order == hk, f"|H|={H.order}, |K|={K.order}")
        report.record("join closed", J.mask in masks)
        report.record("meet closed", (H.mask & K.mask) in masks)
        report.record("duality reverses order", not (H <= K) or L.dual(K) <= L.dual(H))
        # C(H & K) = C(H)C(K): C(H)C(K) lies inside C(H & K), so equal sizes suffice.
        CH, CK = L.dual(H), L.dual(K)
        c_meet = _centralizer_of_mask(G, H.mask & K.mask)
        contains = (CH.mask | CK.mask) & ~c_meet == 0
        report.record(
            "C(H & K) = C(H)C(K)",
            contains and c_meet.bit_count() == product_size(CH, CK),
            f"|H|={H.order}, |K|={K.order}",
        )

    least, greatest = L.least, L.greatest
    report.record("least is abelian", least.is_abelian())
    report.record("least is normal", is_normal(least))
    z = G.centralizer_mask_of_set(G.generator_indices)
    report.record("least contains Z(G)", z & ~least.mask == 0)
    report.record("least/greatest are extremes", all(least <= H <= greatest for H in members))
    report.record("greatest is dual of least", L.duality[least.mask] == greatest.mask)

    for H, K in L.covers():
        report.record("covering pairs are normal", is_normal(H, K), f"{H.order} < {K.order}")

    for A, B, C in combinations(members, 3):
        for X, Y, Z in ((A, B, C), (B, C, A), (C, A, B), (A, C, B), (B, A, C), (C, B, A)):
            if X <= Z:
                lhs = join(X, Y & Z)
                rhs = join(X, Y) & Z
                report.record("modular", lhs.mask == rhs.mask)
    return report


def product_lattice_check(D: DirectProduct) -> bool:
    """``CD(G1 x G2)`` is exactly ``{M1 x M2}`` over members ``Mi`` of ``CD(Gi)``, with ``m*`` multiplying."""
    L1, L2, L = cd_lattice(D.factor1), cd_lattice(D.factor2), cd_lattice(D.group)
    if L.max_measure != L1.max_measure * L2.max_measure:
        return False
    expected = {D.product_of(M1, M2).mask for M1 in L1.members for M2 in L2.members}
    return expected == L.masks()
