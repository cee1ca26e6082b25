"""Property A, direct decompositions, and checks of the Sylow-type lemmas on concrete groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .group import Group, Subgroup, centralizer, is_normal, join, product_size
from .lattice import cd_lattice, is_cd_simple
from .numtheory import classify_family, factorize, p_part, qpk_decompose
from .structure import (
    commute_elementwise,
    normal_subgroups,
    o_p,
    quotient,
    sylow_count,
    sylow_subgroup,
    sylow_subgroups,
)


@dataclass
class Witness:
    subgroup: Subgroup
    order: int
    index: int  # |G : C_G(A)|

    def as_tuple(self) -> tuple[int, int]:
        return (self.order, self.index)


@dataclass
class PropertyAReport:
    holds: bool
    witnesses: list[Witness]
    violating: Subgroup | None = None


def has_property_a(G: Group) -> PropertyAReport:
    """Every nontrivial abelian normal ``A`` has ``|G : C_G(A)| > |A|``."""
    witnesses = []
    violating = None
    for A in normal_subgroups(G):
        if A.is_trivial() or not A.is_abelian():
            continue
        index = G.order // centralizer(G, A).order
        witnesses.append(Witness(A, A.order, index))
        if index <= A.order and violating is None:
            violating = A
    return PropertyAReport(violating is None, witnesses, violating)


class PreconditionError(ValueError):
    pass


@dataclass
class Decomposition:
    atoms: list[Subgroup]
    is_direct: bool
    factors: list[Group] = field(repr=False)
    factors_cd_simple: list[bool] = field(default_factory=list)


def _product_mask(G: Group, subgroups: list[Subgroup]) -> int:
    mask = 1
    for H in subgroups:
        mask = G.closure_mask(Subgroup(G, mask).generators + H.generators)
    return mask


def theorem1_decompose(G: Group) -> Decomposition:
    """Split a group with Property A into the atoms of its Chermak-Delgado lattice."""
    if not has_property_a(G).holds:
        raise PreconditionError("group does not have Property A")
    L = cd_lattice(G)
    if G.order == 1:
        return Decomposition([], True, [], [])
    atoms = L.atoms()
    direct = all(is_normal(A) for A in atoms)
    for A, B in combinations(atoms, 2):
        direct = direct and (A & B).is_trivial() and commute_elementwise(A, B)
    size = 1
    for A in atoms:
        size *= A.order
    direct = direct and size == G.order and _product_mask(G, atoms) == G.full_mask
    factors = [A.as_group() for A in atoms]
    return Decomposition(atoms, direct, factors, [is_cd_simple(F) for F in factors])


def direct_complement_pair(G: Group) -> tuple[Subgroup, Subgroup] | None:
    """Nontrivial normal ``H, K`` with ``H & K = 1``, ``[H, K] = 1`` and ``|H||K| = |G|``."""
    normals = [N for N in normal_subgroups(G) if not N.is_trivial() and not N.is_whole()]
    for H in normals:
        for K in normals:
            if H.order * K.order != G.order or H.mask & K.mask != 1:
                continue
            if commute_elementwise(H, K) and product_size(H, K) == G.order:
                return H, K
    return None


def is_directly_indecomposable(G: Group) -> bool:
    return direct_complement_pair(G) is None


def direct_factors(G: Group) -> list[Group]:
    """Indecomposable direct factors, found by repeated normal-complement search."""
    if G.order == 1:
        return []
    pair = direct_complement_pair(G)
    if pair is None:
        return [G]
    H, K = pair
    return direct_factors(H.as_group()) + direct_factors(K.as_group())


def prop21_check(G: Group) -> bool:
    """When ``m*(G) = |G|``, no nontrivial normal subgroup is cyclic."""
    if cd_lattice(G).max_measure != G.order:
        return True
    for N in normal_subgroups(G):
        if N.is_trivial():
            continue
        if G.element_orders[N.members].max() == N.order:
            return False
    return True


@dataclass
class LemmaResult:
    status: str  # "pass", "fail" or "vacuous"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class SuiteReport:
    results: dict[str, LemmaResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())


def _order_shape(N: int, p: int) -> tuple[int, int, int] | None:
    """``(m, k, q)`` for ``N = m p^k`` with ``p`` not dividing ``m`` and ``m/q < p < m``."""
    k, pk = p_part(N, p)
    m = N // pk
    if k < 1 or m < 2:
        return None
    q = min(factorize(m))
    if m < q * p and p < m:
        return m, k, q
    return None


def sylow_lemma_suite(G: Group, p: int) -> SuiteReport:
    report = SuiteReport()
    shape = _order_shape(G.order, p) if G.order > 1 else None
    if shape is None:
        reason = f"|G| = {G.order} is not m p^k with m/q < p < m"
        for name in ("normal_or_self_normalizing", "abelian_complement", "sylow_pairs"):
            report.results[name] = LemmaResult("vacuous", reason)
        return report
    m, k, q = shape
    P = sylow_subgroup(G, p)
    count = sylow_count(G, p)
    normal = count == 1
    self_normalizing = count == G.order // P.order
    report.results["normal_or_self_normalizing"] = LemmaResult(
        "pass" if normal or self_normalizing else "fail",
        f"n_p = {count}, |G:P| = {G.order // P.order}",
    )

    if k != 1 or normal:
        report.results["abelian_complement"] = LemmaResult("vacuous", "needs k = 1 and P not normal")
    else:
        X = [x for x in range(G.order) if int(G.element_orders[x]) % p]
        mask = sum(1 << x for x in X)
        H = Subgroup(G, mask)
        ok = len(X) == m and H.is_closed() and H.is_abelian() and is_normal(H)
        # X is defined by element orders, so any automorphism preserves it.
        report.results["abelian_complement"] = LemmaResult(
            "pass" if ok else "fail", f"|X| = {len(X)}, m = {m}"
        )

    if m == q:
        report.results["sylow_pairs"] = LemmaResult("vacuous", "needs 1 < m/q")
    elif normal:
        report.results["sylow_pairs"] = LemmaResult("vacuous", "P is normal, no distinct pair")
    else:
        sylows = sylow_subgroups(G, p)
        Op = o_p(G, p)
        ok = Op.order == p ** (k - 1)
        for A, B in combinations(sylows, 2):
            ok = ok and join(A, B).is_whole() and (A & B) == Op
        report.results["sylow_pairs"] = LemmaResult(
            "pass" if ok else "fail", f"{len(sylows)} Sylow subgroups, |O_p| = {Op.order}"
        )
    return report


@dataclass
class MinimalNormalAnalysis:
    order: int
    n: int | None
    quotient_order: int
    r: int | None
    irreducible: bool
    family: int | None
    failures: list[str] = field(default_factory=list)


@dataclass
class Theorem24Report:
    status: str  # "pass", "fail" or "inapplicable"
    reason: str = ""
    analyses: list[MinimalNormalAnalysis] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    @property
    def families(self) -> list[int | None]:
        return [a.family for a in self.analyses]


def _exponent_of(value: int, p: int) -> int | None:
    k, pk = p_part(value, p)
    return k if pk == value else None


def theorem24_verify(G: Group) -> Theorem24Report:
    """Analyze every minimal normal subgroup of a group of order ``q p^k`` with ``m*(G) = |G|``."""
    shape = qpk_decompose(G.order) if G.order > 1 else None
    if shape is None:
        return Theorem24Report("inapplicable", f"|G| = {G.order} is not q p^k with p < q")
    q, p, _ = shape
    if cd_lattice(G).max_measure != G.order:
        return Theorem24Report("inapplicable", "m*(G) != |G|")

    report = Theorem24Report("pass")
    for N in normal_subgroups(G, minimal_only=True):
        failures = []
        n = _exponent_of(N.order, p)
        if n is None:
            failures.append(f"|N| = {N.order} is not a power of {p}")
        C = centralizer(G, N)
        Q = quotient(G, C)
        H = Q.group
        r = None
        if H.order % q == 0:
            r = _exponent_of(H.order // q, p)
        if r is None or r < 1:
            failures.append(f"|G/C_G(N)| = {H.order} is not {q} p^r with r >= 1")
        elif n is not None and not p**n < q * p**r:
            failures.append(f"p^n = {p**n} is not below q p^r = {q * p**r}")

        T = sylow_subgroup(H, q)
        lifts = [Q.preimage_representative(t) for t in T.generators]
        irreducible = T.order == q and _orbits_generate(G, N, lifts)
        if not irreducible:
            failures.append("Sylow q-subgroup of G/C_G(N) does not act irreducibly on N")

        family = classify_family(p, q, n, r) if n and r else None
        if family is None:
            failures.append(f"(p, q, n, r) = ({p}, {q}, {n}, {r}) matches no family")
        report.analyses.append(MinimalNormalAnalysis(N.order, n, H.order, r, irreducible, family, failures))
        if failures:
            report.status = "fail"
    return report


def _orbits_generate(G: Group, N: Subgroup, acting: list[int]) -> bool:
    """For every ``v != 1`` in ``N``, the orbit of ``v`` under conjugation by ``acting`` generates ``N``."""
    maps = [G.conj_map(x) for x in acting]
    for v in N.members[1:]:
        orbit = {int(v)}
        queue = [int(v)]
        for w in queue:
            for m in maps:
                u = int(m[w])
                if u not in orbit:
                    orbit.add(u)
                    queue.append(u)
        if G.closure_mask(sorted(orbit)) != N.mask:
            return False
    return True


def prop6_check(G: Group, subgroups: list[Subgroup]) -> bool:
    """Every ``1 < H < G`` among ``subgroups`` has ``|G : C_G(H)| > |H|``."""
    for H in subgroups:
        if H.is_trivial() or H.is_whole():
            continue
        if G.order // centralizer(G, H).order <= H.order:
            return False
    return True
