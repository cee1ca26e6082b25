"""Rerun every machine-checkable claim and collect a pass/fail/skipped ledger."""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .catalog import CatalogEntry, classify_orders
from .constructions import (
    builtin_group,
    construct_primitive_group,
    lemma27_suite,
    prop213_check,
    singer_normalizer_check,
)
from .fields import build_field
from .group import Group, GroupTooLarge
from .isomorphism import is_isomorphic
from .lattice import cd_lattice, cd_measure, is_cd_simple, product_lattice_check, verify_lattice_identities
from .normal_structure import (
    direct_factors,
    has_property_a,
    prop21_check,
    theorem1_decompose,
    theorem24_verify,
)
from .numtheory import excluded_order, lemma210_enumerate, wagstaff_primes
from .structure import all_subgroups, direct_product, sylow_subgroup

PRODUCT_ORDER_LIMIT = 2000
PRODUCT_SAMPLES = 20


@dataclass
class ClaimResult:
    claim: str
    anchor: str
    status: str  # "pass", "fail" or "skipped"
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerificationLedger:
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    @property
    def failures(self) -> list[ClaimResult]:
        return [r for r in self.results if r.status == "fail"]

    def status(self, claim: str) -> str:
        for r in self.results:
            if r.claim == claim:
                return r.status
        raise KeyError(claim)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            line = f"[{r.status.upper():>7}] {r.claim}: {r.anchor}"
            if r.detail:
                line += f" ({r.detail})"
            if r.status != "skipped":
                line += f" [{r.seconds:.1f}s]"
            lines.append(line)
        counts = {s: sum(1 for r in self.results if r.status == s) for s in ("pass", "fail", "skipped")}
        lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
        return "\n".join(lines)


@dataclass
class _Claim:
    name: str
    anchor: str
    tags: tuple[str, ...]
    run: Callable[[], tuple[bool, str]]


def _groups(catalog: list[CatalogEntry], orders: Iterable[int] | None = None) -> list[tuple[str, Group]]:
    wanted = None if orders is None else set(orders)
    return [(e.id, e.group()) for e in catalog if wanted is None or e.order in wanted]


def _all_pass(items: Iterable[tuple[str, bool]]) -> tuple[bool, str]:
    checked = 0
    bad = []
    for name, ok in items:
        checked += 1
        if not ok:
            bad.append(name)
    if bad:
        return False, f"failed on {', '.join(bad[:10])}" + (" ..." if len(bad) > 10 else "")
    return True, f"{checked} checked"


def _sample_products(catalog: list[CatalogEntry], count: int, seed: int = 2024) -> list[tuple[CatalogEntry, CatalogEntry]]:
    rng = random.Random(seed)
    nontrivial = [e for e in catalog if e.order > 1]
    pairs = []
    while nontrivial and len(pairs) < count:
        a, b = rng.choice(nontrivial), rng.choice(nontrivial)
        if a.order * b.order <= PRODUCT_ORDER_LIMIT:
            pairs.append((a, b))
    return pairs


def _theorem1_equivalence(G: Group) -> bool:
    """Property A holds exactly when ``G`` is a direct product of CD-simple groups."""
    if has_property_a(G).holds:
        d = theorem1_decompose(G)
        return d.is_direct and all(d.factors_cd_simple)
    return not all(is_cd_simple(F) for F in direct_factors(G))


def build_claims(catalog: list[CatalogEntry]) -> list[_Claim]:
    S4 = builtin_group("symmetric", 4)

    def classification() -> tuple[bool, str]:
        report = classify_orders(catalog, range(1, 51))
        if report.errors:
            return False, f"{len(report.errors)} entries failed to classify"
        simple = report.cd_simple_nontrivial
        ids = [f"{r.order}.{r.index}" for r in simple]
        if len(simple) != 1 or simple[0].order != 24:
            return False, f"nontrivial CD-simple groups: {ids or 'none'}"
        entry = next(e for e in catalog if (e.order, e.index) == (simple[0].order, simple[0].index))
        if not is_isomorphic(entry.group(), S4):
            return False, f"{ids[0]} is not isomorphic to S4"
        return True, f"only {ids[0]} (S4) among {len(report.records)} groups"

    def sylow3_measure() -> tuple[bool, str]:
        return _all_pass(
            (name, cd_measure(G, sylow_subgroup(G, 3)) >= 81) for name, G in _groups(catalog, (36, 45))
        )

    def m_star_at_least(order: int, bound: int) -> Callable[[], tuple[bool, str]]:
        return lambda: _all_pass(
            (name, cd_lattice(G).max_measure >= bound) for name, G in _groups(catalog, (order,))
        )

    def abelian_eight() -> tuple[bool, str]:
        return _all_pass(
            (name, any(H.order == 8 and H.is_abelian() for H in all_subgroups(G)))
            for name, G in _groups(catalog, (16,))
        )

    def theorem23() -> tuple[bool, str]:
        excluded = [(n, G) for n, G in _groups(catalog) if G.order > 1 and excluded_order(G.order)]
        orders = sorted({G.order for _, G in excluded})
        ok, detail = _all_pass((n, cd_lattice(G).max_measure > G.order) for n, G in excluded)
        return ok, f"{detail}; orders {orders}"

    def prop21() -> tuple[bool, str]:
        return _all_pass((n, prop21_check(G)) for n, G in _groups(catalog))

    def identities() -> tuple[bool, str]:
        return _all_pass((n, verify_lattice_identities(G).ok) for n, G in _groups(catalog))

    def products() -> tuple[bool, str]:
        pairs = _sample_products(catalog, PRODUCT_SAMPLES)
        items = []
        for a, b in pairs:
            D = direct_product(a.group(), b.group())
            name = f"{a.id} x {b.id}"
            items.append((name, product_lattice_check(D) and verify_lattice_identities(D.group).ok))
        D = direct_product(S4, S4)
        L = cd_lattice(D.group)
        items.append(("S4 x S4", product_lattice_check(D) and L.max_measure == 576 and len(L) == 4))
        return _all_pass(items)

    def theorem1() -> tuple[bool, str]:
        items = [(n, _theorem1_equivalence(G)) for n, G in _groups(catalog)]
        items.append(("S4 x S4", _theorem1_equivalence(direct_product(S4, S4).group)))
        return _all_pass(items)

    def lemma27() -> tuple[bool, str]:
        return _all_pass((f"q={q}", lemma27_suite(q).ok) for q in (2, 3, 4, 5))

    def singer() -> tuple[bool, str]:
        cases = [((2, 4), 5, 60), ((2, 2), 3, 6), ((2, 3), 7, 21)]
        items = []
        for (p, n), d, expected in cases:
            r = singer_normalizer_check(build_field(p, n), d)
            items.append((f"GF({p}^{n}), d={d}", r.ok and r.normalizer_order == expected))
        return _all_pass(items)

    def theorem24(args: tuple[int, int, int, int] | None, family: int) -> Callable[[], tuple[bool, str]]:
        def run() -> tuple[bool, str]:
            G = S4 if args is None else construct_primitive_group(*args).group
            r = theorem24_verify(G)
            ok = r.status == "pass" and r.families == [family] * len(r.analyses) and bool(r.analyses)
            return ok, f"|G| = {G.order}, status {r.status}, families {r.families}"
        return run

    def construction(args: tuple[int, int, int, int], order: int, iso_s4: bool) -> Callable[[], tuple[bool, str]]:
        def run() -> tuple[bool, str]:
            A = construct_primitive_group(*args)
            G = A.group
            ok = G.order == order and is_cd_simple(G) and prop213_check(A).ok
            if iso_s4:
                ok = ok and is_isomorphic(G, S4)
            return ok, f"|G| = {G.order}, CD-simple {is_cd_simple(G)}"
        return run

    def lemma210() -> tuple[bool, str]:
        got = [t.as_tuple() for t in lemma210_enumerate(31)]
        expected = [(2, 3, 2, 1), (2, 5, 4, 2), (3, 13, 3, 1), (19, (19**19 - 1) // 18, 19, 1),
                    (31, (31**31 - 1) // 30, 31, 1)]
        return sorted(got) == sorted(expected), f"{len(got)} tuples"

    def wagstaff() -> tuple[bool, str]:
        got = wagstaff_primes(180)
        return got == [2, 3, 19, 31], f"{got}"

    big = ("big-constructions",)
    return [
        _Claim("classification-1-50", "trivial group and S4 are the only CD-simple groups of order <= 50", (), classification),
        _Claim("exclusion-36-45", "groups of order 36 or 45 have a Sylow 3-subgroup of measure >= 81", (), sylow3_measure),
        _Claim("exclusion-40", "groups of order 40 have m* >= 50", (), m_star_at_least(40, 50)),
        _Claim("exclusion-48", "groups of order 48 have m* >= 64", (), m_star_at_least(48, 64)),
        _Claim("order-16-abelian-8", "groups of order 16 contain an abelian subgroup of order 8", (), abelian_eight),
        _Claim("theorem-2.3", "groups of excluded order have m* > |G|", (), theorem23),
        _Claim("proposition-2.1", "m* = |G| forces every nontrivial normal subgroup to be noncyclic", (), prop21),
        _Claim("lattice-identities", "CD lattice identities hold corpus-wide", (), identities),
        _Claim("proposition-3", "CD of a direct product is the product of the CD lattices", ("products",), products),
        _Claim("theorem-1", "Property A iff direct product of CD-simple groups", (), theorem1),
        _Claim("lemma-2.7", "GL(2,q), q <= 5: q+1 Sylow p-subgroups, pairwise trivial, pairs generate SL(2,q)", (), lemma27),
        _Claim("singer-normalizer", "normalizer of a Singer subgroup has order (p^n - 1)n", (), singer),
        _Claim("construction-24", "(2,3,2,1) gives a CD-simple group isomorphic to S4", (), construction((2, 3, 2, 1), 24, True)),
        _Claim("construction-320", "(2,5,4,2) gives a CD-simple group of order 320", (), construction((2, 5, 4, 2), 320, False)),
        _Claim("construction-1053", "(3,13,3,1) gives a CD-simple group of order 1053", big, construction((3, 13, 3, 1), 1053, False)),
        _Claim("theorem-2.4-S4", "S4 falls in family 1", (), theorem24(None, 1)),
        _Claim("theorem-2.4-320", "order-320 construction falls in family 2", (), theorem24((2, 5, 4, 2), 2)),
        _Claim("theorem-2.4-1053", "order-1053 construction falls in family 3", big, theorem24((3, 13, 3, 1), 3)),
        _Claim("lemma-2.10", "admissible tuples for p <= 31", (), lemma210),
        _Claim("wagstaff", "p < 180 with (p^p - 1)/(p - 1) prime are 2, 3, 19, 31", (), wagstaff),
    ]


CLAIM_TAGS = ("big-constructions", "products")


def verify_paper(catalog: list[CatalogEntry], skip: Iterable[str] = (),
                 progress: Callable[[ClaimResult], None] | None = None) -> VerificationLedger:
    """Run every claim; ``skip`` holds tags or claim names to report as skipped."""
    skip = set(skip)
    ledger = VerificationLedger()
    for claim in build_claims(catalog):
        if claim.name in skip or skip.intersection(claim.tags):
            result = ClaimResult(claim.name, claim.anchor, "skipped")
        else:
            start = time.perf_counter()
            try:
                ok, detail = claim.run()
            except (GroupTooLarge, ValueError, KeyError, AssertionError) as exc:
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            result = ClaimResult(claim.name, claim.anchor, "pass" if ok else "fail", detail,
                                 time.perf_counter() - start)
        ledger.results.append(result)
        if progress is not None:
            progress(result)
    return ledger
