import random

import pytest

from cdlattice.constructions import builtin_group
from cdlattice.group import Permutation, Subgroup, generate_group
from cdlattice.isomorphism import find_isomorphism, is_isomorphic
from cdlattice.lattice import (
    cd_lattice,
    cd_measure,
    is_cd_simple,
    product_lattice_check,
    verify_lattice_identities,
)
from cdlattice.structure import all_subgroups, direct_product

from oracles import naive_measure


def klein_in_s4(G):
    return G.subgroup([G.index(Permutation.from_cycles(4, c)) for c in ("(1 2)(3 4)", "(1 3)(2 4)")])


class TestMeasure:
    def test_klein(self, s4):
        assert cd_measure(s4, klein_in_s4(s4)) == 16

    def test_trivial_and_whole(self, s4):
        assert cd_measure(s4, s4.trivial_subgroup) == 24
        assert cd_measure(s4, s4.whole) == 24

    def test_rejects_non_subgroup(self, s4):
        with pytest.raises(ValueError):
            cd_measure(s4, Subgroup(s4, 0b110))


class TestLattice:
    def test_s4(self, s4):
        L = cd_lattice(s4)
        assert L.max_measure == 24
        assert [H.order for H in L.members] == [1, 24]
        assert is_cd_simple(s4)

    def test_abelian(self):
        G = builtin_group("cyclic", 6)
        L = cd_lattice(G)
        assert L.max_measure == 36 and [H.order for H in L.members] == [6]
        assert not is_cd_simple(G)

    def test_trivial(self):
        assert is_cd_simple(generate_group(1, []))

    def test_s4_squared(self, s4):
        D = direct_product(s4, s4)
        L = cd_lattice(D.group)
        assert L.max_measure == 576
        assert [H.order for H in L.members] == [1, 24, 24, 576]
        assert product_lattice_check(D)
        assert verify_lattice_identities(D.group).ok

    def test_oracle_equivalence(self, small_groups):
        for G in small_groups:
            subs = all_subgroups(G)
            measures = {H.mask: naive_measure(G, H.members.tolist()) for H in subs}
            best = max(measures.values())
            L = cd_lattice(G)
            assert L.max_measure == best
            assert L.masks() == {m for m, v in measures.items() if v == best}

    def test_duality(self, catalog):
        for e in catalog:
            G = e.group()
            L = cd_lattice(G)
            for H in L.members:
                assert cd_measure(G, H) == cd_measure(G, L.dual(H)) == L.max_measure
            if L.max_measure == G.order:
                assert L.least.is_trivial() and L.greatest.is_whole()

    def test_identities_order_16(self, catalog):
        for e in catalog:
            if e.order == 16:
                assert verify_lattice_identities(e.group()).ok

    def test_identity_report_flags_failures(self, s4):
        # A forged lattice whose duality map is wrong must be reported.
        L = cd_lattice(builtin_group("dihedral", 4))
        bad = type(L)(L.parent, L.max_measure, L.members, {m: L.parent.full_mask for m in L.duality})
        assert not verify_lattice_identities(L.parent, bad).ok

    def test_products_random(self, catalog):
        rng = random.Random(11)
        groups = [e for e in catalog if 1 < e.order <= 16]
        for _ in range(6):
            a, b = rng.choice(groups), rng.choice(groups)
            assert product_lattice_check(direct_product(a.group(), b.group()))


class TestIsomorphism:
    def test_construction_is_s4(self, s4):
        from cdlattice.constructions import construct_primitive_group

        assert is_isomorphic(construct_primitive_group(2, 3, 2, 1).group, s4)

    def test_c4_vs_klein(self):
        assert not is_isomorphic(builtin_group("cyclic", 4), builtin_group("klein4"))

    def test_self(self, s4):
        assert is_isomorphic(s4, s4)

    def test_map_is_homomorphism(self, s4):
        other = generate_group(4, [Permutation.from_cycles(4, "(1 2 3 4)"), Permutation.from_cycles(4, "(3 4)")])
        phi = find_isomorphism(s4, other)
        assert phi is not None and len(set(phi.tolist())) == 24
        for a in range(24):
            for b in range(24):
                assert phi[s4.mul(a, b)] == other.mul(int(phi[a]), int(phi[b]))

    def test_catalog_classes_distinct(self, catalog):
        # Catalog entries of one order are pairwise non-isomorphic.
        for order in (8, 12, 16, 18, 20, 24):
            groups = [e.group() for e in catalog if e.order == order]
            for i, G in enumerate(groups):
                for H in groups[i + 1 :]:
                    assert not is_isomorphic(G, H)

    def test_relabelled_catalog_groups(self, catalog):
        rng = random.Random(3)
        for e in catalog[::9]:
            G = e.group()
            points = list(range(1, e.degree + 1))
            rng.shuffle(points)
            relabel = Permutation(tuple(points))
            gens = [relabel.inverse() * g * relabel for g in e.generators]
            assert is_isomorphic(G, generate_group(e.degree, gens))

    def test_cap(self):
        from cdlattice.group import GroupTooLarge

        G = builtin_group("cyclic", 30)
        with pytest.raises(GroupTooLarge):
            is_isomorphic(G, G, cap=10)
