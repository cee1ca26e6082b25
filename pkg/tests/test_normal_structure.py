import pytest

from cdlattice.constructions import builtin_group, construct_primitive_group
from cdlattice.group import generate_group
from cdlattice.isomorphism import is_isomorphic
from cdlattice.lattice import is_cd_simple
from cdlattice.normal_structure import (
    PreconditionError,
    direct_factors,
    has_property_a,
    is_directly_indecomposable,
    prop6_check,
    prop21_check,
    sylow_lemma_suite,
    theorem1_decompose,
    theorem24_verify,
)
from cdlattice.structure import all_subgroups, direct_product


class TestPropertyA:
    def test_s4(self, s4):
        r = has_property_a(s4)
        assert r.holds
        assert [w.as_tuple() for w in r.witnesses] == [(4, 6)]

    def test_abelian_fails(self):
        A = builtin_group("cyclic", 5)
        r = has_property_a(A)
        assert not r.holds
        assert [w.as_tuple() for w in r.witnesses] == [(5, 1)]
        assert r.violating.is_whole()

    def test_s4_squared(self, s4):
        r = has_property_a(direct_product(s4, s4).group)
        assert r.holds
        assert sorted(w.as_tuple() for w in r.witnesses) == [(4, 6), (4, 6), (16, 36)]

    def test_trivial(self):
        r = has_property_a(generate_group(1, []))
        assert r.holds and r.witnesses == []

    def test_holds_iff_all_witnesses_strict(self, catalog):
        for e in catalog:
            r = has_property_a(e.group())
            assert r.holds == all(w.index > w.order for w in r.witnesses)

    def test_products_of_primitive_groups(self, s4):
        # Proposition 1 instance: products of groups [V]H with |H| > |V|.
        G320 = construct_primitive_group(2, 5, 4, 2).group
        for G in (direct_product(s4, s4).group, direct_product(s4, G320).group):
            assert has_property_a(G).holds


class TestTheorem1:
    def test_s4(self, s4):
        d = theorem1_decompose(s4)
        assert [A.order for A in d.atoms] == [24]
        assert d.is_direct and d.factors_cd_simple == [True]

    def test_s4_squared(self, s4):
        d = theorem1_decompose(direct_product(s4, s4).group)
        assert [A.order for A in d.atoms] == [24, 24]
        assert d.is_direct and d.factors_cd_simple == [True, True]
        assert all(is_isomorphic(F, s4) for F in d.factors)

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            theorem1_decompose(builtin_group("dihedral", 4))

    def test_equivalence_corpus(self, catalog):
        for e in catalog:
            G = e.group()
            product_of_simple = all(is_cd_simple(F) for F in direct_factors(G))
            assert has_property_a(G).holds == product_of_simple, e.id
            if product_of_simple:
                d = theorem1_decompose(G)
                assert d.is_direct and all(d.factors_cd_simple)


class TestIndecomposable:
    def test_examples(self, s4):
        assert is_directly_indecomposable(s4)
        assert not is_directly_indecomposable(builtin_group("klein4"))
        assert not is_directly_indecomposable(builtin_group("cyclic", 6))

    def test_factors_multiply(self, catalog):
        for e in catalog:
            factors = direct_factors(e.group())
            total = 1
            for F in factors:
                total *= F.order
            assert total == e.order
            assert all(is_directly_indecomposable(F) for F in factors)

    def test_prop6(self, catalog):
        for e in catalog:
            G = e.group()
            if G.order <= 48 and is_directly_indecomposable(G) and has_property_a(G).holds:
                assert prop6_check(G, all_subgroups(G))


class TestProp21:
    def test_s4(self, s4):
        assert prop21_check(s4)

    def test_vacuous(self):
        assert prop21_check(builtin_group("cyclic", 7))

    def test_corpus(self, catalog):
        assert all(prop21_check(e.group()) for e in catalog)


class TestSylowSuite:
    def test_frobenius56(self):
        r = sylow_lemma_suite(builtin_group("frobenius56"), 7)
        assert r.ok
        assert r.results["normal_or_self_normalizing"].status == "pass"
        assert r.results["abelian_complement"].status == "pass"
        assert "m = 8" in r.results["abelian_complement"].detail

    def test_frobenius56_times_c7(self):
        G = direct_product(builtin_group("frobenius56"), builtin_group("cyclic", 7)).group
        r = sylow_lemma_suite(G, 7)
        assert r.results["sylow_pairs"].status == "pass"
        assert r.results["sylow_pairs"].detail == "8 Sylow subgroups, |O_p| = 7"
        assert r.results["abelian_complement"].status == "vacuous"

    def test_s4(self, s4):
        r = sylow_lemma_suite(s4, 2)
        assert r.results["normal_or_self_normalizing"].detail == "n_p = 3, |G:P| = 3"

    def test_normal_sylow(self):
        # C_5 x S_3 of order 30, p = 5: the Sylow 5-subgroup is normal.
        G = direct_product(builtin_group("cyclic", 5), builtin_group("symmetric", 3)).group
        r = sylow_lemma_suite(G, 5)
        assert r.results["normal_or_self_normalizing"].status == "pass"
        assert "n_p = 1" in r.results["normal_or_self_normalizing"].detail

    def test_vacuous_shape(self):
        r = sylow_lemma_suite(builtin_group("cyclic", 8), 2)
        assert all(v.status == "vacuous" for v in r.results.values())

    def test_corpus(self, catalog):
        for e in catalog:
            if e.order < 2:
                continue
            for p in (2, 3, 5, 7):
                assert sylow_lemma_suite(e.group(), p).ok, e.id


class TestTheorem24:
    def test_s4(self, s4):
        r = theorem24_verify(s4)
        assert r.status == "pass"
        (a,) = r.analyses
        assert (a.order, a.n, a.quotient_order, a.family) == (4, 2, 6, 1)

    def test_320(self):
        r = theorem24_verify(construct_primitive_group(2, 5, 4, 2).group)
        (a,) = r.analyses
        assert r.status == "pass" and (a.n, a.quotient_order, a.family) == (4, 20, 2)

    def test_1053(self):
        r = theorem24_verify(construct_primitive_group(3, 13, 3, 1).group)
        (a,) = r.analyses
        assert r.status == "pass" and (a.n, a.quotient_order, a.family) == (3, 39, 3)

    def test_inapplicable(self):
        assert theorem24_verify(builtin_group("cyclic", 36)).status == "inapplicable"
        # Order 24 = 3 * 2^3 but m* > |G| for the cyclic group.
        assert theorem24_verify(builtin_group("cyclic", 24)).status == "inapplicable"

    def test_corpus_never_fails(self, catalog):
        for e in catalog:
            if e.order > 1:
                assert theorem24_verify(e.group()).status != "fail", e.id
