import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cdlattice.numtheory import (
    AdmissibleParams,
    EnumerationMismatch,
    classify_family,
    excluded_order,
    factorize,
    is_prime,
    lemma210_enumerate,
    p_part,
    prop211_check,
    qpk_decompose,
    repunit,
    satisfies_lemma210_hypotheses,
    wagstaff_primes,
)
from cdlattice import numtheory


def brute_excluded(N):
    """Scan every prime p | N and report whether some shape fits."""
    for p in sympy.primefactors(N):
        k = sympy.multiplicity(p, N)
        m = N // p**k
        if m < 2:
            continue
        q = min(sympy.primefactors(m))
        if q < m < q * p and p < m:
            return True
    return False


class TestPrimality:
    def test_agrees_with_sympy_below_bound(self):
        assert [n for n in range(20000) if is_prime(n)] == list(sympy.primerange(0, 20000))

    @given(st.integers(min_value=0, max_value=10**40))
    def test_agrees_with_sympy_random(self, n):
        assert is_prime(n) == sympy.isprime(n)

    def test_carmichael_and_strong_pseudoprimes(self):
        for n in (561, 1105, 1729, 2047, 3215031751, 3825123056546413051, 318665857834031151167461):
            assert not is_prime(n)

    def test_large_known_primes(self):
        assert is_prime(2**127 - 1)
        assert is_prime(repunit(19))
        assert is_prime(repunit(31))
        assert not is_prime(repunit(5))
        assert not is_prime((2**127 - 1) * (2**89 - 1))

    def test_beyond_deterministic_bound(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(10**30, 10**31)
            assert is_prime(n) == sympy.isprime(n)


class TestFactor:
    @given(st.integers(min_value=1, max_value=10**9))
    def test_factorize(self, n):
        assert factorize(n) == sympy.factorint(n)

    def test_p_part(self):
        assert p_part(48, 2) == (4, 16)
        assert p_part(45, 2) == (0, 1)


class TestWagstaff:
    def test_below_180(self):
        assert wagstaff_primes(180) == [2, 3, 19, 31]

    def test_repunit(self):
        assert repunit(3) == 13 and repunit(2) == 3

    def test_guard(self):
        with pytest.raises(ValueError):
            wagstaff_primes(1001)

    def test_oracle(self):
        expected = [p for p in sympy.primerange(2, 60) if sympy.isprime((p**p - 1) // (p - 1))]
        assert wagstaff_primes(60) == expected


class TestLemma210:
    def test_small_primes(self):
        got = [t.as_tuple() for t in lemma210_enumerate(31)]
        assert got == [
            (2, 3, 2, 1),
            (2, 5, 4, 2),
            (3, 13, 3, 1),
            (19, repunit(19), 19, 1),
            (31, repunit(31), 31, 1),
        ]
        assert [t.family for t in lemma210_enumerate(31)] == [1, 2, 3, 3, 3]

    def test_k_is_full_multiplicity(self):
        t = lemma210_enumerate(3)[-1]
        assert t.k == 4  # |G| = 3^3 * 13 * 3

    def test_hypotheses(self):
        assert satisfies_lemma210_hypotheses(2, 3, 2, 1)
        assert not satisfies_lemma210_hypotheses(2, 7, 3, 1)  # 2 does not divide 3
        assert not satisfies_lemma210_hypotheses(3, 2, 2, 1)  # 9 > 6

    def test_brute_force_small_p(self):
        # Independent scan of every prime q below p^n for small p and n.
        found = set()
        for p in (2, 3, 5, 7):
            for n in range(1, 9):
                for r in range(1, 4):
                    if n % p**r:
                        continue
                    for q in sympy.primefactors(p**n - 1):
                        if p**n < q * p**r:
                            found.add((p, q, n, r))
        expected = {t.as_tuple() for t in lemma210_enumerate(7)}
        assert found == expected

    def test_mismatch_raises(self, monkeypatch):
        monkeypatch.setattr(numtheory, "_closed_form", lambda p: set())
        with pytest.raises(EnumerationMismatch):
            lemma210_enumerate(5)

    def test_admissible_validation(self):
        with pytest.raises(ValueError):
            AdmissibleParams(2, 3, 2, 1, family=2)

    def test_classify(self):
        assert classify_family(2, 3, 2, 1) == 1
        assert classify_family(2, 5, 4, 2) == 2
        assert classify_family(3, 13, 3, 1) == 3
        assert classify_family(5, 781, 5, 1) is None


class TestShapes:
    def test_examples(self):
        assert excluded_order(40) == (8, 5, 1, 2)
        assert excluded_order(12) == (4, 3, 1, 2)
        assert excluded_order(24) is None
        assert qpk_decompose(24) == (3, 2, 3)
        assert qpk_decompose(1053) == (13, 3, 4)
        assert qpk_decompose(36) is None

    def test_excluded_up_to_50(self):
        assert [N for N in range(2, 51) if excluded_order(N)] == [12, 30, 36, 40, 45]

    @given(st.integers(min_value=2, max_value=10**6))
    def test_excluded_against_brute_force(self, N):
        witness = excluded_order(N)
        assert (witness is not None) == brute_excluded(N)
        if witness:
            m, p, k, q = witness
            assert m * p**k == N and m % p and m < q * p and p < m

    def test_prop211(self):
        assert prop211_check(13, 3, 3)
        assert not prop211_check(13, 3, 6)
        assert not prop211_check(7, 2, 2)
