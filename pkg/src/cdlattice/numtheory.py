"""Integer arithmetic behind the parameter classification.

Python integers are already arbitrary precision, so every quantity here is a
plain ``int``.  The module provides a primality test, the repunit
``(p^p - 1)/(p - 1)``, the admissible ``(p, q, n, r)`` enumeration for
Singer-cycle semidirect products, and the two group-order shape predicates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

TRIAL_LIMIT = 10**6
# Miller-Rabin with the first 13 prime bases is exact below this bound.
DETERMINISTIC_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_RANDOM_ROUNDS = 64


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES_1000 = _small_primes(1000)


def _trial_is_prime(x: int) -> bool:
    if x < 2:
        return False
    for p in _PRIMES_1000:
        if p * p > x:
            return True
        if x % p == 0:
            return x == p
    return True


def _strong_probable_prime(x: int, a: int) -> bool:
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    y = pow(a, d, x)
    if y == 1 or y == x - 1:
        return True
    for _ in range(s - 1):
        y = y * y % x
        if y == x - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge's parameter choice (odd, non-square n)."""
    if math.isqrt(n) ** 2 == n:
        return False
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
    P, Q = 1, (1 - d) // 4

    k, s = n + 1, 0
    while k % 2 == 0:
        k //= 2
        s += 1

    def half(v: int) -> int:
        return (v + n) // 2 % n if v % 2 else v // 2 % n

    # Left-to-right binary ladder for U_k, V_k.
    U, V, Qk = 1, P % n, Q % n
    for bit in bin(k)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(d * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(x: int, rounds: int = MR_RANDOM_ROUNDS) -> bool:
    """Primality of a non-negative integer.

    Exact below ``DETERMINISTIC_MR_LIMIT``; above it the answer is a
    Miller-Rabin test with ``rounds`` random bases (seeded from ``x`` so
    repeated calls agree) followed by a strong Lucas test.
    """
    if x < TRIAL_LIMIT:
        return _trial_is_prime(x)
    for p in _PRIMES_1000:
        if x % p == 0:
            return False
    if x < DETERMINISTIC_MR_LIMIT:
        return all(_strong_probable_prime(x, a) for a in _MR_BASES)
    if not all(_strong_probable_prime(x, a) for a in _MR_BASES):
        return False
    rng = random.Random(x)
    for _ in range(rounds):
        if not _strong_probable_prime(x, rng.randrange(2, x - 1)):
            return False
    return _strong_lucas_probable_prime(x)


def factorize(n: int, limit: int = 10**12) -> dict[int, int]:
    """Prime factorization by trial division; refuses ``n`` above ``limit``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n > limit:
        raise ValueError(f"{n} exceeds the trial-division guard {limit}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def p_part(n: int, p: int) -> tuple[int, int]:
    """Return ``(k, p**k)`` with ``p**k`` the exact power of ``p`` dividing ``n``."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, p**k


def repunit(p: int) -> int:
    """``(p^p - 1)/(p - 1) = 1 + p + ... + p^(p-1)``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(p**i for i in range(p))


def wagstaff_primes(limit: int) -> list[int]:
    """Primes ``p < limit`` whose repunit ``(p^p - 1)/(p - 1)`` is prime."""
    if limit > 1000:
        raise ValueError("wagstaff_primes is guarded to limit <= 1000")
    return [p for p in _small_primes(max(limit - 1, 1)) if p < limit and is_prime(repunit(p))]


@dataclass(frozen=True, order=True)
class AdmissibleParams:
    """A tuple ``(p, q, n, r)`` with ``p^n < q p^r``, ``q | p^n - 1`` and ``p^r | n``."""

    p: int
    q: int
    n: int
    r: int
    family: int

    def __post_init__(self) -> None:
        if not satisfies_lemma210_hypotheses(self.p, self.q, self.n, self.r):
            raise ValueError(f"{self.as_tuple()} violates the admissibility hypotheses")
        if classify_family(self.p, self.q, self.n, self.r) != self.family:
            raise ValueError(f"{self.as_tuple()} is not in family {self.family}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.n, self.r)

    @property
    def k(self) -> int:
        """Full p-multiplicity of the order ``p^n * q * p^r`` of ``[V]K``."""
        return self.n + self.r


def satisfies_lemma210_hypotheses(p: int, q: int, n: int, r: int) -> bool:
    if n < 1 or r < 1 or not is_prime(p) or not is_prime(q):
        return False
    return p**n < q * p**r and (p**n - 1) % q == 0 and n % p**r == 0


def classify_family(p: int, q: int, n: int, r: int) -> int | None:
    """Family number (1, 2 or 3) of the closed-form list, or ``None``."""
    if (p, q, n, r) == (2, 3, 2, 1):
        return 1
    if (p, q, n, r) == (2, 5, 4, 2):
        return 2
    if p > 2 and n == p and r == 1 and is_prime(p) and q == repunit(p) and is_prime(q):
        return 3
    return None


def admissible_params(p: int, q: int, n: int, r: int) -> AdmissibleParams:
    """Validate a tuple and attach its family, raising ``ValueError`` if inadmissible."""
    family = classify_family(p, q, n, r)
    if family is None or not satisfies_lemma210_hypotheses(p, q, n, r):
        raise ValueError(f"({p}, {q}, {n}, {r}) is not an admissible parameter tuple")
    return AdmissibleParams(p, q, n, r, family)


class EnumerationMismatch(AssertionError):
    """Direct search and closed form disagree."""


def _direct_search(p: int) -> set[tuple[int, int, int, int]]:
    found = set()
    for n in range(1, max(2 * p, 8) + 1):
        total = p**n - 1
        r = 1
        while n % p**r == 0:
            # p^n < q p^r forces the cofactor (p^n - 1)/q to be below p^r.
            for c in range(1, p**r):
                if total % c == 0 and is_prime(total // c):
                    q = total // c
                    if satisfies_lemma210_hypotheses(p, q, n, r):
                        found.add((p, q, n, r))
            r += 1
    return found


def _closed_form(p: int) -> set[tuple[int, int, int, int]]:
    if p == 2:
        return {(2, 3, 2, 1), (2, 5, 4, 2)}
    q = repunit(p)
    return {(p, q, p, 1)} if is_prime(q) else set()


def lemma210_enumerate(p_max: int) -> list[AdmissibleParams]:
    """All admissible tuples with ``p <= p_max``, cross-checked against the closed form.

    The direct search ranges over ``n <= max(2p, 8)``, every ``r`` with
    ``p^r | n`` and every prime ``q | p^n - 1`` with ``p^n < q p^r``.  Such a
    ``q`` has cofactor ``(p^n - 1)/q < p^r``, so scanning cofactors is a
    complete search that needs no factorization.
    """
    if p_max > 1000:
        raise ValueError("lemma210_enumerate is guarded to p_max <= 1000")
    result = []
    for p in _small_primes(max(p_max, 1)):
        direct = _direct_search(p)
        closed = _closed_form(p)
        if direct != closed:
            raise EnumerationMismatch(
                f"p={p}: direct search {sorted(direct)} != closed form {sorted(closed)}"
            )
        result.extend(admissible_params(*t) for t in sorted(direct))
    return result


def prop211_check(m: int, p: int, n: int) -> bool:
    """``m | p^n - 1`` and ``m`` divides no ``p^d - 1`` with ``1 <= d < n``."""
    if (p**n - 1) % m:
        return False
    return all((p**d - 1) % m for d in range(1, n))


def excluded_order(N: int) -> tuple[int, int, int, int] | None:
    """First ``(m, p, k, q)`` with ``N = m p^k``, ``p`` not dividing ``m``, and ``1 < m/q < p < m``.

    ``q`` is the smallest prime divisor of ``m``; primes ``p`` are scanned in
    descending order.  The comparison ``m/q < p`` is done exactly.
    """
    if N < 2:
        raise ValueError("excluded_order needs N >= 2")
    factors = factorize(N)
    for p in sorted(factors, reverse=True):
        k = factors[p]
        m = N // p**k
        if m < 2:
            continue
        q = min(q for q in factors if q != p)
        if q < m and m < q * p and p < m:
            return (m, p, k, q)
    return None


def qpk_decompose(N: int) -> tuple[int, int, int] | None:
    """``(q, p, k)`` with ``N = q p^k`` and primes ``p < q``, if that is the shape of ``N``."""
    if N < 2:
        raise ValueError("qpk_decompose needs N >= 2")
    factors = factorize(N)
    if len(factors) != 2:
        return None
    p, q = sorted(factors)
    if factors[q] != 1:
        return None
    return (q, p, factors[p])
