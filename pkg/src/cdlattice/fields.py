"""Finite fields GF(p^n) and invertible matrices over them.

Field elements are coded as integers ``0 <= c < p^n`` whose base-p digits are
the polynomial coefficients, constant term in the least significant digit.
The same integer doubles as the index of the corresponding vector of
GF(p)^n, so "vector number" and "field element code" coincide.
"""

from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass, field

from .numtheory import factorize, is_prime

FIELD_CAP = 4096


def _digits(code: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, d = divmod(code, p)
        out.append(d)
    return tuple(out)


def _from_digits(digits, p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``m`` over GF(p); coefficient lists are constant term first."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(poly: list[int], p: int) -> bool:
    n = len(poly) - 1
    if n == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``n`` (constant term compared first)."""
    for low in itertools.product(range(p), repeat=n):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("every degree has an irreducible polynomial")


def lex_key(code: int, p: int, n: int) -> tuple[int, ...]:
    """Coefficient-lex sort key of a field element (constant term most significant)."""
    return _digits(code, p, n)


class FiniteField:
    """GF(p^n) with the lexicographically smallest irreducible modulus."""

    def __init__(self, p: int, n: int = 1, *, cap: int = FIELD_CAP):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("field degree must be positive")
        if p**n > cap:
            raise ValueError(f"GF({p}^{n}) exceeds the field cap {cap}")
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = smallest_irreducible(p, n)
        self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.n})"

    def _mul_slow(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        da, db = _digits(a, p, n), _digits(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _from_digits(_poly_mod(prod, list(self.modulus), p), p)

    def _build_tables(self) -> None:
        q = self.order
        target = q - 1
        prime_factors = list(factorize(target)) if target > 1 else []
        candidates = sorted(range(1, q), key=lambda c: lex_key(c, self.p, self.n))
        for g in candidates:
            # g is primitive iff g^((q-1)/l) != 1 for each prime l | q-1.
            if all(self._pow_slow(g, target // ell) != 1 for ell in prime_factors):
                break
        else:  # pragma: no cover - GF(2) falls through with g = 1
            g = 1
        self.primitive = g
        exp = [1] * max(target, 1)
        for i in range(1, target):
            exp[i] = self._mul_slow(exp[i - 1], g)
        log = [0] * q
        for i, v in enumerate(exp[:target]):
            log[v] = i
        self._exp, self._log = exp, log

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    # Arithmetic on element codes.
    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a:
            out += ((-a) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        return self._log[a]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def scalar(self, c: int) -> int:
        """Code of the prime-field element ``c mod p``."""
        return c % self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        return _digits(a, self.p, self.n)

    def from_coeffs(self, coeffs) -> int:
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients")
        return _from_digits(coeffs, self.p)

    def element(self, a) -> FieldElement:
        if not isinstance(a, int):
            a = self.from_coeffs(a)
        return FieldElement(self, a)

    def elements(self) -> range:
        return range(self.order)

    @property
    def multiplicative_order(self) -> int:
        return self.order - 1

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        return (self.order - 1) // gcd(self._log[a], self.order - 1)


def build_field(p: int, n: int, *, cap: int = FIELD_CAP) -> FiniteField:
    return FiniteField(p, n, cap=cap)


@dataclass(frozen=True)
class FieldElement:
    """A field element with operator support; mostly useful in tests and at the REPL."""

    field: FiniteField = field(repr=False, compare=False)
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.code))

    def is_zero(self) -> bool:
        return self.code == 0


@dataclass(frozen=True)
class LinearAutomorphism:
    """Invertible ``d x d`` matrix over ``field`` acting on row vectors, ``v -> v A``.

    Entries are field element codes.  Composition follows the right action:
    ``A @ B`` means "first A, then B".
    """

    field: FiniteField = field(repr=False, compare=False)
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        d = len(self.matrix)
        if any(len(row) != d for row in self.matrix):
            raise ValueError("matrix must be square")
        if self.det() == 0:
            raise ValueError("matrix is singular")

    @classmethod
    def identity(cls, F: FiniteField, d: int) -> LinearAutomorphism:
        return cls(F, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __matmul__(self, other: LinearAutomorphism) -> LinearAutomorphism:
        F, d = self.field, self.dim
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = 0
                for k in range(d):
                    acc = F.add(acc, F.mul(self.matrix[i][k], other.matrix[k][j]))
                row.append(acc)
            rows.append(tuple(row))
        return LinearAutomorphism(F, tuple(rows))

    def __pow__(self, e: int) -> LinearAutomorphism:
        if e < 0:
            return self.inverse() ** (-e)
        result = LinearAutomorphism.identity(self.field, self.dim)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def apply(self, v) -> tuple[int, ...]:
        F = self.field
        out = []
        for j in range(self.dim):
            acc = 0
            for i, vi in enumerate(v):
                if vi:
                    acc = F.add(acc, F.mul(vi, self.matrix[i][j]))
            out.append(acc)
        return tuple(out)

    def det(self) -> int:
        F = self.field
        m = [list(row) for row in self.matrix]
        d = len(m)
        det = 1
        for c in range(d):
            pivot = next((r for r in range(c, d) if m[r][c]), None)
            if pivot is None:
                return 0
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = F.neg(det)
            det = F.mul(det, m[c][c])
            inv = F.inv(m[c][c])
            for r in range(c + 1, d):
                if m[r][c]:
                    factor = F.mul(m[r][c], inv)
                    m[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(m[r], m[c])]
        return det

    def inverse(self) -> LinearAutomorphism:
        F, d = self.field, self.dim
        m = [list(row) + [int(i == j) for j in range(d)] for i, row in enumerate(self.matrix)]
        for c in range(d):
            pivot = next(r for r in range(c, d) if m[r][c])
            m[c], m[pivot] = m[pivot], m[c]
            inv = F.inv(m[c][c])
            m[c] = [F.mul(inv, x) for x in m[c]]
            for r in range(d):
                if r != c and m[r][c]:
                    factor = m[r][c]
                    m[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(m[r], m[c])]
        return LinearAutomorphism(F, tuple(tuple(row[d:]) for row in m))

    def order(self) -> int:
        ident = LinearAutomorphism.identity(self.field, self.dim)
        power, k = self, 1
        while power != ident:
            power = power @ self
            k += 1
        return k
