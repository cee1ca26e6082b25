"""Singer cycles, Frobenius maps, affine groups ``[V]K``, GL(2, q) and named groups.

Vectors of ``V = GF(p)^n`` are numbered in base-p coefficient order (constant
coordinate least significant); point ``v + 1`` of every permutation action is
vector number ``v``, so point 1 is the zero vector.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .fields import FiniteField, LinearAutomorphism, build_field
from .group import Group, GroupTooLarge, Permutation, Subgroup, bool_to_bits, generate_group
from .numtheory import admissible_params, is_prime
from .structure import o_p, sylow_count, sylow_subgroup, sylow_subgroups

ACTION_CAP = 4096
GL_ENUMERABLE = {(2, 2), (2, 3), (2, 4), (3, 2)}


def _vector(code: int, base: int, dim: int) -> tuple[int, ...]:
    out = []
    for _ in range(dim):
        code, d = divmod(code, base)
        out.append(d)
    return tuple(out)


def _code(vec, base: int) -> int:
    code = 0
    for d in reversed(vec):
        code = code * base + d
    return code


def prime_field(p: int) -> FiniteField:
    return build_field(p, 1)


def multiplication_matrix(F: FiniteField, t: int) -> LinearAutomorphism:
    """Matrix of ``v -> t v`` on GF(p)^n in the power basis (rows are images of ``x^i``)."""
    rows = tuple(F.coeffs(F.mul(t, F.from_coeffs(_vector(F.p**i, F.p, F.n)))) for i in range(F.n))
    return LinearAutomorphism(prime_field(F.p), rows)


def frobenius_matrix(F: FiniteField) -> LinearAutomorphism:
    """Matrix of ``v -> v^p`` on GF(p)^n in the power basis."""
    rows = tuple(F.coeffs(F.frobenius(F.p**i)) for i in range(F.n))
    return LinearAutomorphism(prime_field(F.p), rows)


def singer_subgroup(F: FiniteField, d: int) -> list[LinearAutomorphism]:
    """Generator of the order-``d`` subgroup of the Singer cycle of ``F``."""
    if (F.order - 1) % d:
        raise ValueError(f"{d} does not divide {F.order - 1}")
    t = F.pow(F.primitive, (F.order - 1) // d)
    return [multiplication_matrix(F, t)]


def frobenius_subgroup(F: FiniteField, size: int) -> list[LinearAutomorphism]:
    """Generator of the order-``size`` subgroup of the Galois group of ``F`` over GF(p)."""
    if F.n % size:
        raise ValueError(f"{size} does not divide {F.n}")
    return [frobenius_matrix(F) ** (F.n // size)]


def matrix_group_elements(gens: list[LinearAutomorphism]) -> list[LinearAutomorphism]:
    """Closure of a list of matrices, identity first."""
    if not gens:
        raise ValueError("need at least one matrix to know the dimension")
    ident = LinearAutomorphism.identity(gens[0].field, gens[0].dim)
    seen = {ident.matrix: ident}
    queue = [ident]
    for a in queue:
        for g in gens:
            b = a @ g
            if b.matrix not in seen:
                seen[b.matrix] = b
                queue.append(b)
    return queue


def module_irreducible(gens: list[LinearAutomorphism], p: int | None = None, dim: int | None = None) -> bool:
    """Whether the group generated by ``gens`` acts irreducibly on GF(p)^dim.

    For every nonzero ``v`` the span of the orbit of ``v`` must be the whole space.
    """
    if gens:
        p, dim = gens[0].field.p, gens[0].dim
        if gens[0].field.n != 1:
            raise ValueError("module_irreducible expects matrices over a prime field")
    if p is None or dim is None:
        raise ValueError("vector space data missing")
    size = p**dim
    for v in range(1, size):
        orbit = {_vector(v, p, dim)}
        queue = list(orbit)
        for w in queue:
            for g in gens:
                u = g.apply(w)
                if u not in orbit:
                    orbit.add(u)
                    queue.append(u)
        if _rank_mod_p(list(orbit), p) < dim:
            return False
    return True


def _rank_mod_p(vectors: list[tuple[int, ...]], p: int) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass
class ActionGroup:
    """A permutation group realized on vectors, with its construction data."""

    group: Group
    labels: dict[int, tuple[int, ...]] = field(repr=False)  # point -> vector
    metadata: dict = field(default_factory=dict)
    linear_generators: list[LinearAutomorphism] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return self.group.order


def _linear_permutation(A: LinearAutomorphism, size: int, base: int, dim: int, offset: int = 0) -> Permutation:
    images = []
    for code in range(offset, size):
        images.append(_code(A.apply(_vector(code, base, dim)), base) - offset + 1)
    return Permutation(tuple(images))


def _translation_permutation(F: FiniteField, a: int) -> Permutation:
    return Permutation(tuple(F.add(v, a) + 1 for v in range(F.order)))


def construct_primitive_group(p: int, q: int, n: int, r: int, *, cap: int = ACTION_CAP) -> ActionGroup:
    """``[V]K`` with ``V = GF(p^n)`` and ``K = TH`` acting by affine maps ``v -> v k + a``.

    ``T`` is the order-``q`` subgroup of the Singer cycle and ``H`` the
    order-``p^r`` subgroup of the Galois group, so ``|G| = p^n q p^r``.
    """
    params = admissible_params(p, q, n, r)
    if p**n > cap:
        raise GroupTooLarge(p**n, cap)
    F = build_field(p, n)
    sigma = singer_subgroup(F, q)[0]
    phi = frobenius_subgroup(F, p**r)[0]
    gens = [
        _linear_permutation(sigma, F.order, p, n),
        _linear_permutation(phi, F.order, p, n),
        _translation_permutation(F, 1),
    ]
    order = p**n * q * p**r
    G = generate_group(F.order, gens, cap=max(order, 1), name=f"[GF({p}^{n})]K({q},{p}^{r})")
    labels = {v + 1: F.coeffs(v) for v in range(F.order)}
    meta = {"p": p, "q": q, "n": n, "r": r, "family": params.family, "field": F}
    return ActionGroup(G, labels, meta, [sigma, phi])


def affine_group(F: FiniteField, linear: list[LinearAutomorphism], name: str | None = None) -> ActionGroup:
    """``[V]K`` for any list of matrices ``K`` over the prime field acting on ``V = F``."""
    gens = [_linear_permutation(A, F.order, F.p, F.n) for A in linear]
    # Translations by a whole basis, so V is included even when K is reducible.
    gens.extend(_translation_permutation(F, F.p**i) for i in range(F.n))
    G = generate_group(F.order, gens, name=name)
    return ActionGroup(G, {v + 1: F.coeffs(v) for v in range(F.order)}, {"field": F}, list(linear))


@dataclass
class LinearGroup(ActionGroup):
    """GL(2, q) on the nonzero row vectors, with element determinants."""

    determinants: np.ndarray = field(default=None, repr=False)

    def determinant(self, i: int) -> int:
        return int(self.determinants[i])

    def special_linear(self) -> Subgroup:
        return Subgroup(self.group, bool_to_bits(self.determinants == 1))

    def matrix(self, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        F: FiniteField = self.metadata["field"]
        perm = self.group.perms[i]
        q = F.order
        # Points are nonzero vectors; vector code c sits at point c (code 1..q^2-1).
        e1, e2 = 1, q  # codes of (1, 0) and (0, 1)
        return (_vector(int(perm[e1 - 1]) + 1, q, 2), _vector(int(perm[e2 - 1]) + 1, q, 2))


def general_linear_2(F: FiniteField, *, max_q: int = 7) -> LinearGroup:
    """GL(2, q), ``q = |F|``, as a permutation group on the ``q^2 - 1`` nonzero vectors."""
    q = F.order
    if q > max_q:
        raise GroupTooLarge(q * q - 1, max_q * max_q - 1)
    w = F.primitive
    one, zero = 1, 0
    mats = [
        LinearAutomorphism(F, ((w, zero), (zero, one))),
        LinearAutomorphism(F, ((one, one), (zero, one))),
        LinearAutomorphism(F, ((zero, one), (one, zero))),
    ]
    size = q * q
    gens = [_linear_permutation(A, size, q, 2, offset=1) for A in mats]
    G = generate_group(size - 1, gens, name=f"GL(2,{q})")
    expected = (q * q - 1) * (q * q - q)
    if G.order != expected:
        raise AssertionError(f"GL(2,{q}) closed to {G.order}, expected {expected}")
    labels = {c: _vector(c, q, 2) for c in range(1, size)}
    lg = LinearGroup(G, labels, {"field": F, "q": q}, mats)
    dets = np.empty(G.order, dtype=np.int64)
    for i in range(G.order):
        (a, b), (c, d) = lg.matrix(i)
        dets[i] = F.sub(F.mul(a, d), F.mul(b, c))
    lg.determinants = dets
    return lg


# -- named groups -----------------------------------------------------------------------


def _cycle(n: int, offset: int = 0, degree: int | None = None) -> Permutation:
    degree = degree or n
    images = list(range(1, degree + 1))
    for i in range(n):
        images[offset + i] = offset + (i + 1) % n + 1
    return Permutation(tuple(images))


def builtin_group(name: str, *params: int) -> Group:
    """Named groups: cyclic n, dihedral n (order 2n), symmetric n, alternating n,
    klein4, frobenius56, elementary p n (order p^n)."""
    key = name.lower()
    P = Permutation.from_cycles
    if key == "cyclic":
        (n,) = params
        return generate_group(n, [_cycle(n)] if n > 1 else [], name=f"C{n}")
    if key == "dihedral":
        (n,) = params
        if n < 3:
            raise ValueError("dihedral n needs n >= 3")
        reflection = Permutation(tuple([1] + list(range(n, 1, -1))))
        return generate_group(n, [_cycle(n), reflection], name=f"D{2 * n}")
    if key == "symmetric":
        (n,) = params
        if n < 2:
            return generate_group(max(n, 1), [], name=f"S{n}")
        gens = [P(n, "(1 2)"), _cycle(n)] if n > 2 else [P(n, "(1 2)")]
        return generate_group(n, gens, name=f"S{n}")
    if key == "alternating":
        (n,) = params
        if n < 3:
            return generate_group(max(n, 1), [], name=f"A{n}")
        long_cycle = _cycle(n) if n % 2 else _cycle(n - 1, offset=1, degree=n)
        gens = [P(n, "(1 2 3)")] + ([long_cycle] if n > 3 else [])
        return generate_group(n, gens, name=f"A{n}")
    if key == "klein4":
        return generate_group(4, [P(4, "(1 2)(3 4)"), P(4, "(1 3)(2 4)")], name="V4")
    if key == "frobenius56":
        F = build_field(2, 3)
        return affine_group(F, singer_subgroup(F, 7), name="F56").group
    if key == "elementary":
        p, n = params
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        gens = [_cycle(p, offset=p * i, degree=p * n) for i in range(n)]
        return generate_group(p * n, gens, name=f"{p}^{n}")
    raise KeyError(f"unknown builtin group {name!r}")


BUILTIN_NAMES = ("cyclic", "dihedral", "symmetric", "alternating", "klein4", "frobenius56", "elementary")


def parse_builtin(spec: str) -> Group:
    """``"symmetric:4"``, ``"elementary:2,3"``, ``"klein4"`` and friends."""
    name, _, args = spec.partition(":")
    params = [int(a) for a in args.replace(",", " ").split()] if args else []
    return builtin_group(name, *params)


# -- Singer normalizer ----------------------------------------------------------------------


@dataclass
class NormalizerReport:
    p: int
    n: int
    d: int
    ambient_order: int
    normalizer_order: int
    expected_order: int
    contains_singer: bool
    contains_frobenius: bool

    @property
    def ok(self) -> bool:
        return (
            self.normalizer_order == self.expected_order
            and self.contains_singer
            and self.contains_frobenius
        )


def _all_matrices(p: int, n: int) -> np.ndarray:
    entries = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64)
    return entries.reshape(-1, n, n)


def singer_normalizer_check(F: FiniteField, d: int) -> NormalizerReport:
    """Brute-force normalizer of the order-``d`` Singer subgroup inside GL(n, p)."""
    p, n = F.p, F.n
    if (p, n) not in GL_ENUMERABLE:
        raise GroupTooLarge(p ** (n * n), 2**16)
    mats = _all_matrices(p, n)
    dets = np.rint(np.linalg.det(mats.astype(float))).astype(np.int64) % p
    gl = mats[dets != 0]
    T_gen = np.array(singer_subgroup(F, d)[0].matrix, dtype=np.int64)
    T = [np.array(A.matrix, dtype=np.int64) for A in matrix_group_elements(singer_subgroup(F, d))]
    # g normalizes <t> iff g^-1 t g lies in T, i.e. t g = g t' for some t' in T.
    lhs = np.einsum("ij,bjk->bik", T_gen, gl) % p
    in_normalizer = np.zeros(len(gl), dtype=bool)
    for t in T:
        rhs = np.einsum("bij,jk->bik", gl, t) % p
        in_normalizer |= (lhs == rhs).all(axis=(1, 2))
    normalizer = {tuple(map(tuple, g)) for g in gl[in_normalizer]}
    S_gen = multiplication_matrix(F, F.primitive).matrix
    phi = frobenius_matrix(F).matrix
    return NormalizerReport(
        p=p,
        n=n,
        d=d,
        ambient_order=len(gl),
        normalizer_order=len(normalizer),
        expected_order=(p**n - 1) * n,
        contains_singer=S_gen in normalizer,
        contains_frobenius=phi in normalizer,
    )


# -- checks on the constructed groups ---------------------------------------------------------


@dataclass
class Lemma27Report:
    q: int
    sylow_count: int
    trivial_intersections: bool
    pairs_generate_sl: bool
    sl_order: int

    @property
    def ok(self) -> bool:
        q = self.q
        return (
            self.sylow_count == q + 1
            and self.trivial_intersections
            and self.pairs_generate_sl
            and self.sl_order == q * (q + 1) * (q - 1)
        )


def lemma27_suite(q: int) -> Lemma27Report:
    """Sylow ``p``-subgroups of GL(2, q): ``q + 1`` of them, pairwise trivial, any two generate SL(2, q)."""
    F = build_field(*_prime_power(q))
    GL = general_linear_2(F)
    G = GL.group
    SL = GL.special_linear()
    sylows = sylow_subgroups(G, F.p)
    trivial = all((A & B).is_trivial() for A, B in itertools.combinations(sylows, 2))
    generate = all(
        G.closure_mask(A.generators + B.generators) == SL.mask
        for A, B in itertools.combinations(sylows, 2)
    )
    return Lemma27Report(q, len(sylows), trivial, generate, SL.order)


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            while q % p == 0:
                q //= p
                n += 1
            if q != 1 or not is_prime(p):
                break
            return p, n
    raise ValueError("field order must be a prime power")


def corollary25_sample(q: int, samples: int = 200, seed: int = 0) -> list[int]:
    """Masks of sampled subgroups of GL(2, q) with order divisible by ``q`` that have
    neither a normal Sylow ``p``-subgroup nor contain SL(2, q).  Empty means the check passed."""
    p, n = _prime_power(q)
    GL = general_linear_2(build_field(p, n))
    G = GL.group
    sl = GL.special_linear().mask
    rng = random.Random(seed)
    bad = []
    seen = set()
    for _ in range(samples):
        gens = [rng.randrange(G.order) for _ in range(rng.choice((1, 2)))]
        mask = G.closure_mask(gens)
        if mask in seen or mask.bit_count() % q:
            continue
        seen.add(mask)
        H = Subgroup(G, mask).as_group()
        if sylow_count(H, p) != 1 and sl & ~mask:
            bad.append(mask)
    return bad


@dataclass
class Prop213Report:
    linear_order: int
    normal_sylow_q: bool
    op_trivial: bool
    expected_order: int

    @property
    def ok(self) -> bool:
        return self.normal_sylow_q and self.op_trivial and self.linear_order == self.expected_order


def prop213_check(action: ActionGroup) -> Prop213Report:
    """The point stabilizer ``K`` of zero has a normal Sylow ``q``-subgroup and ``O_p(K) = 1``."""
    G = action.group
    meta = action.metadata
    p, q, r = meta["p"], meta["q"], meta["r"]
    K = Subgroup(G, bool_to_bits(G.perms[:, 0] == 0)).as_group()
    T = sylow_subgroup(K, q)
    return Prop213Report(
        K.order,
        T.order == q and sylow_count(K, q) == 1,
        o_p(K, p).is_trivial(),
        q * p**r,
    )
