"""Finite permutation groups with a fully enumerated element table.

Elements are indexed breadth-first from the identity (index 0) using the
generators in the order given, so indices, and therefore subgroup masks, are
reproducible.  Subgroups are bitmasks over element indices held in Python
ints (bit ``i`` set means element ``i`` is a member).

Permutations act on the right: ``(x)(gh) = ((x)g)h``.
"""

from __future__ import annotations

import os
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd

import numpy as np

DEFAULT_ELEMENT_CAP = 20_000
# Groups up to this order keep a full multiplication table (int32, N^2 entries).
TABLE_LIMIT = 4096


def element_cap() -> int:
    """Enumeration cap, overridable through ``CDTOOL_ELEMENT_CAP``."""
    value = os.environ.get("CDTOOL_ELEMENT_CAP")
    return int(value) if value else DEFAULT_ELEMENT_CAP


class GroupTooLarge(ValueError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"group too large: closure reached {count} elements (cap {cap})")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..degree}``; ``images[j-1]`` is the image of point ``j``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(images)}: {images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: str | Sequence[Sequence[int]] = ()) -> Permutation:
        """Build from cycle notation, e.g. ``from_cycles(4, "(1 2)(3 4)")``."""
        if isinstance(cycles, str):
            cycles = [
                [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
                for body in re.findall(r"\(([^)]*)\)", cycles)
            ]
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """``self`` first, then ``other``."""
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for j, image in enumerate(self.images, start=1):
            inv[image - 1] = j
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle, x = [], start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self(x)
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"


def _as_zero_based(perm: Permutation | Sequence[int], degree: int) -> tuple[int, ...]:
    images = perm.images if isinstance(perm, Permutation) else tuple(perm)
    if len(images) != degree:
        raise ValueError(f"generator has degree {len(images)}, expected {degree}")
    if sorted(images) != list(range(1, degree + 1)):
        raise ValueError(f"generator is not a bijection on 1..{degree}: {images}")
    return tuple(i - 1 for i in images)


def bits_to_indices(mask: int) -> np.ndarray:
    if mask == 0:
        return np.zeros(0, dtype=np.int64)
    raw = np.frombuffer(mask.to_bytes((mask.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little"))


def indices_to_bits(indices: Iterable[int]) -> int:
    idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices, dtype=np.int64)
    if idx.size == 0:
        return 0
    flags = np.zeros(int(idx.max()) + 1, dtype=bool)
    flags[idx] = True
    return bool_to_bits(flags)


def bool_to_bits(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def bits_to_bool(mask: int, size: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little", count=size).astype(bool)


class Group:
    """A finite permutation group with every element enumerated.

    ``perms[i]`` holds element ``i`` as zero-based images.  Use
    :func:`generate_group` to construct one.
    """

    def __init__(self, degree: int, generators: list[Permutation], perms: np.ndarray,
                 gen_table: np.ndarray, name: str | None = None):
        self.degree = degree
        self.generators = generators
        self.perms = perms
        self.order = len(perms)
        self.name = name
        self._gen_table = gen_table  # gen_table[e, s] = index of e * generators[s]
        self._index = {row.tobytes(): i for i, row in enumerate(perms)}
        self._col_cache: dict[int, np.ndarray] = {}
        self._cent_cache: dict[int, int] = {}
        self.cache: dict = {}  # derived data filled in by analysis modules
        self.identity_mask = 1
        self.full_mask = (1 << self.order) - 1

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Group{label} of order {self.order} on {self.degree} points>"

    def __len__(self) -> int:
        return self.order

    # -- element access ----------------------------------------------------------

    def permutation(self, i: int) -> Permutation:
        return Permutation(tuple(int(x) + 1 for x in self.perms[i]))

    def index(self, perm: Permutation | Sequence[int]) -> int:
        """Element index of a permutation (1-based images); ``KeyError`` if absent."""
        row = np.asarray(_as_zero_based(perm, self.degree), dtype=self.perms.dtype)
        return self._index[row.tobytes()]

    def lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        """Indices of zero-based permutation rows that belong to the group."""
        rows = np.ascontiguousarray(rows, dtype=self.perms.dtype)
        index = self._index
        return np.fromiter((index[r.tobytes()] for r in rows), dtype=np.int64, count=len(rows))

    @cached_property
    def generator_indices(self) -> list[int]:
        return [self.index(g) for g in self.generators]

    @cached_property
    def inverses(self) -> np.ndarray:
        inv_rows = np.argsort(self.perms, axis=1).astype(self.perms.dtype)
        return self.lookup_rows(inv_rows)

    @cached_property
    def _words(self) -> tuple[np.ndarray, np.ndarray]:
        """BFS parent and generator for each element: ``e = parent[e] * gens[via[e]]``."""
        parent = np.full(self.order, -1, dtype=np.int64)
        via = np.full(self.order, -1, dtype=np.int64)
        for e in range(self.order):
            for s in range(self._gen_table.shape[1]):
                f = self._gen_table[e, s]
                if f != 0 and parent[f] < 0 and f > e:
                    parent[f], via[f] = e, s
        return parent, via

    @cached_property
    def table(self) -> np.ndarray | None:
        """Full multiplication table ``table[a, b] = a * b`` for small groups, else ``None``."""
        if self.order > TABLE_LIMIT:
            return None
        n = self.order
        out = np.empty((n, n), dtype=np.int32)
        out[:, 0] = np.arange(n)
        parent, via = self._words
        gen_cols = [self._gen_table[:, s] for s in range(self._gen_table.shape[1])]
        for e in range(1, n):
            out[:, e] = gen_cols[via[e]][out[:, parent[e]]]
        return out

    def col(self, x: int) -> np.ndarray:
        """``col(x)[e] = e * x`` for every element ``e``."""
        table = self.table
        if table is not None:
            return table[:, x]
        cached = self._col_cache.get(x)
        if cached is not None:
            return cached
        if x == 0:
            out = np.arange(self.order)
        else:
            rows = self.perms[x][self.perms]
            out = self.lookup_rows(rows)
        self._col_cache[x] = out
        return out

    def row(self, y: int) -> np.ndarray:
        """``row(y)[g] = y * g`` for every element ``g``."""
        table = self.table
        if table is not None:
            return table[y, :]
        inv = self.inverses
        return inv[self.col(int(inv[y]))[inv]]

    def mul(self, a: int, b: int) -> int:
        table = self.table
        if table is not None:
            return int(table[a, b])
        return int(self.col(b)[a])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj_map(self, x: int) -> np.ndarray:
        """``conj_map(x)[g]`` is the index of ``x^-1 g x``."""
        return self.col(x)[self.row(self.inv(x))]

    def conj(self, g: int, x: int) -> int:
        return self.mul(self.mul(self.inv(x), g), x)

    def commutator(self, a: int, b: int) -> int:
        """``a^-1 b^-1 a b``."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        for i, row in enumerate(self.perms):
            seen = np.zeros(self.degree, dtype=bool)
            lcm = 1
            for start in range(self.degree):
                if seen[start]:
                    continue
                length, x = 0, start
                while not seen[x]:
                    seen[x] = True
                    x = row[x]
                    length += 1
                lcm = lcm * length // gcd(lcm, length)
            orders[i] = lcm
        return orders

    # -- commuting structure -------------------------------------------------------

    @cached_property
    def _centralizer_matrix(self) -> np.ndarray | None:
        table = self.table
        if table is None:
            return None
        return np.packbits(table == table.T, axis=1, bitorder="little")

    def element_centralizer_mask(self, x: int) -> int:
        cached = self._cent_cache.get(x)
        if cached is not None:
            return cached
        matrix = self._centralizer_matrix
        if matrix is not None:
            mask = int.from_bytes(matrix[x].tobytes(), "little")
        else:
            mask = bool_to_bits(self.col(x) == self.row(x))
        self._cent_cache[x] = mask
        return mask

    def centralizer_mask_of_set(self, indices: Iterable[int]) -> int:
        matrix = self._centralizer_matrix
        idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices, dtype=np.int64)
        if idx.size == 0:
            return self.full_mask
        if matrix is not None:
            packed = np.bitwise_and.reduce(matrix[idx], axis=0)
            return int.from_bytes(packed.tobytes(), "little")
        return reduce(lambda a, b: a & b, (self.element_centralizer_mask(int(i)) for i in idx))

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generator_indices
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    # -- subgroups ---------------------------------------------------------------------

    def closure_mask(self, gens: Iterable[int]) -> int:
        """Mask of the subgroup generated by ``gens``."""
        gens = list(dict.fromkeys(int(g) for g in gens if g != 0))
        if not gens:
            return 1
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        cols = [self.col(g) for g in gens]
        frontier = np.zeros(1, dtype=np.int64)
        while frontier.size:
            cand = np.concatenate([c[frontier] for c in cols])
            cand = np.unique(cand[~seen[cand]])
            seen[cand] = True
            frontier = cand
        return bool_to_bits(seen)

    def conjugates_of(self, h: int) -> np.ndarray:
        """``conjugates_of(h)[x]`` is the index of ``x^-1 h x``."""
        table = self.table
        if table is not None:
            return table[table[self.inverses, h], np.arange(self.order)]
        inv_rows = np.argsort(self.perms, axis=1)
        rows = np.take_along_axis(self.perms, self.perms[h][inv_rows].astype(np.int64), axis=1)
        return self.lookup_rows(rows)

    def subgroup(self, gens: Iterable[int] = ()) -> Subgroup:
        return Subgroup(self, self.closure_mask(gens))

    def subgroup_from_mask(self, mask: int, *, check: bool = True) -> Subgroup:
        sub = Subgroup(self, mask)
        if check and not sub.is_closed():
            raise ValueError("element set is not a subgroup")
        return sub

    @cached_property
    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, 1)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, self.full_mask)


def _subgroup_gens(G: Group, mask: int) -> list[int]:
    """Greedy generating set of the subgroup with the given mask (members in index order)."""
    gens: list[int] = []
    current = 1
    for i in bits_to_indices(mask):
        i = int(i)
        if current == mask:
            break
        if not (current >> i) & 1:
            gens.append(i)
            current = G.closure_mask(gens)
    return gens


@dataclass(frozen=True, eq=True)
class Subgroup:
    """A subgroup of ``parent`` given by its membership mask."""

    parent: Group
    mask: int

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.order

    def __contains__(self, i: int) -> bool:
        return bool((self.mask >> int(i)) & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.mask & other.mask)

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    @cached_property
    def members(self) -> np.ndarray:
        return bits_to_indices(self.mask)

    @cached_property
    def generators(self) -> list[int]:
        return _subgroup_gens(self.parent, self.mask)

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return self.mask == self.parent.full_mask

    def is_closed(self) -> bool:
        """Contains the identity, is closed under products and inverses, and has order dividing |G|."""
        G = self.parent
        if not self.mask & 1 or self.mask >> G.order:
            return False
        if G.order % self.order:
            return False
        members = self.members
        flags = bits_to_bool(self.mask, G.order)
        if not flags[G.inverses[members]].all():
            return False
        return all(flags[G.col(int(g))[members]].all() for g in members)

    def is_abelian(self) -> bool:
        return self.mask & ~self.parent.centralizer_mask_of_set(self.generators) == 0

    def key(self) -> tuple[int, tuple[int, ...]]:
        """Sort key: order, then the member index list."""
        return (self.order, tuple(int(i) for i in self.members))

    def as_group(self, name: str | None = None) -> Group:
        """Re-enumerate this subgroup as a standalone group on the parent's points."""
        G = self.parent
        return generate_group(G.degree, [G.permutation(g) for g in self.generators], name=name)


def generate_group(degree: int, generators: Sequence[Permutation | Sequence[int]],
                   cap: int | None = None, name: str | None = None) -> Group:
    """Enumerate the group generated by ``generators`` breadth-first from the identity."""
    if degree < 1:
        raise ValueError("degree must be positive")
    cap = element_cap() if cap is None else cap
    gens = [_as_zero_based(g, degree) for g in generators]
    gens_unique = list(dict.fromkeys(g for g in gens))
    dtype = np.uint8 if degree <= 256 else np.uint16
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    table_rows = []
    head = 0
    while head < len(elements):
        e = elements[head]
        row = []
        for s in gens_unique:
            f = tuple(s[x] for x in e)
            j = index.get(f)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise GroupTooLarge(j + 1, cap)
                index[f] = j
                elements.append(f)
            row.append(j)
        table_rows.append(row)
        head += 1
    perms = np.array(elements, dtype=dtype).reshape(len(elements), degree)
    gen_table = np.array(table_rows, dtype=np.int64).reshape(len(elements), len(gens_unique))
    perm_gens = [Permutation(tuple(x + 1 for x in g)) for g in gens]
    return Group(degree, perm_gens, perms, gen_table, name=name)


def centralizer(G: Group, S: Iterable[int] | Subgroup) -> Subgroup:
    """``C_G(S)`` for a set of element indices or a subgroup."""
    if isinstance(S, Subgroup):
        return Subgroup(G, G.centralizer_mask_of_set(S.generators))
    return Subgroup(G, G.centralizer_mask_of_set(list(S)))


def center(G: Group) -> Subgroup:
    return Subgroup(G, G.centralizer_mask_of_set(G.generator_indices))


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    G = H.parent
    if K <= H:
        return H
    if H <= K:
        return K
    return Subgroup(G, G.closure_mask(H.generators + K.generators))


def product_size(H: Subgroup, K: Subgroup) -> int:
    """``|HK| = |H||K|/|H & K|`` as a set."""
    return H.order * K.order // (H & K).order


def conjugate_mask(G: Group, mask: int, x: int) -> int:
    """Mask of ``x^-1 S x``."""
    members = bits_to_indices(mask)
    return indices_to_bits(G.conj_map(x)[members])


def normalizes(G: Group, x: int, H: Subgroup) -> bool:
    cm = G.conj_map(x)
    flags = bits_to_bool(H.mask, G.order)
    return bool(flags[cm[H.generators]].all()) if H.generators else True


def is_normal(H: Subgroup, K: Subgroup | None = None) -> bool:
    """Whether ``H`` is normalized by every element of ``K`` (default: the whole parent)."""
    G = H.parent
    gens = G.generator_indices if K is None else K.generators
    return all(normalizes(G, x, H) for x in gens)


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    flags = np.ones(G.order, dtype=bool)
    member = bits_to_bool(H.mask, G.order)
    for h in H.generators:
        flags &= member[G.conjugates_of(h)]
    return Subgroup(G, bool_to_bits(flags))
