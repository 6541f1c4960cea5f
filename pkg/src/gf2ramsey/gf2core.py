"""Exact linear algebra over GF(2) on packed integer bit rows.

Vectors of GF(2)^n are Python ints with bit i holding coordinate i, so they
stay exact at any dimension.  Subspaces are canonical reduced-echelon row
tuples (pivot = lowest set bit), affine flats are a direction subspace plus
a canonically reduced offset.  Everything here is an immutable value: safe
to hash, safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class DimensionMismatchError(ValueError):
    """Operands live in different ambient dimensions."""


LESS, EQUAL, GREATER = -1, 0, 1


def lsb_index(x: int) -> int:
    """Index of the lowest set bit (x must be nonzero)."""
    return (x & -x).bit_length() - 1


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(v) -> int:
    """Accept either a raw int mask or a BitVector."""
    return v.bits if isinstance(v, BitVector) else int(v)


@dataclass(frozen=True)
class BitVector:
    """A vector of GF(2)^dim packed into an int (bit i = coordinate i)."""

    bits: int
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError("bits set outside the ambient dimension")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse a little-endian bit string: character j is coordinate j."""
        if any(c not in "01" for c in s):
            raise ValueError(f"not a bit string: {s!r}")
        bits = 0
        for j, c in enumerate(s):
            if c == "1":
                bits |= 1 << j
        return cls(bits, len(s))

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.dim))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")
        return BitVector(self.bits ^ other.bits, self.dim)

    def __int__(self) -> int:
        return self.bits

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.dim) if (self.bits >> j) & 1)

    def __repr__(self):
        return f"BitVector({self.to_string()!r})"


def rref_rows(vectors: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced-echelon basis of the span.

    Pivot of a row is its lowest set bit; rows come back sorted by pivot and
    every pivot column carries a single 1.  Two row sets span the same
    subspace exactly when this returns the same tuple.
    """
    by_pivot: dict[int, int] = {}
    for v in vectors:
        v = bits_of(v)
        for p, r in by_pivot.items():
            if (v >> p) & 1:
                v ^= r
        if v:
            p = lsb_index(v)
            for q, r in by_pivot.items():
                if (r >> p) & 1:
                    by_pivot[q] = r ^ v
            by_pivot[p] = v
    return tuple(by_pivot[p] for p in sorted(by_pivot))


def rank_rows(vectors: Iterable[int]) -> int:
    return len(rref_rows(vectors))


def left_kernel_combos(rows: Sequence[int]) -> tuple[int, ...]:
    """Coefficient masks c with XOR of rows[i] over set bits of c equal zero."""
    by_pivot: dict[int, tuple[int, int]] = {}
    out = []
    for i, v in enumerate(rows):
        v = bits_of(v)
        tag = 1 << i
        while v:
            p = lsb_index(v)
            hit = by_pivot.get(p)
            if hit is None:
                break
            v ^= hit[0]
            tag ^= hit[1]
        if v:
            by_pivot[lsb_index(v)] = (v, tag)
        else:
            out.append(tag)
    return tuple(out)


def nullspace_rows(rows: Sequence[int], width: int) -> tuple[int, ...]:
    """Basis of {x : parity(r & x) = 0 for every row r}, x on `width` coords."""
    rr = rref_rows(rows)
    pivots = [lsb_index(r) for r in rr]
    pivot_set = set(pivots)
    out = []
    for f in range(width):
        if f in pivot_set:
            continue
        x = 1 << f
        for p, r in zip(pivots, rr):
            if (r >> f) & 1:
                x |= 1 << p
        out.append(x)
    return tuple(out)


def solve_affine(rows: Sequence[int], rhs: Sequence[int], width: int):
    """Solve parity(rows[t] & x) == rhs[t] over GF(2)^width.

    Returns (particular_solution, nullspace_basis) or None when inconsistent.
    """
    low = (1 << width) - 1
    by_pivot: dict[int, int] = {}
    for r, b in zip(rows, rhs):
        a = (bits_of(r) & low) | (int(b) & 1) << width
        for p, q in by_pivot.items():
            if (a >> p) & 1:
                a ^= q
        if a & low:
            p = lsb_index(a & low)
            for q in list(by_pivot):
                if (by_pivot[q] >> p) & 1:
                    by_pivot[q] ^= a
            by_pivot[p] = a
        elif a:
            return None
    x = 0
    for p, r in by_pivot.items():
        if r >> width:
            x |= 1 << p
    null = nullspace_rows([r & low for r in by_pivot.values()], width)
    return x, null


def min_xor(x: int, basis: Sequence[int]) -> int:
    """Smallest integer in x + span(basis)."""
    red: dict[int, int] = {}
    for b in basis:
        b = bits_of(b)
        while b:
            m = b.bit_length() - 1
            if m in red:
                b ^= red[m]
            else:
                red[m] = b
                break
    for m in sorted(red, reverse=True):
        if (x >> m) & 1:
            x ^= red[m]
    return x


def coords_in_rref(rows: Sequence[int], v: int):
    """Coefficient mask over canonical rows with XOR equal to v, or None."""
    x = bits_of(v)
    c = 0
    for i, r in enumerate(rows):
        if (x >> lsb_index(r)) & 1:
            x ^= r
            c |= 1 << i
    return c if x == 0 else None


def solve_combination(rows: Sequence[int], v: int):
    """Coefficient mask over arbitrary rows with XOR equal to v, or None."""
    by_pivot: dict[int, tuple[int, int]] = {}
    for i, r in enumerate(rows):
        r = bits_of(r)
        tag = 1 << i
        while r:
            p = lsb_index(r)
            hit = by_pivot.get(p)
            if hit is None:
                break
            r ^= hit[0]
            tag ^= hit[1]
        if r:
            by_pivot[lsb_index(r)] = (r, tag)
    x = bits_of(v)
    c = 0
    while x:
        hit = by_pivot.get(lsb_index(x))
        if hit is None:
            return None
        x ^= hit[0]
        c ^= hit[1]
    return c


def invert_rows(rows: Sequence[int]) -> tuple[int, ...]:
    """For n independent rows on coords 0..n-1: masks t_p with XOR over t_p = e_p."""
    n = len(rows)
    by_pivot: dict[int, tuple[int, int]] = {}
    for i, r in enumerate(rows):
        r = bits_of(r)
        tag = 1 << i
        for p, (rr, tt) in by_pivot.items():
            if (r >> p) & 1:
                r ^= rr
                tag ^= tt
        if r == 0:
            raise ValueError("rows are not independent")
        p = lsb_index(r)
        for q, (rr, tt) in list(by_pivot.items()):
            if (rr >> p) & 1:
                by_pivot[q] = (rr ^ r, tt ^ tag)
        by_pivot[p] = (r, tag)
    if sorted(by_pivot) != list(range(n)):
        raise ValueError("rows do not form a square invertible matrix")
    return tuple(by_pivot[p][1] for p in range(n))


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^ambient_dim held as its canonical echelon basis."""

    ambient_dim: int
    basis: tuple[int, ...]

    def __post_init__(self):
        n = self.ambient_dim
        prev = -1
        for i, r in enumerate(self.basis):
            if r <= 0 or r >> n:
                raise ValueError("basis row outside ambient space or zero")
            p = lsb_index(r)
            if p <= prev:
                raise ValueError("pivots must strictly increase")
            prev = p
            for j, s in enumerate(self.basis):
                if j != i and (s >> p) & 1:
                    raise ValueError("pivot column not reduced")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[int]) -> "Subspace":
        return cls(ambient_dim, rref_rows(vectors))

    @classmethod
    def _trusted(cls, ambient_dim: int, basis: tuple[int, ...]) -> "Subspace":
        # caller guarantees canonical form; used by bulk enumerators
        obj = object.__new__(cls)
        object.__setattr__(obj, "ambient_dim", ambient_dim)
        object.__setattr__(obj, "basis", basis)
        return obj

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(1 << i for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(lsb_index(r) for r in self.basis)

    def reduce(self, v: int) -> int:
        """Canonical coset representative of v modulo this subspace."""
        v = bits_of(v)
        for r in self.basis:
            if (v >> lsb_index(r)) & 1:
                v ^= r
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.reduce(r) == 0 for r in other.basis)

    def elements(self) -> Iterator[int]:
        """All 2^dim span elements, in coefficient counting order."""
        d = self.dim
        for c in range(1 << d):
            v = 0
            m = c
            while m:
                i = lsb_index(m)
                v ^= self.basis[i]
                m &= m - 1
            yield v

    def nonzero_elements_sorted(self, order: "BasisOrder | None" = None) -> list[int]:
        vals = [v for v in self.elements() if v]
        if order is None or order.is_identity:
            vals.sort()
        else:
            vals.sort(key=order.rank_key)
        return vals

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        reduced = [other.reduce(r) for r in self.basis]
        vecs = []
        for combo in left_kernel_combos(reduced):
            v = 0
            m = combo
            while m:
                i = lsb_index(m)
                v ^= self.basis[i]
                m &= m - 1
            vecs.append(v)
        return Subspace.from_vectors(self.ambient_dim, vecs)

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return Subspace.from_vectors(self.ambient_dim, self.basis + other.basis)

    def coords_of(self, v: int):
        return coords_in_rref(self.basis, v)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [BitVector(r, self.ambient_dim).to_string() for r in self.basis],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Subspace":
        n = int(data["ambient_dim"])
        return cls.from_vectors(n, [BitVector.from_string(s).bits for s in data["basis"]])

    def __repr__(self):
        rows = ",".join(BitVector(r, self.ambient_dim).to_string() for r in self.basis)
        return f"Subspace({self.ambient_dim}, [{rows}])"


@dataclass(frozen=True)
class AffineFlat:
    """A coset direction+offset with the offset reduced modulo the direction.

    The flat is proper exactly when the canonical offset is nonzero, i.e.
    when the flat misses the origin.
    """

    direction: Subspace
    offset: int

    def __post_init__(self):
        if self.offset < 0 or self.offset >> self.direction.ambient_dim:
            raise ValueError("offset outside ambient space")
        if self.direction.reduce(self.offset) != self.offset:
            raise ValueError("offset not reduced modulo direction")

    @classmethod
    def from_point(cls, direction: Subspace, point: int) -> "AffineFlat":
        return cls(direction, direction.reduce(bits_of(point)))

    @property
    def ambient_dim(self) -> int:
        return self.direction.ambient_dim

    @property
    def dim(self) -> int:
        return self.direction.dim

    @property
    def is_proper(self) -> bool:
        return self.offset != 0

    def points(self) -> Iterator[int]:
        for v in self.direction.elements():
            yield v ^ self.offset

    def contains_point(self, v: int) -> bool:
        return self.direction.reduce(bits_of(v)) == self.offset

    def contains_flat(self, other: "AffineFlat") -> bool:
        if not self.direction.contains_subspace(other.direction):
            return False
        return self.direction.reduce(other.offset) == self.offset


@dataclass(frozen=True)
class BasisOrder:
    """A total significance order on the coordinates, with their names.

    names[i] is the label of coordinate i; coord_by_rank[r] is the coordinate
    holding rank r, rank 0 being the least significant.  The anti-lex order
    compares vectors by their highest-ranked differing coordinate.
    """

    names: tuple[str, ...]
    coord_by_rank: tuple[int, ...]

    def __post_init__(self):
        n = len(self.names)
        if sorted(self.coord_by_rank) != list(range(n)):
            raise ValueError("coord_by_rank must be a permutation of coordinates")

    @classmethod
    def standard(cls, n: int, names: Sequence[str] | None = None) -> "BasisOrder":
        if names is None:
            names = tuple(f"e{i + 1}" for i in range(n))
        return cls(tuple(names), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def is_identity(self) -> bool:
        return self.coord_by_rank == tuple(range(len(self.names)))

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown basis vector {name!r}") from None

    def rank_key(self, v: int) -> int:
        """Remap bits so plain integer comparison realises the anti-lex order."""
        v = bits_of(v)
        if self.is_identity:
            return v
        k = 0
        for r, c in enumerate(self.coord_by_rank):
            if (v >> c) & 1:
                k |= 1 << r
        return k


def alex_compare(v, w, order: BasisOrder) -> int:
    """Anti-lexicographic comparison: the vector owning the highest-ranked
    differing coordinate is the larger one.  Returns -1, 0 or 1."""
    a = order.rank_key(bits_of(v))
    b = order.rank_key(bits_of(w))
    if a == b:
        return EQUAL
    return LESS if a < b else GREATER


def tuple_alex_compare(s: Sequence, t: Sequence, order: BasisOrder) -> int:
    """Compare coordinate tuples with the last entry most significant,
    breaking ties toward earlier entries, each entry by alex_compare."""
    if len(s) != len(t):
        raise ValueError(f"tuple lengths differ: {len(s)} != {len(t)}")
    for a, b in zip(reversed(s), reversed(t)):
        c = alex_compare(a, b, order)
        if c != EQUAL:
            return c
    return EQUAL


def gaussian_binomial(n: int, d: int) -> int:
    """Number of d-dimensional subspaces of GF(2)^n (exact integer)."""
    if not 0 <= d <= n:
        raise ValueError(f"require 0 <= d <= n, got d={d}, n={n}")
    out = 1
    for i in range(d):
        out = out * ((1 << (n - i)) - 1) // ((1 << (d - i)) - 1)
    return out


def _free_positions(pivots: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    pivot_set = set(pivots)
    return [
        (i, j)
        for i in range(len(pivots))
        for j in range(pivots[i] + 1, n)
        if j not in pivot_set
    ]


def subspace_bases(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Canonical bases of all d-dim subspaces of GF(2)^n, one tuple each.

    Deterministic order: pivot sets lexicographically, then free entries in
    counting order (bit b of the counter drives the b-th free position, row
    major).  The array kernels replicate this order exactly.
    """
    if not 0 <= d <= n:
        raise ValueError(f"require 0 <= d <= n, got d={d}, n={n}")
    if d == 0:
        yield ()
        return
    for pivots in combinations(range(n), d):
        free = _free_positions(pivots, n)
        base = tuple(1 << p for p in pivots)
        for c in range(1 << len(free)):
            rows = list(base)
            m = c
            while m:
                b = lsb_index(m)
                i, j = free[b]
                rows[i] |= 1 << j
                m &= m - 1
            yield tuple(rows)


def enumerate_subspaces(n: int, d: int) -> Iterator[Subspace]:
    """Stream every d-dimensional subspace of GF(2)^n exactly once."""
    for rows in subspace_bases(n, d):
        yield Subspace._trusted(n, rows)


def enumerate_flats(n: int, d: int, proper_only: bool = False) -> Iterator[AffineFlat]:
    """Stream every affine d-flat of GF(2)^n in canonical form.

    With proper_only set, only cosets missing the origin are produced.
    """
    if not 0 <= d <= n:
        raise ValueError(f"require 0 <= d <= n, got d={d}, n={n}")
    for sub in enumerate_subspaces(n, d):
        pivot_set = set(sub.pivots)
        free_cols = [j for j in range(n) if j not in pivot_set]
        for c in range(1 << len(free_cols)):
            if proper_only and c == 0:
                continue
            off = 0
            m = c
            while m:
                b = lsb_index(m)
                off |= 1 << free_cols[b]
                m &= m - 1
            yield AffineFlat(sub, off)


def rref_basis(vectors, ambient_dim: int | None = None) -> Subspace:
    """Canonicalise a list of vectors into the Subspace they span.

    Vectors may be BitVector values (dims must agree) or raw ints together
    with an explicit ambient_dim.
    """
    vecs = list(vectors)
    dims = {v.dim for v in vecs if isinstance(v, BitVector)}
    if len(dims) > 1:
        raise DimensionMismatchError(f"mixed ambient dimensions: {sorted(dims)}")
    if dims:
        if ambient_dim is not None and ambient_dim != next(iter(dims)):
            raise DimensionMismatchError("ambient_dim disagrees with vectors")
        ambient_dim = next(iter(dims))
    if ambient_dim is None:
        raise ValueError("ambient_dim required for raw int vectors")
    return Subspace.from_vectors(ambient_dim, [bits_of(v) for v in vecs])
