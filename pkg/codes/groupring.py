"""Group rings RG over the abelian groups used by the construction.

Group elements are addressed by a fixed labeling index 0..order-1 and the
group law is precomputed into an order x order table, so every operation here
is table lookups plus XOR over the 4-bit ring representation.
"""
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Tuple

import numpy as np

from codes.errors import GroupLiteralError, RingMismatchError, UnsupportedShapeError
from codes.rings import FIELD_INVERSE, MUL_TABLE, RingElem, RingId, emit_shorthand, parse_shorthand


class GroupKind(str, Enum):
    CYCLIC = "cyclic"
    PRODUCT = "product"
    MIXED = "mixed"


_LITERAL_CYCLIC = re.compile(r"^C(\d+)$")
_LITERAL_PRODUCT = re.compile(r"^C(\d+)\s*[x×]\s*C(\d+)$")
_LITERAL_MIXED = re.compile(r"^C(\d+)\s*,\s*(\d+)$")


@dataclass(frozen=True)
class GroupSpec:
    """Cyclic(n), Product(m, n) = C_m x C_n or MixedCyclic(m, n) = C_{m,n}.

    Labelings:
      Cyclic(n)       index k      <-> x^k
      Product(m, n)   index i+m*j  <-> x^i y^j
      MixedCyclic     index i+m*j  <-> x^(n*i+j) in C_{mn}
    """
    kind: GroupKind
    m: int
    n: int
    law: np.ndarray = field(init=False, repr=False, compare=False)
    inverse: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise GroupLiteralError(f"Group factors must be positive, got m={self.m}, n={self.n}")
        if self.kind is GroupKind.CYCLIC and self.m != 1:
            raise GroupLiteralError("Cyclic groups carry a single factor (m must be 1)")
        law, inverse = _build_tables(self.kind, self.m, self.n)
        law.setflags(write=False)
        inverse.setflags(write=False)
        object.__setattr__(self, "law", law)
        object.__setattr__(self, "inverse", inverse)

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls(GroupKind.CYCLIC, 1, n)

    @classmethod
    def product(cls, m: int, n: int) -> "GroupSpec":
        return cls(GroupKind.PRODUCT, m, n)

    @classmethod
    def mixed(cls, m: int, n: int) -> "GroupSpec":
        return cls(GroupKind.MIXED, m, n)

    @classmethod
    def parse(cls, literal: str) -> "GroupSpec":
        text = literal.strip()
        if match := _LITERAL_CYCLIC.match(text):
            return cls.cyclic(int(match.group(1)))
        if match := _LITERAL_PRODUCT.match(text):
            return cls.product(int(match.group(1)), int(match.group(2)))
        if match := _LITERAL_MIXED.match(text):
            return cls.mixed(int(match.group(1)), int(match.group(2)))
        raise GroupLiteralError(
            f"Unsupported group literal {literal!r}; expected 'C9', 'C3xC5' or 'C3,3' (abelian groups only)"
        )

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def literal(self) -> str:
        if self.kind is GroupKind.CYCLIC:
            return f"C{self.n}"
        if self.kind is GroupKind.PRODUCT:
            return f"C{self.m}xC{self.n}"
        return f"C{self.m},{self.n}"

    def __str__(self) -> str:
        return self.literal


def _build_tables(kind: GroupKind, m: int, n: int) -> Tuple[np.ndarray, np.ndarray]:
    order = m * n
    idx = np.arange(order)
    if kind is GroupKind.CYCLIC:
        law = (idx[:, None] + idx[None, :]) % order
        inverse = (-idx) % order
        return law.astype(np.int64), inverse.astype(np.int64)

    i, j = idx % m, idx // m
    if kind is GroupKind.PRODUCT:
        ii = (i[:, None] + i[None, :]) % m
        jj = (j[:, None] + j[None, :]) % n
        law = ii + m * jj
        inverse = (-i) % m + m * ((-j) % n)
        return law.astype(np.int64), inverse.astype(np.int64)

    # Mixed: go through exponents of the generator of C_{mn}
    exponent = n * i + j
    to_index = np.empty(order, dtype=np.int64)
    to_index[exponent] = idx

    law = to_index[(exponent[:, None] + exponent[None, :]) % order]
    inverse = to_index[(-exponent) % order]
    return law.astype(np.int64), inverse.astype(np.int64)


# ===== RING MATRICES =====

@dataclass(frozen=True, eq=False)
class RingMatrix:
    ring: RingId
    entries: np.ndarray

    def __post_init__(self):
        entries = np.ascontiguousarray(self.entries, dtype=np.uint8)
        if entries.ndim != 2:
            raise UnsupportedShapeError(f"Ring matrix must be 2-dimensional, got shape {entries.shape}")
        if np.any(entries & ~np.uint8(self.ring.mask)):
            raise ValueError(f"Matrix entries outside {self.ring.value}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zeros(cls, ring: RingId, rows: int, cols: int) -> "RingMatrix":
        return cls(ring, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, ring: RingId, size: int) -> "RingMatrix":
        return cls(ring, np.eye(size, dtype=np.uint8))

    @classmethod
    def from_rows(cls, ring: RingId, rows: Sequence[Sequence[RingElem]]) -> "RingMatrix":
        for row in rows:
            for elem in row:
                if elem.ring is not ring:
                    raise RingMismatchError(f"Entry in {elem.ring.value}, matrix over {ring.value}")
        return cls(ring, np.array([[elem.bits for elem in row] for row in rows], dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __getitem__(self, key: Tuple[int, int]) -> RingElem:
        return RingElem(self.ring, int(self.entries[key]))

    def row(self, i: int) -> Tuple[RingElem, ...]:
        return tuple(RingElem(self.ring, int(b)) for b in self.entries[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.ring is other.ring and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.ring, self.entries.shape, self.entries.tobytes()))

    def _check(self, other: "RingMatrix") -> None:
        if self.ring is not other.ring:
            raise RingMismatchError(f"Cannot combine matrices over {self.ring.value} and {other.ring.value}")

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        if self.entries.shape != other.entries.shape:
            raise UnsupportedShapeError(f"Shape mismatch {self.entries.shape} vs {other.entries.shape}")
        return RingMatrix(self.ring, self.entries ^ other.entries)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise UnsupportedShapeError(f"Cannot multiply {self.entries.shape} by {other.entries.shape}")
        products = MUL_TABLE[self.entries[:, :, None], other.entries[None, :, :]]
        return RingMatrix(self.ring, np.bitwise_xor.reduce(products, axis=1))

    @property
    def T(self) -> "RingMatrix":
        return RingMatrix(self.ring, self.entries.T)

    def is_zero(self) -> bool:
        return not self.entries.any()

    def residue_rank(self) -> int:
        """Rank of the matrix reduced modulo u, over the residue field (F2 or F4)."""
        return _field_rank(self.entries & np.uint8(0b0101))

    def is_invertible(self) -> bool:
        # Over a finite local ring a square matrix is invertible iff its reduction is
        if self.rows != self.cols:
            return False
        return self.residue_rank() == self.rows

    def to_text(self) -> str:
        return "\n".join(emit_shorthand(self.row(i)) for i in range(self.rows))

    @classmethod
    def from_text(cls, ring: RingId, text: str) -> "RingMatrix":
        rows = [parse_shorthand(line, ring) for line in text.splitlines() if line.strip()]
        if not rows or len({len(row) for row in rows}) != 1:
            raise UnsupportedShapeError("Ring matrix text needs non-empty rows of equal length")
        return cls.from_rows(ring, rows)


def _field_rank(matrix: np.ndarray) -> int:
    """Gaussian elimination over F2 / F4 (entries only use the {ω, 1} bits)."""
    work = matrix.copy()
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        pivots = np.nonzero(work[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        work[[rank, pivot]] = work[[pivot, rank]]
        scale = FIELD_INVERSE[int(work[rank, col])]
        work[rank] = MUL_TABLE[scale, work[rank]]
        others = np.nonzero(work[:, col])[0]
        for r in others:
            if r != rank:
                work[r] ^= MUL_TABLE[work[r, col], work[rank]]
        rank += 1
        if rank == rows:
            break
    return rank


def block(blocks: Sequence[Sequence[RingMatrix]]) -> RingMatrix:
    ring = blocks[0][0].ring
    for line in blocks:
        for item in line:
            if item.ring is not ring:
                raise RingMismatchError("Blocks live in different rings")
    return RingMatrix(ring, np.block([[item.entries for item in line] for line in blocks]))


# ===== GROUP RING ELEMENTS =====

@dataclass(frozen=True, eq=False)
class GroupRingElem:
    group: GroupSpec
    ring: RingId
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.ascontiguousarray(self.coeffs, dtype=np.uint8)
        if coeffs.shape != (self.group.order,):
            raise UnsupportedShapeError(
                f"Expected {self.group.order} coefficients for {self.group.literal}, got {coeffs.size}"
            )
        if np.any(coeffs & ~np.uint8(self.ring.mask)):
            raise ValueError(f"Coefficients outside {self.ring.value}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_elems(cls, group: GroupSpec, elems: Sequence[RingElem]) -> "GroupRingElem":
        if not elems:
            raise UnsupportedShapeError("Empty coefficient vector")
        ring = elems[0].ring
        if any(e.ring is not ring for e in elems):
            raise RingMismatchError("Coefficients from different rings")
        return cls(group, ring, np.array([e.bits for e in elems], dtype=np.uint8))

    @classmethod
    def parse(cls, group: GroupSpec, ring: RingId, text: str) -> "GroupRingElem":
        elems = parse_shorthand(text, ring)
        return cls(group, ring, np.array([e.bits for e in elems], dtype=np.uint8))

    @property
    def coefficients(self) -> Tuple[RingElem, ...]:
        return tuple(RingElem(self.ring, int(b)) for b in self.coeffs)

    def augmentation(self) -> RingElem:
        """Sum of all coefficients."""
        return RingElem(self.ring, int(np.bitwise_xor.reduce(self.coeffs)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return (self.group == other.group and self.ring is other.ring
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.group, self.ring, self.coeffs.tobytes()))

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        return gr_add(self, other)

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        return gr_mul(self, other)

    def __str__(self) -> str:
        return emit_shorthand(self.coefficients)


def _check_compatible(v: GroupRingElem, w: GroupRingElem) -> None:
    if v.group != w.group:
        raise RingMismatchError(f"Group mismatch: {v.group.literal} vs {w.group.literal}")
    if v.ring is not w.ring:
        raise RingMismatchError(f"Ring mismatch: {v.ring.value} vs {w.ring.value}")


def gr_add(v: GroupRingElem, w: GroupRingElem) -> GroupRingElem:
    _check_compatible(v, w)
    return GroupRingElem(v.group, v.ring, v.coeffs ^ w.coeffs)


def gr_mul(v: GroupRingElem, w: GroupRingElem) -> GroupRingElem:
    _check_compatible(v, w)
    products = MUL_TABLE[v.coeffs[:, None], w.coeffs[None, :]]
    out = np.zeros(v.group.order, dtype=np.uint8)
    np.bitwise_xor.at(out, v.group.law.ravel(), products.ravel())
    return GroupRingElem(v.group, v.ring, out)


def scale(v: GroupRingElem, c: RingElem) -> GroupRingElem:
    if c.ring is not v.ring:
        raise RingMismatchError(f"Scalar in {c.ring.value}, element over {v.ring.value}")
    return GroupRingElem(v.group, v.ring, MUL_TABLE[c.bits, v.coeffs])


def involution(v: GroupRingElem) -> GroupRingElem:
    # coefficient of g in v* is the coefficient of g^-1 in v
    return GroupRingElem(v.group, v.ring, v.coeffs[v.group.inverse])


def gr_hat(group: GroupSpec, ring: RingId) -> GroupRingElem:
    return GroupRingElem(group, ring, np.ones(group.order, dtype=np.uint8))


def gr_identity(group: GroupSpec, ring: RingId) -> GroupRingElem:
    coeffs = np.zeros(group.order, dtype=np.uint8)
    coeffs[0] = 1
    return GroupRingElem(group, ring, coeffs)


def gr_zero(group: GroupSpec, ring: RingId) -> GroupRingElem:
    return GroupRingElem(group, ring, np.zeros(group.order, dtype=np.uint8))


def sigma(v: GroupRingElem) -> RingMatrix:
    """Matrix (α_{g_i^-1 g_j}) read straight from the group law."""
    group = v.group
    positions = group.law[group.inverse[:, None], np.arange(group.order)[None, :]]
    return RingMatrix(v.ring, v.coeffs[positions])


def circulant(first_row: np.ndarray) -> np.ndarray:
    return np.stack([np.roll(first_row, i) for i in range(first_row.size)])


def sigma_closed_form(v: GroupRingElem) -> RingMatrix:
    """σ(v) assembled from circulant blocks: circ, CIRC(A_1..A_n) or the mixed C_{m,n} layout."""
    group = v.group
    a = v.coeffs
    if group.kind is GroupKind.CYCLIC:
        return RingMatrix(v.ring, circulant(a))

    m, n = group.m, group.n
    pieces = [a[m * j: m * (j + 1)] for j in range(n)]
    grid = []
    for row_block in range(n):
        line = []
        for col_block in range(n):
            offset = col_block - row_block
            if group.kind is GroupKind.PRODUCT:
                line.append(circulant(pieces[offset % n]))
            elif offset >= 0:
                line.append(circulant(pieces[offset]))
            else:
                # wrapped blocks are A'_j = circ(a_{m-1+mj}, a_{mj}, ..., a_{m-2+mj})
                line.append(circulant(np.roll(pieces[offset + n], 1)))
        grid.append(line)
    return RingMatrix(v.ring, np.block(grid))


def is_gr_unit(v: GroupRingElem) -> bool:
    return sigma(v).is_invertible()


def is_unitary_unit(v: GroupRingElem) -> bool:
    return gr_mul(v, involution(v)) == gr_identity(v.group, v.ring)


def elements_of(group: GroupSpec, ring: RingId) -> Iterable[GroupRingElem]:
    """Every element of RG in lexicographic coefficient order (small cases only)."""
    for ordinal in range(ring.size ** group.order):
        yield element_from_ordinal(group, ring, ordinal)


def element_from_ordinal(group: GroupSpec, ring: RingId, ordinal: int) -> GroupRingElem:
    values = np.array([e.bits for e in ring.elements()], dtype=np.uint8)
    base = values.size
    digits = np.empty(group.order, dtype=np.int64)
    rest = ordinal
    for pos in range(group.order - 1, -1, -1):
        rest, digits[pos] = divmod(rest, base)
    return GroupRingElem(group, ring, values[digits])
