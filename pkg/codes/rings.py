"""Exact arithmetic for F2, F2+uF2, F4 and F4+uF4.

Every element is a 4-bit vector over F2 in the ordered basis {uω, ω, u, 1}
(most significant bit first), so hex digit 9 = 1001 is 1 + uω. The smaller
rings only use a subset of the slots: F2 the {1} slot, F2+uF2 the {u, 1}
slots and F4 the {ω, 1} slots. Because all four rings embed in F4+uF4 with the
same bit layout, one 16x16 multiplication table serves all of them.
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from codes.errors import RingMismatchError, ShorthandParseError

BIT_ONE = 0b0001
BIT_U = 0b0010
BIT_W = 0b0100
BIT_UW = 0b1000


class RingId(str, Enum):
    F2 = "F2"
    F2U = "F2U"
    F4 = "F4"
    F4U = "F4U"

    @property
    def mask(self) -> int:
        return _MASKS[self]

    @property
    def size(self) -> int:
        return 1 << bin(self.mask).count("1")

    @property
    def has_u(self) -> bool:
        return bool(self.mask & BIT_U)

    @property
    def residue_field(self) -> "RingId":
        """Field obtained by reducing modulo u."""
        return RingId.F4 if self.mask & BIT_W else RingId.F2

    def elements(self) -> List["RingElem"]:
        return [RingElem(self, bits) for bits in range(16) if bits & ~self.mask == 0]

    @property
    def zero(self) -> "RingElem":
        return RingElem(self, 0)

    @property
    def one(self) -> "RingElem":
        return RingElem(self, BIT_ONE)

    @classmethod
    def parse(cls, text: str) -> "RingId":
        key = text.strip().upper().replace("+", "").replace(" ", "")
        aliases = {"F2": cls.F2, "F2U": cls.F2U, "F2UF2": cls.F2U, "R1": cls.F2U,
                   "F4": cls.F4, "F4U": cls.F4U, "F4UF4": cls.F4U}
        if key not in aliases:
            raise ValueError(f"Unknown ring tag {text!r}; expected one of F2, F2U, F4, F4U")
        return aliases[key]


_MASKS = {
    RingId.F2: BIT_ONE,
    RingId.F2U: BIT_ONE | BIT_U,
    RingId.F4: BIT_ONE | BIT_W,
    RingId.F4U: BIT_ONE | BIT_U | BIT_W | BIT_UW,
}


def _f4_mul(x: int, y: int) -> int:
    # x, y as (c0 + c1 ω) packed into bit0 / bit1; ω² = ω + 1
    a, b = x & 1, (x >> 1) & 1
    c, d = y & 1, (y >> 1) & 1
    return ((a & c) ^ (b & d)) | (((a & d) ^ (b & c) ^ (b & d)) << 1)


def _split(bits: int) -> Tuple[int, int]:
    """Split into (x0, x1) with element = x0 + x1·u, both F4 values packed as c0 + c1 ω."""
    x0 = (bits & BIT_ONE) | ((bits & BIT_W) >> 1)
    x1 = ((bits & BIT_U) >> 1) | ((bits & BIT_UW) >> 2)
    return x0, x1


def _join(x0: int, x1: int) -> int:
    return (x0 & 1) | ((x0 & 2) << 1) | ((x1 & 1) << 1) | ((x1 & 2) << 2)


def _mul_bits(a: int, b: int) -> int:
    a0, a1 = _split(a)
    b0, b1 = _split(b)
    return _join(_f4_mul(a0, b0), _f4_mul(a0, b1) ^ _f4_mul(a1, b0))


MUL_TABLE = np.array([[_mul_bits(a, b) for b in range(16)] for a in range(16)], dtype=np.uint8)
# Inverses of the residue-field values 1, ω, ω+1 (enough for elimination modulo u)
FIELD_INVERSE = {BIT_ONE: BIT_ONE, BIT_W: BIT_W | BIT_ONE, BIT_W | BIT_ONE: BIT_W}


@dataclass(frozen=True)
class RingElem:
    ring: RingId
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 16 or self.bits & ~self.ring.mask:
            raise ValueError(f"Bits {self.bits:04b} do not describe an element of {self.ring.value}")

    def __add__(self, other: "RingElem") -> "RingElem":
        return add(self, other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        return mul(self, other)

    def __bool__(self) -> bool:
        return self.bits != 0

    def square(self) -> "RingElem":
        return mul(self, self)

    def residue(self) -> int:
        """Image modulo u, as bits in the {ω, 1} slots."""
        return self.bits & (BIT_ONE | BIT_W)

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> "RingElem":
        if not self.is_unit():
            raise ValueError(f"{emit(self)} is not a unit in {self.ring.value}")
        # Unit groups have at most 12 elements
        for candidate in self.ring.elements():
            if MUL_TABLE[self.bits, candidate.bits] == BIT_ONE:
                return candidate
        raise AssertionError("unit without inverse")

    def __str__(self) -> str:
        return emit(self)


def _check_same_ring(a: RingElem, b: RingElem) -> None:
    if a.ring is not b.ring:
        raise RingMismatchError(f"Cannot combine {a.ring.value} with {b.ring.value}")


def add(a: RingElem, b: RingElem) -> RingElem:
    _check_same_ring(a, b)
    return RingElem(a.ring, a.bits ^ b.bits)


def mul(a: RingElem, b: RingElem) -> RingElem:
    _check_same_ring(a, b)
    return RingElem(a.ring, int(MUL_TABLE[a.bits, b.bits]))


def is_unit(a: RingElem) -> bool:
    # Local rings: invertible iff the residue modulo u is nonzero
    return a.residue() != 0


def inner_product(x: Sequence[RingElem], y: Sequence[RingElem]) -> RingElem:
    if len(x) != len(y):
        raise RingMismatchError(f"Vector lengths differ: {len(x)} vs {len(y)}")
    if not x:
        raise ValueError("Inner product of empty vectors has no ring")
    acc = 0
    for a, b in zip(x, y):
        _check_same_ring(a, b)
        acc ^= int(MUL_TABLE[a.bits, b.bits])
    return RingElem(x[0].ring, acc)


# ===== SHORTHAND CODECS =====

_F2U_TOKENS = {"0": 0, "1": BIT_ONE, "u": BIT_U, "3": BIT_ONE | BIT_U,
               "u+1": BIT_ONE | BIT_U, "1+u": BIT_ONE | BIT_U}
_F4_TOKENS = {"0": 0, "1": BIT_ONE, "w": BIT_W, "ω": BIT_W,
              "w+1": BIT_W | BIT_ONE, "1+w": BIT_W | BIT_ONE,
              "ω+1": BIT_W | BIT_ONE, "1+ω": BIT_W | BIT_ONE,
              "ω̄": BIT_W | BIT_ONE, "wb": BIT_W | BIT_ONE}
_F2_TOKENS = {"0": 0, "1": BIT_ONE}

_EMIT = {
    RingId.F2: {0: "0", BIT_ONE: "1"},
    RingId.F2U: {0: "0", BIT_ONE: "1", BIT_U: "u", BIT_ONE | BIT_U: "3"},
    RingId.F4: {0: "0", BIT_ONE: "1", BIT_W: "w", BIT_W | BIT_ONE: "w+1"},
}


def _token_bits(token: str, ring: RingId, position: int) -> int:
    if ring is RingId.F4U:
        if len(token) == 1 and token.upper() in "0123456789ABCDEF":
            return int(token, 16)
        raise ShorthandParseError("Expected a hexadecimal digit", position, token)
    table = {RingId.F2: _F2_TOKENS, RingId.F2U: _F2U_TOKENS, RingId.F4: _F4_TOKENS}[ring]
    key = token if ring is RingId.F4 else token.lower()
    if key not in table:
        raise ShorthandParseError(f"Invalid {ring.value} token", position, token)
    return table[key]


def tokenize(text: str) -> List[str]:
    """Split a vector literal into tokens.

    Accepts "(1,3,0)", "1 3 0", "1, 3, 0" and the compact "130". Compact form
    splits per character and is only unambiguous for single-character tokens.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return []
    if "," in body or re.search(r"\s", body):
        return [tok.strip() for tok in re.split(r"[,\s]+" if "," not in body else r"\s*,\s*", body)]
    return list(body)


def parse_shorthand(text: str, ring: RingId) -> List[RingElem]:
    tokens = tokenize(text)
    if ring is RingId.F4 and "," not in text and "+" in tokens:
        raise ShorthandParseError("F4 vectors with ω+1 entries need comma separators", 0, text)
    return [RingElem(ring, _token_bits(token, ring, pos)) for pos, token in enumerate(tokens)]


def parse_element(text: str, ring: RingId) -> RingElem:
    return RingElem(ring, _token_bits(text.strip(), ring, 0))


def emit(a: RingElem) -> str:
    if a.ring is RingId.F4U:
        return f"{a.bits:X}"
    return _EMIT[a.ring][a.bits]


def emit_shorthand(vector: Iterable[RingElem]) -> str:
    return "(" + ",".join(emit(a) for a in vector) + ")"


def elements_from_bits(ring: RingId, values: Iterable[int]) -> Tuple[RingElem, ...]:
    return tuple(RingElem(ring, int(v)) for v in values)
