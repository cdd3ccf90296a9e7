"""Length n+2 extensions over F2 / F2+uF2 and binary neighbors."""
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np
from loguru import logger

from codes.bincode import BinaryCode, gf2_rank
from codes.errors import DerivationError, RingMismatchError
from codes.groupring import RingMatrix
from codes.rings import MUL_TABLE, RingElem, RingId, inner_product

EXTENDABLE_RINGS = (RingId.F2, RingId.F2U)


@dataclass(frozen=True)
class ExtensionSpec:
    base: RingMatrix
    c: RingElem
    x: Tuple[RingElem, ...]

    def __post_init__(self):
        ring = self.base.ring
        if ring not in EXTENDABLE_RINGS:
            raise DerivationError(f"Extensions are defined over F2 and F2U, not {ring.value}")
        if self.c.ring is not ring or any(e.ring is not ring for e in self.x):
            raise RingMismatchError(f"c and X must live in {ring.value}")
        if len(self.x) != self.base.cols:
            raise DerivationError(f"X has length {len(self.x)}, base code has length {self.base.cols}")
        if not self.c.is_unit():
            raise DerivationError(f"c = {self.c} is not a unit in {ring.value}")
        norm = inner_product(self.x, self.x)
        if norm != ring.one:
            raise DerivationError(f"<X,X> = {norm}, expected 1")


def extend(spec: ExtensionSpec) -> RingMatrix:
    """Generator [(1, 0, X); (y_i, c*y_i, r_i)] with y_i = <r_i, X>."""
    base = spec.base.entries
    x = np.array([e.bits for e in spec.x], dtype=np.uint8)
    y = np.bitwise_xor.reduce(MUL_TABLE[base, x[None, :]], axis=1)
    cy = MUL_TABLE[spec.c.bits, y]

    out = np.zeros((base.shape[0] + 1, base.shape[1] + 2), dtype=np.uint8)
    out[0, 0] = 1
    out[0, 2:] = x
    out[1:, 0] = y
    out[1:, 1] = cy
    out[1:, 2:] = base
    return RingMatrix(spec.base.ring, out)


def binary_extend(code: BinaryCode, x: Sequence[int]) -> BinaryCode:
    """extend() over F2, where c = 1 is the only unit."""
    ring = RingId.F2
    spec = ExtensionSpec(
        base=RingMatrix(ring, code.generator),
        c=ring.one,
        x=tuple(RingElem(ring, int(bit) & 1) for bit in x),
    )
    return BinaryCode.from_rows(extend(spec).entries)


# ===== NEIGHBORS =====

class CoordinateFrame(str, Enum):
    STANDARD = "standard"
    RAW = "raw"


@dataclass(frozen=True, eq=False)
class NeighborSpec:
    code: BinaryCode
    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.uint8) % 2
        if x.shape != (self.code.n,):
            raise DerivationError(f"x has length {x.size}, code has length {self.code.n}")
        object.__setattr__(self, "x", x)

    @classmethod
    def in_frame(cls, code: BinaryCode, x, frame: CoordinateFrame) -> "NeighborSpec":
        """x given in standard-form coordinates is mapped back to the code's own order."""
        x = np.asarray(x, dtype=np.uint8)
        if frame is CoordinateFrame.STANDARD:
            x = code.standard_form.from_permuted(x)
        return cls(code, x)


def parse_neighbor_vector(text: str, zero_prefix: int = 0) -> np.ndarray:
    body = "".join(text.split()).strip("()").replace(",", "")
    if set(body) - {"0", "1"}:
        raise DerivationError(f"Neighbor vector must be a 0/1 string, got {text!r}")
    return np.array([0] * zero_prefix + [int(ch) for ch in body], dtype=np.uint8)


def neighbor(spec: NeighborSpec) -> BinaryCode:
    """D = <<x>^perp ∩ C, x>."""
    code, x = spec.code, spec.x
    if int(x.sum()) % 2:
        raise DerivationError(f"x has odd weight {int(x.sum())}; the neighbor would not be self-orthogonal")
    if code.contains(x):
        raise DerivationError("x lies in C; no proper neighbor")

    gen = code.generator
    syndromes = (gen.astype(np.int64) @ x.astype(np.int64)) & 1
    hits = np.nonzero(syndromes)[0]
    if hits.size == 0:
        raise DerivationError("x is orthogonal to C but not in it; C is not self-dual")

    pivot = int(hits[0])
    orthogonal = gen ^ (syndromes[:, None].astype(np.uint8) * gen[pivot])
    orthogonal = np.delete(orthogonal, pivot, axis=0)
    result = BinaryCode.from_rows(np.concatenate([orthogonal, x[None, :]]))
    logger.debug(f"neighbor: [{result.n},{result.k}] from pivot row {pivot}")
    return result


def intersection_dimension(first: BinaryCode, second: BinaryCode) -> int:
    stacked = np.concatenate([first.generator, second.generator])
    return first.k + second.k - gf2_rank(stacked)
