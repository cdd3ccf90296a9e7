"""Gray maps from the ring alphabets down to F2.

  phi1      F2+uF2 -> F2^2      a + bu      -> (b, a+b)
  psi_f4    F4     -> F2^2      aω + bω̄     -> (a, b)
  psi_f4u   F4+uF4 -> (F2+uF2)^2  same basis solve with a, b in F2+uF2
  phi_f4u   F4+uF4 -> F4^2      a + bu      -> (b, a+b)

Vector images are laid out as two halves (BLOCK, the default) or pairwise
(INTERLEAVED). Both layouts give permutation-equivalent codes.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from codes.bincode import BinaryCode
from codes.errors import RingMismatchError
from codes.groupring import RingMatrix
from codes.rings import BIT_ONE, BIT_U, BIT_UW, BIT_W, MUL_TABLE, RingElem, RingId


class GrayLayout(str, Enum):
    BLOCK = "block"
    INTERLEAVED = "interleaved"


class GrayChain(str, Enum):
    IDENTITY = "identity"            # F2
    PHI1 = "phi1"                    # F2U
    PSI_F4 = "psi_f4"                # F4
    PHI1_PSI_F4U = "phi1_psi_f4u"    # F4U canonical: phi1 after psi_f4u
    PSI_F4_PHI_F4U = "psi_f4_phi_f4u"  # F4U alternate: psi_f4 after phi_f4u

    @property
    def source(self) -> RingId:
        return _CHAIN_SOURCE[self]

    @property
    def factor(self) -> int:
        return {RingId.F2: 1, RingId.F2U: 2, RingId.F4: 2, RingId.F4U: 4}[self.source]

    @property
    def stages(self) -> Tuple[str, ...]:
        return _CHAIN_STAGES[self]

    @classmethod
    def default_for(cls, ring: RingId) -> "GrayChain":
        return {RingId.F2: cls.IDENTITY, RingId.F2U: cls.PHI1, RingId.F4: cls.PSI_F4,
                RingId.F4U: cls.PHI1_PSI_F4U}[ring]


_CHAIN_SOURCE = {
    GrayChain.IDENTITY: RingId.F2,
    GrayChain.PHI1: RingId.F2U,
    GrayChain.PSI_F4: RingId.F4,
    GrayChain.PHI1_PSI_F4U: RingId.F4U,
    GrayChain.PSI_F4_PHI_F4U: RingId.F4U,
}
_CHAIN_STAGES = {
    GrayChain.IDENTITY: (),
    GrayChain.PHI1: ("phi1",),
    GrayChain.PSI_F4: ("psi_f4",),
    GrayChain.PHI1_PSI_F4U: ("psi_f4u", "phi1"),
    GrayChain.PSI_F4_PHI_F4U: ("phi_f4u", "psi_f4"),
}

# F2 basis of each ring, used to expand ring-linear spans into F2-linear ones
RING_BASIS = {
    RingId.F2: (BIT_ONE,),
    RingId.F2U: (BIT_ONE, BIT_U),
    RingId.F4: (BIT_ONE, BIT_W),
    RingId.F4U: (BIT_ONE, BIT_W, BIT_U, BIT_UW),
}


def _join(first: np.ndarray, second: np.ndarray, layout: GrayLayout) -> np.ndarray:
    if layout is GrayLayout.BLOCK:
        return np.concatenate([first, second], axis=-1)
    return np.stack([first, second], axis=-1).reshape(*first.shape[:-1], -1)


def _bit(bits: np.ndarray, mask: int) -> np.ndarray:
    return ((bits & mask) != 0).astype(np.uint8)


# Kernels work on arrays of 4-bit codes along the last axis.

def phi1_bits(bits: np.ndarray, layout: GrayLayout = GrayLayout.BLOCK) -> np.ndarray:
    a, b = _bit(bits, BIT_ONE), _bit(bits, BIT_U)
    return _join(b, a ^ b, layout)


def psi_f4_bits(bits: np.ndarray, layout: GrayLayout = GrayLayout.BLOCK) -> np.ndarray:
    # r + pω = aω + b(1+ω)  =>  b = r, a = p + r
    r, p = _bit(bits, BIT_ONE), _bit(bits, BIT_W)
    return _join(p ^ r, r, layout)


def psi_f4u_bits(bits: np.ndarray, layout: GrayLayout = GrayLayout.BLOCK) -> np.ndarray:
    """F4+uF4 -> (F2+uF2)^2; output entries are F2+uF2 codes."""
    r, s = _bit(bits, BIT_ONE), _bit(bits, BIT_U)
    p, q = _bit(bits, BIT_W), _bit(bits, BIT_UW)
    a = (p ^ r) * BIT_ONE + (q ^ s) * BIT_U
    b = r * BIT_ONE + s * BIT_U
    return _join(a.astype(np.uint8), b.astype(np.uint8), layout)


def phi_f4u_bits(bits: np.ndarray, layout: GrayLayout = GrayLayout.BLOCK) -> np.ndarray:
    """F4+uF4 -> F4^2; output entries are F4 codes."""
    a = bits & (BIT_ONE | BIT_W)
    b = _bit(bits, BIT_U) * BIT_ONE + _bit(bits, BIT_UW) * BIT_W
    return _join(b.astype(np.uint8), (a ^ b).astype(np.uint8), layout)


_STAGE_KERNELS = {
    "phi1": phi1_bits,
    "psi_f4": psi_f4_bits,
    "psi_f4u": psi_f4u_bits,
    "phi_f4u": phi_f4u_bits,
}


def gray_bits(bits: np.ndarray, chain: GrayChain, layout: GrayLayout = GrayLayout.BLOCK) -> np.ndarray:
    out = np.asarray(bits, dtype=np.uint8)
    for stage in chain.stages:
        out = _STAGE_KERNELS[stage](out, layout)
    return out.astype(np.uint8)


def _vector_bits(vec: Sequence[RingElem], ring: RingId) -> np.ndarray:
    for elem in vec:
        if elem.ring is not ring:
            raise RingMismatchError(f"Expected a vector over {ring.value}, got an entry in {elem.ring.value}")
    return np.array([elem.bits for elem in vec], dtype=np.uint8)


def _to_elems(bits: np.ndarray, ring: RingId) -> Tuple[RingElem, ...]:
    return tuple(RingElem(ring, int(b)) for b in bits)


def phi1(vec: Sequence[RingElem], layout: GrayLayout = GrayLayout.BLOCK) -> Tuple[RingElem, ...]:
    return _to_elems(phi1_bits(_vector_bits(vec, RingId.F2U), layout), RingId.F2)


def psi_f4(vec: Sequence[RingElem], layout: GrayLayout = GrayLayout.BLOCK) -> Tuple[RingElem, ...]:
    return _to_elems(psi_f4_bits(_vector_bits(vec, RingId.F4), layout), RingId.F2)


def psi_f4u(vec: Sequence[RingElem], layout: GrayLayout = GrayLayout.BLOCK) -> Tuple[RingElem, ...]:
    return _to_elems(psi_f4u_bits(_vector_bits(vec, RingId.F4U), layout), RingId.F2U)


def phi_f4u(vec: Sequence[RingElem], layout: GrayLayout = GrayLayout.BLOCK) -> Tuple[RingElem, ...]:
    return _to_elems(phi_f4u_bits(_vector_bits(vec, RingId.F4U), layout), RingId.F4)


def lee_weight(vec: Sequence[RingElem]) -> int:
    """Hamming weight of the canonical binary image."""
    if not vec:
        return 0
    ring = vec[0].ring
    bits = _vector_bits(vec, ring)
    return int(gray_bits(bits, GrayChain.default_for(ring)).sum())


def expand_rows(entries: np.ndarray, ring: RingId) -> np.ndarray:
    """Rows e * g for every F2 basis element e of the ring and every row g."""
    return np.concatenate([MUL_TABLE[e, entries] for e in RING_BASIS[ring]], axis=0)


@dataclass(frozen=True)
class BinaryImage:
    code: BinaryCode
    chain: GrayChain
    layout: GrayLayout
    source_self_dual: bool


def psi_f4u_generator(generator: RingMatrix, layout: GrayLayout = GrayLayout.BLOCK) -> RingMatrix:
    """Generator over F2+uF2 of the psi image: rows psi(g) and psi(ωg)."""
    if generator.ring is not RingId.F4U:
        raise RingMismatchError(f"psi_f4u needs a generator over F4U, got {generator.ring.value}")
    rows = np.concatenate([generator.entries, MUL_TABLE[BIT_W, generator.entries]], axis=0)
    return RingMatrix(RingId.F2U, psi_f4u_bits(rows, layout))


def binary_image(generator: RingMatrix, chain: Optional[GrayChain] = None,
                 layout: GrayLayout = GrayLayout.BLOCK) -> BinaryImage:
    chain = chain or GrayChain.default_for(generator.ring)
    if chain.source is not generator.ring:
        raise RingMismatchError(f"Chain {chain.value} starts at {chain.source.value}, "
                                f"generator is over {generator.ring.value}")
    rows = gray_bits(expand_rows(generator.entries, generator.ring), chain, layout)
    code = BinaryCode.from_rows(rows)
    # the Gray maps are bijective isometries, so |C| = 2^k and self-orthogonal C is self-dual iff 2k = n
    source_self_dual = (generator @ generator.T).is_zero() and 2 * code.k == code.n
    if not source_self_dual:
        logger.warning(f"binary_image: generator over {generator.ring.value} is not self-dual; "
                       f"duality of the image is not guaranteed")
    return BinaryImage(code=code, chain=chain, layout=layout,
                       source_self_dual=source_self_dual)
