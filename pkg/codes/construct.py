"""Bordered four-block construction G = [I_{2p+2} | A B ; B^T A^T]."""
from dataclasses import dataclass, replace
from enum import Enum
from typing import Tuple

import numpy as np
from loguru import logger

from codes.errors import RingMismatchError, UnsupportedShapeError
from codes.groupring import (GroupRingElem, GroupSpec, RingMatrix, block, gr_add, gr_hat, gr_identity, gr_mul,
                             involution, is_gr_unit, is_unitary_unit, scale, sigma)
from codes.rings import RingElem, RingId, parse_shorthand

Gamma = Tuple[RingElem, RingElem, RingElem, RingElem]


@dataclass(frozen=True)
class ConstructionParams:
    group: GroupSpec
    ring: RingId
    gamma: Gamma
    v1: GroupRingElem
    v2: GroupRingElem

    def __post_init__(self):
        p = self.group.order
        if p % 2 == 0:
            raise UnsupportedShapeError(f"Group order must be odd, {self.group.literal} has order {p}")
        if p == 1:
            raise UnsupportedShapeError("Trivial group is not supported")
        if len(self.gamma) != 4:
            raise UnsupportedShapeError(f"Expected four border values, got {len(self.gamma)}")
        for value in self.gamma:
            if value.ring is not self.ring:
                raise RingMismatchError(f"Border value in {value.ring.value}, construction over {self.ring.value}")
        for v in (self.v1, self.v2):
            if v.ring is not self.ring or v.group != self.group:
                raise RingMismatchError(f"v over {v.group.literal}/{v.ring.value}, expected "
                                        f"{self.group.literal}/{self.ring.value}")

    @classmethod
    def from_shorthand(cls, group: str, ring: str, gamma: str, v1: str, v2: str) -> "ConstructionParams":
        spec = GroupSpec.parse(group)
        ring_id = RingId.parse(ring)
        gammas = parse_shorthand(gamma, ring_id)
        return cls(
            group=spec,
            ring=ring_id,
            gamma=tuple(gammas),
            v1=GroupRingElem.parse(spec, ring_id, v1),
            v2=GroupRingElem.parse(spec, ring_id, v2),
        )

    @property
    def p(self) -> int:
        return self.group.order

    @property
    def length(self) -> int:
        return 4 * self.p + 4

    @property
    def delta1(self) -> RingElem:
        return self.v1.augmentation()

    @property
    def delta2(self) -> RingElem:
        return self.v2.augmentation()

    def with_derived_gamma(self) -> "ConstructionParams":
        """Copy with γ1 := δ1 and γ3 := δ2."""
        g1, g2, g3, g4 = self.gamma
        return replace(self, gamma=(self.delta1, g2, self.delta2, g4))


@dataclass(frozen=True)
class ConditionReport:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool
    delta1: RingElem
    delta2: RingElem

    @property
    def all_hold(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4 and self.c5

    def failed(self) -> Tuple[str, ...]:
        return tuple(name for name in ("c1", "c2", "c3", "c4", "c5") if not getattr(self, name))


def _bordered(corner: RingElem, border: RingElem, interior: RingMatrix) -> np.ndarray:
    size = interior.rows + 1
    out = np.empty((size, size), dtype=np.uint8)
    out[0, 0] = corner.bits
    out[0, 1:] = border.bits
    out[1:, 0] = border.bits
    out[1:, 1:] = interior.entries
    return out


def build_generator(params: ConstructionParams) -> RingMatrix:
    g1, g2, g3, g4 = params.gamma
    a = RingMatrix(params.ring, _bordered(g1, g2, sigma(params.v1)))
    b = RingMatrix(params.ring, _bordered(g3, g4, sigma(params.v2)))
    half = 2 * params.p + 2
    right = block([[a, b], [b.T, a.T]])
    return block([[RingMatrix.identity(params.ring, half), right]])


def check_conditions(params: ConstructionParams) -> ConditionReport:
    ring, group = params.ring, params.group
    g1, g2, g3, g4 = params.gamma
    v1, v2 = params.v1, params.v2

    gamma_sq = g1.square() + g2.square() + g3.square() + g4.square()
    border_sq = (g2 + g4).square()
    tail = gr_add(scale(gr_hat(group, ring), border_sq), gr_identity(group, ring))

    left = gr_add(gr_add(gr_mul(v1, involution(v1)), gr_mul(v2, involution(v2))), tail)
    right = gr_add(gr_add(gr_mul(involution(v1), v1), gr_mul(involution(v2), v2)), tail)

    delta1, delta2 = params.delta1, params.delta2
    return ConditionReport(
        c1=gr_mul(v1, v2) == gr_mul(v2, v1),
        c2=gamma_sq == ring.one,
        c3=not left.coeffs.any(),
        c4=not right.coeffs.any(),
        c5=g1 == delta1 and g3 == delta2,
        delta1=delta1,
        delta2=delta2,
    )


def gram(generator: RingMatrix) -> RingMatrix:
    return generator @ generator.T


def is_self_dual_over_ring(generator: RingMatrix) -> bool:
    k, n = generator.rows, generator.cols
    if n != 2 * k:
        raise UnsupportedShapeError(f"Expected a k x 2k generator, got {k} x {n}")
    if not np.array_equal(generator.entries[:, :k], np.eye(k, dtype=np.uint8)):
        raise UnsupportedShapeError("Generator is not of the form [I | R]")
    return gram(generator).is_zero()


class ScreenVerdict(str, Enum):
    CONSISTENT = "consistent"
    CANNOT_BE_SELF_DUAL = "cannot_be_self_dual"
    INAPPLICABLE = "inapplicable"

    @property
    def rejects(self) -> bool:
        return self is ScreenVerdict.CANNOT_BE_SELF_DUAL


def corollary_screen(params: ConstructionParams) -> ScreenVerdict:
    """Cheap necessary checks for F2 / F2+uF2 candidates.

    With γ2+γ4 a non-unit, condition 3 reduces to v1v1* + v2v2* = 1, so the two
    terms cannot both be 1 and a unitary v1 forces v2v2* = 0 (v2 not a unit).
    With γ2+γ4 a unit, condition 4 gives v1*v1 + v2*v2 = ĝ + 1, which is never a
    unit for odd p.
    """
    if params.ring not in (RingId.F2, RingId.F2U):
        return ScreenVerdict.INAPPLICABLE

    g2, g4 = params.gamma[1], params.gamma[3]
    v1, v2 = params.v1, params.v2

    if not (g2 + g4).is_unit():
        unitary1, unitary2 = is_unitary_unit(v1), is_unitary_unit(v2)
        if unitary1 and unitary2:
            return ScreenVerdict.CANNOT_BE_SELF_DUAL
        if (unitary1 and is_gr_unit(v2)) or (unitary2 and is_gr_unit(v1)):
            return ScreenVerdict.CANNOT_BE_SELF_DUAL
        return ScreenVerdict.CONSISTENT

    combined = gr_add(gr_mul(involution(v1), v1), gr_mul(involution(v2), v2))
    if is_gr_unit(combined):
        logger.debug(f"corollary_screen: v1*v1 + v2*v2 is a unit over {params.group.literal}")
        return ScreenVerdict.CANNOT_BE_SELF_DUAL
    return ScreenVerdict.INAPPLICABLE
