from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from loguru import logger
from sqlalchemy.ext.asyncio import AsyncSession

from codes.bincode import (BinaryCode, CodeType, WeightProfile, classify_enumerator, format_generator, min_weight,
                           weight_counts)
from codes.construct import (ConditionReport, ConstructionParams, build_generator, check_conditions,
                             is_self_dual_over_ring)
from codes.derive import CoordinateFrame, ExtensionSpec, NeighborSpec, extend, neighbor, parse_neighbor_vector
from codes.errors import CeilingExceededError, ClassificationError, DerivationError
from codes.gray import BinaryImage, GrayChain, GrayLayout, binary_image, psi_f4u_generator
from codes.groupring import RingMatrix
from codes.rings import RingElem, RingId, emit_shorthand, parse_element, parse_shorthand
from config import config
from database import crud
from services.schemas import CodeRecord, ManifestRow, WeightProfileModel


@dataclass
class ConstructionOutcome:
    params: ConstructionParams
    report: ConditionReport
    generator: RingMatrix
    ring_self_dual: bool
    image: BinaryImage
    profile: WeightProfile
    notes: List[str] = field(default_factory=list)

    @property
    def self_dual(self) -> bool:
        return self.ring_self_dual and self.image.code.is_self_dual()


@dataclass
class DerivedOutcome:
    code: BinaryCode
    profile: WeightProfile
    generator: Optional[RingMatrix] = None
    image: Optional[BinaryImage] = None


def profile_code(code: BinaryCode, workers: int = 1, ceiling: Optional[int] = None) -> WeightProfile:
    """Weight profile of a binary code; codes outside the known families keep their raw counts."""
    ceiling = config.enumeration.weight_ceiling if ceiling is None else ceiling
    if code.is_self_dual():
        try:
            return classify_enumerator(code, workers=workers, ceiling=ceiling)
        except ClassificationError as e:
            logger.warning(f"profile_code: {e}")
            nonzero = [w for w, c in e.counts.items() if w > 0 and c > 0]
            d = min(nonzero) if nonzero else min_weight(code, workers=workers)
            return WeightProfile(n=code.n, k=code.k, d=d, counts=e.counts, code_type=code.code_type)

    # Not self-dual: the type is meaningless, only d and A_d are reported
    d = min_weight(code, workers=workers)
    try:
        counts = weight_counts(code, d, workers=workers, ceiling=ceiling)
    except CeilingExceededError:
        counts = {0: 1}
    return WeightProfile(n=code.n, k=code.k, d=d, counts=counts, code_type=CodeType.I)


def run_construction(params: ConstructionParams, chain: Optional[GrayChain] = None,
                     layout: GrayLayout = GrayLayout.BLOCK, workers: int = 1,
                     ceiling: Optional[int] = None) -> ConstructionOutcome:
    report = check_conditions(params)
    notes = []
    if not report.all_hold:
        notes.append(f"conditions failed: {', '.join(report.failed())}")
    generator = build_generator(params)
    ring_self_dual = is_self_dual_over_ring(generator)
    if not ring_self_dual:
        notes.append("generator is not self-dual over the ring")
    image = binary_image(generator, chain, layout)
    profile = profile_code(image.code, workers=workers, ceiling=ceiling)
    return ConstructionOutcome(params=params, report=report, generator=generator, ring_self_dual=ring_self_dual,
                               image=image, profile=profile, notes=notes)


def extension_base(generator: RingMatrix, layout: GrayLayout = GrayLayout.BLOCK) -> RingMatrix:
    """The F2 / F2+uF2 generator an extension starts from; F4+uF4 goes through psi first."""
    if generator.ring is RingId.F4U:
        return psi_f4u_generator(generator, layout)
    if generator.ring is RingId.F4:
        raise DerivationError("Extensions are not defined for codes over F4")
    return generator


def run_extension(base: RingMatrix, c: RingElem, x: Sequence[RingElem], layout: GrayLayout = GrayLayout.BLOCK,
                  workers: int = 1, ceiling: Optional[int] = None) -> DerivedOutcome:
    generator = extend(ExtensionSpec(base=base, c=c, x=tuple(x)))
    image = binary_image(generator, None, layout)
    profile = profile_code(image.code, workers=workers, ceiling=ceiling)
    return DerivedOutcome(code=image.code, profile=profile, generator=generator, image=image)


def run_neighbor(code: BinaryCode, x: np.ndarray, frame: CoordinateFrame = CoordinateFrame.STANDARD,
                 workers: int = 1, ceiling: Optional[int] = None) -> DerivedOutcome:
    result = neighbor(NeighborSpec.in_frame(code, x, frame))
    return DerivedOutcome(code=result, profile=profile_code(result, workers=workers, ceiling=ceiling))


def ring_generator_of(record: CodeRecord) -> RingMatrix:
    """Ring-level generator stored with constructions and extensions."""
    provenance = record.provenance
    if "ring_generator" not in provenance:
        raise DerivationError(f"Record {record.id} ({record.kind}) has no ring-level generator")
    return RingMatrix.from_text(RingId(provenance["ring"]), provenance["ring_generator"])


def _profile_model(profile: WeightProfile) -> WeightProfileModel:
    return WeightProfileModel.from_profile(profile)


class PipelineService:
    """Builds codes, stores them as records and re-verifies stored records"""

    @staticmethod
    async def store(session: Optional[AsyncSession], record: CodeRecord) -> CodeRecord:
        if session is None:
            return record
        row = await crud.create_code_record(
            session,
            kind=record.kind,
            provenance=record.provenance,
            generator=record.generator,
            label=record.label,
            profile=record.profile.model_dump(mode="json") if record.profile else None,
            gray_chain=record.gray_chain,
            gray_layout=record.gray_layout,
            parent_id=record.parent_id,
            search_run_id=record.search_run_id,
            self_dual=record.self_dual,
        )
        return CodeRecord.model_validate(row)

    @staticmethod
    def construction_record(outcome: ConstructionOutcome, label: Optional[str] = None,
                            search_run_id: Optional[int] = None) -> CodeRecord:
        params = outcome.params
        report = outcome.report
        provenance = {
            "group": params.group.literal,
            "ring": params.ring.value,
            "gamma": emit_shorthand(params.gamma),
            "v1": str(params.v1),
            "v2": str(params.v2),
            "conditions": {name: getattr(report, name) for name in ("c1", "c2", "c3", "c4", "c5")},
            "ring_self_dual": outcome.ring_self_dual,
            "ring_generator": outcome.generator.to_text(),
            "notes": list(outcome.notes),
        }
        return CodeRecord(
            label=label,
            kind="construction",
            provenance=provenance,
            gray_chain=outcome.image.chain.value,
            gray_layout=outcome.image.layout.value,
            generator=format_generator(outcome.image.code),
            self_dual=outcome.self_dual,
            profile=_profile_model(outcome.profile),
            search_run_id=search_run_id,
        )

    @staticmethod
    async def construct(session: Optional[AsyncSession], row: ManifestRow, label: Optional[str] = None,
                        chain: Optional[GrayChain] = None, layout: GrayLayout = GrayLayout.BLOCK,
                        workers: int = 1, ceiling: Optional[int] = None) -> CodeRecord:
        """Construction, ring self-duality check, Gray image and profile for one manifest row"""
        params = ConstructionParams.from_shorthand(row.group, row.ring, row.gamma, row.v1, row.v2)
        outcome = run_construction(params, chain, layout, workers=workers, ceiling=ceiling)
        if not outcome.self_dual:
            logger.warning(f"construct: {row.as_line()} is not self-dual ({'; '.join(outcome.notes)})")
        profile = outcome.profile
        logger.info(f"construct: [{profile.n},{profile.k},{profile.d}] type {profile.code_type.value} "
                    f"family={profile.family} params={profile.params}")
        return await PipelineService.store(session, PipelineService.construction_record(outcome, label))

    @staticmethod
    async def extend(session: Optional[AsyncSession], base: CodeRecord, c: str, x: str,
                     layout: GrayLayout = GrayLayout.BLOCK, label: Optional[str] = None,
                     workers: int = 1, ceiling: Optional[int] = None) -> CodeRecord:
        ring_generator = extension_base(ring_generator_of(base), layout)
        ring = ring_generator.ring
        outcome = run_extension(ring_generator, parse_element(c, ring), parse_shorthand(x, ring), layout,
                                workers=workers, ceiling=ceiling)
        self_dual = outcome.image.source_self_dual and outcome.code.is_self_dual()
        if not self_dual:
            logger.warning(f"extend: extension of record {base.id} is not self-dual")
        record = CodeRecord(
            label=label,
            kind="extension",
            provenance={
                "base_record": base.id,
                "ring": ring.value,
                "c": c,
                "x": x,
                "psi_layout": layout.value if base.provenance.get("ring") == RingId.F4U.value else None,
                "ring_generator": outcome.generator.to_text(),
            },
            parent_id=base.id,
            gray_chain=outcome.image.chain.value,
            gray_layout=outcome.image.layout.value,
            generator=format_generator(outcome.code),
            self_dual=self_dual,
            profile=_profile_model(outcome.profile),
        )
        logger.info(f"extend: record {base.id} -> [{outcome.profile.n},{outcome.profile.k},{outcome.profile.d}] "
                    f"{outcome.profile.family} {outcome.profile.params}")
        return await PipelineService.store(session, record)

    @staticmethod
    async def neighbor(session: Optional[AsyncSession], base: CodeRecord, x: str, zero_prefix: int = 0,
                       frame: CoordinateFrame = CoordinateFrame.STANDARD, label: Optional[str] = None,
                       workers: int = 1, ceiling: Optional[int] = None) -> CodeRecord:
        vector = parse_neighbor_vector(x, zero_prefix)
        outcome = run_neighbor(base.code(), vector, frame, workers=workers, ceiling=ceiling)
        record = CodeRecord(
            label=label,
            kind="neighbor",
            provenance={"base_record": base.id, "x": x, "zero_prefix": zero_prefix, "frame": frame.value},
            parent_id=base.id,
            generator=format_generator(outcome.code),
            self_dual=outcome.code.is_self_dual(),
            profile=_profile_model(outcome.profile),
        )
        logger.info(f"neighbor: record {base.id} -> [{outcome.profile.n},{outcome.profile.k},{outcome.profile.d}] "
                    f"{outcome.profile.family} {outcome.profile.params}")
        return await PipelineService.store(session, record)

    @staticmethod
    def verify(record: CodeRecord, workers: int = 1, ceiling: Optional[int] = None) -> Dict[str, Any]:
        """Recompute the profile of a stored record and compare it with the stored one"""
        profile = _profile_model(profile_code(record.code(), workers=workers, ceiling=ceiling))
        stored = record.profile
        matches = stored is not None and stored.model_dump() == profile.model_dump()
        if not matches:
            logger.warning(f"verify: record {record.id} profile differs from the stored one")
        return {"record": record.id, "matches": matches, "profile": profile.model_dump(mode="json"),
                "stored": stored.model_dump(mode="json") if stored else None}

    @staticmethod
    async def load_record(session: Optional[AsyncSession], record_id: Optional[int] = None,
                          path: Optional[str] = None) -> CodeRecord:
        if path is not None:
            return CodeRecord.from_file(path)
        if session is None or record_id is None:
            raise ValueError("Either a record id or a record file is required")
        return CodeRecord.model_validate(await crud.get_code_record(session, record_id))
