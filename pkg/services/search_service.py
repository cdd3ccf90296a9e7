import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger
from sqlalchemy.ext.asyncio import AsyncSession

from codes.bincode import (CLASSIFIED_LENGTHS, BinaryCode, CodeType, WeightProfile, min_weight, rains_bound,
                           weight_counts)
from codes.construct import (ConstructionParams, build_generator, check_conditions, corollary_screen,
                             is_self_dual_over_ring)
from codes.errors import CeilingExceededError
from codes.gray import GrayChain, GrayLayout, binary_image
from codes.groupring import (GroupRingElem, GroupSpec, element_from_ordinal, gr_add, gr_identity, gr_mul,
                             involution)
from codes.rings import RingElem, RingId, emit_shorthand, parse_shorthand
from config import config
from database import crud
from services.pipeline_service import ConstructionOutcome, PipelineService, profile_code
from services.schemas import LedgerEntry, SearchConfig, SearchLedger

Gamma = Tuple[RingElem, RingElem, RingElem, RingElem]


def candidate_pair(cfg: SearchConfig, group: GroupSpec, ring: RingId, ordinal: int) -> Tuple[GroupRingElem, GroupRingElem]:
    """(v1, v2) for a candidate ordinal; random draws depend only on (seed, ordinal)."""
    if cfg.exhaustive:
        first, second = divmod(ordinal, ring.size ** group.order)
        return element_from_ordinal(group, ring, first), element_from_ordinal(group, ring, second)
    rng = np.random.default_rng([cfg.seed or 0, ordinal])
    values = np.array([e.bits for e in ring.elements()], dtype=np.uint8)
    draws = values[rng.integers(0, values.size, size=2 * group.order)]
    return (GroupRingElem(group, ring, draws[: group.order]),
            GroupRingElem(group, ring, draws[group.order:]))


def gamma_domain(cfg: SearchConfig, ring: RingId, delta1: RingElem, delta2: RingElem) -> List[Gamma]:
    """Fixed γ, or every (δ1, γ2, δ2, γ4) with γ1²+γ2²+γ3²+γ4² = 1."""
    if cfg.gamma_mode == "fixed":
        return [tuple(parse_shorthand(cfg.gamma, ring))]
    domain = []
    for g2 in ring.elements():
        for g4 in ring.elements():
            if delta1.square() + g2.square() + delta2.square() + g4.square() == ring.one:
                domain.append((delta1, g2, delta2, g4))
    return domain


def border_square_target(v1: GroupRingElem, v2: GroupRingElem) -> Optional[int]:
    """s with v1v1* + v2v2* + 1 = s·ĝ, or None when no border can satisfy the norm condition."""
    total = gr_add(gr_add(gr_mul(v1, involution(v1)), gr_mul(v2, involution(v2))), gr_identity(v1.group, v1.ring))
    coeffs = total.coeffs
    if np.all(coeffs == coeffs[0]):
        return int(coeffs[0])
    return None


def search_profile(code: BinaryCode, ceiling: int) -> WeightProfile:
    if code.n in CLASSIFIED_LENGTHS:
        return profile_code(code, ceiling=ceiling)
    d = min_weight(code)
    try:
        counts = weight_counts(code, min(d + 2, ceiling), ceiling=ceiling)
    except CeilingExceededError:
        counts = {0: 1}
    return WeightProfile(n=code.n, k=code.k, d=d, counts=counts, code_type=code.code_type)


def fingerprint(profile: WeightProfile) -> List[Any]:
    params = [[name, value] for name, value in sorted(profile.params.items())]
    return [profile.n, profile.k, profile.d, profile.counts.get(profile.d, -1), profile.counts.get(profile.d + 2, -1),
            profile.family or "", params]


def _meets_target(cfg: SearchConfig, profile: WeightProfile) -> bool:
    if cfg.target_d is not None and profile.d < cfg.target_d:
        return False
    if cfg.family is not None and profile.family != cfg.family:
        return False
    return all(profile.params.get(name) == value for name, value in cfg.params.items())


def _merge_hit(best: Dict[tuple, Dict[str, Any]], hit: Dict[str, Any]) -> None:
    key = _freeze(hit["fingerprint"])
    current = best.get(key)
    if current is None:
        best[key] = hit
        return
    keep = hit if hit["ordinal"] < current["ordinal"] else current
    keep = dict(keep, fingerprint_hits=current["fingerprint_hits"] + hit["fingerprint_hits"])
    best[key] = keep


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(item) for item in value)
    return value


def scan_slice(payload: Dict[str, Any], start: int, stop: int) -> Dict[str, Any]:
    """Run the full pipeline on candidates [start, stop); picklable for process workers."""
    cfg = SearchConfig.model_validate(payload)
    group, ring = GroupSpec.parse(cfg.group), RingId(cfg.ring)
    ceiling = config.enumeration.weight_ceiling
    layout = GrayLayout(cfg.layout)
    best: Dict[tuple, Dict[str, Any]] = {}
    screened = failed = hits = 0

    for ordinal in range(start, stop):
        v1, v2 = candidate_pair(cfg, group, ring, ordinal)
        target = border_square_target(v1, v2)
        verdicts: Dict[bool, Any] = {}
        for gamma in gamma_domain(cfg, ring, v1.augmentation(), v2.augmentation()):
            params = ConstructionParams(group=group, ring=ring, gamma=gamma, v1=v1, v2=v2)
            border_unit = (gamma[1] + gamma[3]).is_unit()
            if border_unit not in verdicts:
                verdicts[border_unit] = corollary_screen(params)
            if verdicts[border_unit].rejects:
                screened += 1
                continue
            if target is None or (gamma[1] + gamma[3]).square().bits != target:
                failed += 1
                continue
            report = check_conditions(params)
            if not report.all_hold:
                failed += 1
                continue
            generator = build_generator(params)
            if not is_self_dual_over_ring(generator):
                failed += 1
                continue
            image = binary_image(generator, GrayChain.default_for(ring), layout)
            profile = search_profile(image.code, ceiling)
            if not _meets_target(cfg, profile):
                continue
            hits += 1
            outcome = ConstructionOutcome(params=params, report=report, generator=generator, ring_self_dual=True,
                                          image=image, profile=profile)
            record = PipelineService.construction_record(outcome, label=f"{group.literal}/{ring.value} #{ordinal}")
            _merge_hit(best, {
                "ordinal": ordinal,
                "gamma": emit_shorthand(gamma),
                "v1": str(v1),
                "v2": str(v2),
                "fingerprint": fingerprint(profile),
                "fingerprint_hits": 1,
                "record": record.model_dump(mode="json"),
            })

    return {"hits": list(best.values()), "hit_count": hits, "screened": screened, "failed": failed,
            "examined": stop - start}


def _slices(start: int, stop: int, parts: int) -> List[Tuple[int, int]]:
    bounds = np.linspace(start, stop, num=max(1, parts) + 1).astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


class SearchService:
    """Randomized / exhaustive sweep over construction parameters"""

    @staticmethod
    def resolve_seed(cfg: SearchConfig) -> SearchConfig:
        if cfg.exhaustive or cfg.seed is not None:
            return cfg
        seed = int(np.random.SeedSequence().entropy % (1 << 63))
        logger.info(f"resolve_seed: no seed given, drew {seed}")
        return cfg.model_copy(update={"seed": seed})

    @staticmethod
    def short_circuit(cfg: SearchConfig) -> Optional[str]:
        """Reason the target is unreachable, if it is."""
        group, ring = GroupSpec.parse(cfg.group), RingId(cfg.ring)
        n = (4 * group.order + 4) * GrayChain.default_for(ring).factor
        if cfg.target_n is not None and cfg.target_n != n:
            return f"target n={cfg.target_n} but {group.literal} over {ring.value} gives n={n}"
        if cfg.target_d is not None and cfg.target_d > rains_bound(n, CodeType.I):
            return f"target d={cfg.target_d} exceeds the bound {rains_bound(n, CodeType.I)} for n={n}"
        return None

    @staticmethod
    async def scan(cfg: SearchConfig) -> SearchLedger:
        cfg = SearchService.resolve_seed(cfg)
        ledger = SearchLedger(config=cfg)
        reason = SearchService.short_circuit(cfg)
        if reason:
            logger.warning(f"run_search: empty ledger, {reason}")
            return ledger

        total = cfg.total_candidates
        start = min(cfg.resume_from, total)
        stop = total if cfg.max_candidates is None else min(total, start + cfg.max_candidates)
        payload = cfg.model_dump(mode="json")
        logger.info(f"run_search: {cfg.group}/{cfg.ring} candidates [{start}, {stop}) of {total}, "
                    f"{'exhaustive' if cfg.exhaustive else f'random seed={cfg.seed}'}, workers={cfg.workers}")

        loop = asyncio.get_running_loop()
        if cfg.workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                parts = await asyncio.gather(*[
                    loop.run_in_executor(pool, scan_slice, payload, a, b)
                    for a, b in _slices(start, stop, cfg.workers * 4)
                ])
        else:
            parts = [await loop.run_in_executor(None, scan_slice, payload, start, stop)]

        best: Dict[tuple, Dict[str, Any]] = {}
        for part in parts:
            for hit in part["hits"]:
                _merge_hit(best, hit)
            ledger.candidates_examined += part["examined"]
            ledger.screened_out += part["screened"]
            ledger.conditions_failed += part["failed"]
            ledger.hits += part["hit_count"]

        ordered = sorted(best.values(), key=lambda hit: (_freeze(hit["fingerprint"]), hit["ordinal"]))
        ledger.entries = [LedgerEntry.model_validate(hit) for hit in ordered]
        ledger.resume_token = stop if stop < total else None
        if ledger.resume_token is not None:
            logger.warning(f"run_search: budget exhausted, resume from {ledger.resume_token}")
        logger.info(f"run_search: {ledger.hits} hits, {len(ledger.entries)} fingerprints, "
                    f"{ledger.screened_out} screened out, {ledger.conditions_failed} failed the conditions")
        return ledger

    @staticmethod
    async def run(session: Optional[AsyncSession], cfg: SearchConfig) -> SearchLedger:
        """scan() plus persistence of the run and its ledger records"""
        ledger = await SearchService.scan(cfg)
        if session is None:
            return ledger
        run = await crud.create_search_run(session, config=ledger.config.model_dump(mode="json"),
                                           seed=ledger.config.seed, workers=ledger.config.workers)
        for entry in ledger.entries:
            entry.record = await PipelineService.store(
                session, entry.record.model_copy(update={"search_run_id": run.id}))
        await crud.finish_search_run(session, run.id, ledger.candidates_examined, ledger.hits, ledger.resume_token)
        ledger.search_run_id = run.id
        return ledger
