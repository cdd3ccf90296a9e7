import asyncio
from functools import lru_cache
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from codes.bincode import BinaryCode, WeightProfile
from codes.construct import ConstructionParams, build_generator, check_conditions, is_self_dual_over_ring
from codes.derive import CoordinateFrame, ExtensionSpec, extend, parse_neighbor_vector
from codes.errors import DerivationError
from codes.gray import GrayLayout, binary_image
from codes.groupring import RingMatrix
from codes.rings import parse_element, parse_shorthand
from services.pipeline_service import extension_base, run_construction, run_extension, run_neighbor
from services.schemas import ReproductionReport, RowOutcome
from services.tables_data import CONSTRUCTION_TABLES, EXTENSION_TABLES, NEIGHBOR_TABLES, TABLE_IDS

LAYOUTS = (GrayLayout.BLOCK, GrayLayout.INTERLEAVED)
FRAMES = (CoordinateFrame.STANDARD, CoordinateFrame.RAW)
# (psi_f4u layout, phi1 layout): matching pairs first, then the mixed ones
STAGE_LAYOUTS = tuple(sorted(product(LAYOUTS, LAYOUTS), key=lambda pair: pair[0] != pair[1]))


def expected_of(table: Dict[str, Any], row: Dict[str, Any]) -> Dict[str, Any]:
    expected = {"n": table["n"], "k": table["n"] // 2, "d": table["d"], "self_dual": True}
    if "type" in row:
        expected["type"] = row["type"]
    if "family" in row:
        expected["family"] = row["family"]
        expected["params"] = dict(row.get("params", {}))
    return expected


def observed_of(profile: WeightProfile, self_dual: bool) -> Dict[str, Any]:
    return {"n": profile.n, "k": profile.k, "d": profile.d, "type": profile.code_type.value,
            "family": profile.family, "params": dict(profile.params), "self_dual": self_dual}


def matches(expected: Dict[str, Any], observed: Dict[str, Any]) -> bool:
    return all(observed.get(key) == value for key, value in expected.items())


def judge(expected: Dict[str, Any], observed: Dict[str, Any],
          discrepancy: Optional[Dict[str, Any]]) -> Tuple[str, Optional[str]]:
    """PASS on the printed values, DISCREPANCY on the documented deviation, FAIL otherwise."""
    if matches(expected, observed):
        return "PASS", None
    if discrepancy and matches(discrepancy["observed"], observed):
        return "DISCREPANCY", discrepancy["reason"]
    return "FAIL", None


def resolve_params(row: Dict[str, Any], ring: str) -> Tuple[ConstructionParams, bool]:
    """Printed parameters, or the γ1 := δ1, γ3 := δ2 amendment when only that satisfies the conditions."""
    params = ConstructionParams.from_shorthand(row["group"], ring, row["gamma"], row["v1"], row["v2"])
    if check_conditions(params).all_hold:
        return params, False
    derived = params.with_derived_gamma()
    if check_conditions(derived).all_hold:
        logger.warning(f"resolve_params: printed gamma {row['gamma']} fails the conditions, "
                       f"using amended (δ1, γ2, δ2, γ4)")
        return derived, True
    return params, False


@lru_cache(maxsize=32)
def construction_generator(table_id: str, index: int) -> RingMatrix:
    table = CONSTRUCTION_TABLES[table_id]
    params, _ = resolve_params(table["rows"][index - 1], table["ring"])
    return build_generator(params)


@lru_cache(maxsize=64)
def extended_code(table_id: str, index: int, psi_layout: GrayLayout,
                  phi_layout: Optional[GrayLayout] = None) -> BinaryCode:
    """Binary image of an extension table row, without profiling it."""
    table = EXTENSION_TABLES[table_id]
    row = table["rows"][index - 1]
    base = extension_base(construction_generator(*table["base"]), psi_layout)
    spec = ExtensionSpec(base=base, c=parse_element(row["c"], base.ring), x=tuple(parse_shorthand(row["x"], base.ring)))
    return binary_image(extend(spec), None, phi_layout or psi_layout).code


class ReproduceService:
    """Re-derives the published tables and compares every row exactly"""

    @staticmethod
    def construction_row(table_id: str, index: int, layout: GrayLayout = GrayLayout.BLOCK, workers: int = 1,
                         ceiling: Optional[int] = None) -> RowOutcome:
        table = CONSTRUCTION_TABLES[table_id]
        row = table["rows"][index - 1]
        expected = expected_of(table, row)
        if row.get("skip"):
            return RowOutcome(table=table_id, row=index, status="SKIP", expected=expected, message=row["skip"])
        try:
            params, amended = resolve_params(row, table["ring"])
            if not is_self_dual_over_ring(build_generator(params)):
                # nothing to classify; the weight profile of a non-self-dual image is not compared
                observed = {"self_dual": False, "conditions_failed": list(check_conditions(params).failed())}
                notes = [f"conditions failed: {', '.join(observed['conditions_failed'])}",
                         "generator is not self-dual over the ring"]
            else:
                outcome = run_construction(params, layout=layout, workers=workers, ceiling=ceiling)
                observed = observed_of(outcome.profile, outcome.self_dual)
                notes = outcome.notes
        except ValueError as e:
            logger.error(f"construction_row: {table_id} row {index}: {e}")
            return RowOutcome(table=table_id, row=index, status="FAIL", expected=expected, message=str(e))
        status, reason = judge(expected, observed, row.get("discrepancy"))
        if status == "FAIL":
            logger.error(f"construction_row: {table_id} row {index} does not match the printed values")
        return RowOutcome(table=table_id, row=index, status=status, expected=expected, observed=observed,
                          amended=amended, message="; ".join(filter(None, [reason, *notes])) or None)

    @staticmethod
    def extension_row(table_id: str, index: int, workers: int = 1, ceiling: Optional[int] = None) -> RowOutcome:
        table = EXTENSION_TABLES[table_id]
        row = table["rows"][index - 1]
        expected = expected_of(table, row)
        observed: Dict[str, Any] = {}
        tried: List[str] = []
        for layout in LAYOUTS:
            try:
                base = extension_base(construction_generator(*table["base"]), layout)
                outcome = run_extension(base, parse_element(row["c"], base.ring), parse_shorthand(row["x"], base.ring),
                                        layout, workers=workers, ceiling=ceiling)
            except ValueError as e:
                tried.append(f"layout={layout.value}: {e}")
                continue
            observed = observed_of(outcome.profile, outcome.code.is_self_dual())
            if matches(expected, observed):
                return RowOutcome(table=table_id, row=index, status="PASS", expected=expected, observed=observed,
                                  interpretation=f"layout={layout.value}")
            tried.append(f"layout={layout.value}: {observed.get('family')} {observed.get('params')}")
        status, reason = judge(expected, observed, row.get("discrepancy"))
        if status == "FAIL":
            logger.error(f"extension_row: {table_id} row {index} failed under every layout")
        return RowOutcome(table=table_id, row=index, status=status, expected=expected, observed=observed,
                          message="; ".join(filter(None, [reason, *tried])) or None)

    @staticmethod
    def neighbor_row(table_id: str, index: int, workers: int = 1, ceiling: Optional[int] = None) -> RowOutcome:
        """Tries every (psi layout, phi1 layout, frame) reading of x; the first reading is reported on a mismatch."""
        table = NEIGHBOR_TABLES[table_id]
        row = table["rows"][index - 1]
        expected = expected_of(table, row)
        vector = parse_neighbor_vector(row["x"], table["zero_prefix"])
        first: Optional[Tuple[str, Dict[str, Any]]] = None
        tried: List[str] = []
        for psi_layout, phi_layout in STAGE_LAYOUTS:
            layouts = f"psi={psi_layout.value}, phi1={phi_layout.value}"
            try:
                base = extended_code(*row["base"], psi_layout, phi_layout)
            except ValueError as e:
                tried.append(f"{layouts}: {e}")
                continue
            for frame in FRAMES:
                interpretation = f"{layouts}, frame={frame.value}"
                try:
                    outcome = run_neighbor(base, vector, frame, workers=workers, ceiling=ceiling)
                except DerivationError as e:
                    tried.append(f"{interpretation}: {e}")
                    continue
                observed = observed_of(outcome.profile, outcome.code.is_self_dual())
                if matches(expected, observed):
                    return RowOutcome(table=table_id, row=index, status="PASS", expected=expected,
                                      observed=observed, interpretation=interpretation)
                first = first or (interpretation, observed)
                tried.append(f"{interpretation}: d={observed['d']} {observed.get('family')} {observed.get('params')}")

        interpretation, observed = first or (None, {})
        status, reason = judge(expected, observed, row.get("discrepancy") or table.get("discrepancy"))
        if status == "FAIL":
            logger.error(f"neighbor_row: {table_id} row {index} failed under every interpretation")
        else:
            logger.warning(f"neighbor_row: {table_id} row {index} matches no reading of x, reported as {status}")
        return RowOutcome(table=table_id, row=index, status=status, expected=expected, observed=observed,
                          interpretation=interpretation, message="; ".join(filter(None, [reason, *tried])) or None)

    @staticmethod
    def row_count(table_id: str) -> int:
        for tables in (CONSTRUCTION_TABLES, EXTENSION_TABLES, NEIGHBOR_TABLES):
            if table_id in tables:
                return len(tables[table_id]["rows"])
        raise ValueError(f"Unknown table {table_id!r}; expected one of {', '.join(TABLE_IDS)}")

    @staticmethod
    def reproduce_row(table_id: str, index: int, layout: GrayLayout = GrayLayout.BLOCK, workers: int = 1,
                      ceiling: Optional[int] = None) -> RowOutcome:
        if not 1 <= index <= ReproduceService.row_count(table_id):
            raise ValueError(f"{table_id} has no row {index}")
        if table_id in CONSTRUCTION_TABLES:
            return ReproduceService.construction_row(table_id, index, layout, workers, ceiling)
        if table_id in EXTENSION_TABLES:
            return ReproduceService.extension_row(table_id, index, workers, ceiling)
        return ReproduceService.neighbor_row(table_id, index, workers, ceiling)

    @staticmethod
    async def reproduce(table_id: str, rows: Optional[List[int]] = None, layout: GrayLayout = GrayLayout.BLOCK,
                        workers: int = 1, ceiling: Optional[int] = None) -> ReproductionReport:
        table_id = table_id.lower()
        total = ReproduceService.row_count(table_id)
        title = {**CONSTRUCTION_TABLES, **EXTENSION_TABLES, **NEIGHBOR_TABLES}[table_id]["title"]
        report = ReproductionReport(table=table_id, title=title)
        for index in rows or range(1, total + 1):
            outcome = await asyncio.to_thread(ReproduceService.reproduce_row, table_id, index, layout, workers,
                                              ceiling)
            logger.info(f"reproduce: {table_id} row {index}: {outcome.status}"
                        f"{' (amended)' if outcome.amended else ''}"
                        f"{f' [{outcome.interpretation}]' if outcome.interpretation else ''}")
            report.rows.append(outcome)
        logger.info(f"reproduce: {report.summary()}")
        return report
