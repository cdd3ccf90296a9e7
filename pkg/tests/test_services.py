import json

import pytest
from pydantic import ValidationError

import main
from cli.handlers.reproduce import _row_line
from codes.bincode import weight_counts
from codes.derive import CoordinateFrame
from codes.errors import ShorthandParseError
from codes.gray import binary_image
from codes.rings import RingId, parse_shorthand
from database import crud
from services import PipelineService, ReproduceService, SearchService
from services.reproduce_service import construction_generator, resolve_params
from services.schemas import CodeRecord, ManifestRow, ReproductionReport, RowOutcome, SearchConfig
from services.search_service import border_square_target, fingerprint, gamma_domain, search_profile
from services.tables_data import CONSTRUCTION_TABLES

C9_ROW = "C9 F2 (0,0,0,1) 000000011 001110111"


# ===== MANIFEST ROWS =====

def test_manifest_line_parsing():
    row = ManifestRow.from_line("C3 F4 (0, 1, w, w) (0,1,1) (0,1,w+1)")
    assert row.group == "C3"
    assert row.gamma == "(0, 1, w, w)"
    assert ManifestRow.from_line(row.as_line()) == row
    assert ManifestRow.from_line("C3,3 f2+uf2 (u,0,u,1) 000000001 000000011").ring == "F2U"


@pytest.mark.parametrize("line", ["C9 F2 (0,0,0,1) 000000011", "D6 F2 (0,0,0,1) 000000 000000",
                                  "C9 Z4 (0,0,0,1) 000000011 001110111"])
def test_bad_manifest_lines(line):
    with pytest.raises(ValueError):
        ManifestRow.from_line(line)


def test_search_config_validation():
    with pytest.raises(ValidationError):
        SearchConfig(group="C3", ring="F4", gamma_mode="fixed")
    with pytest.raises(ValidationError):
        SearchConfig(group="C3", ring="F4", gamma_mode="fixed", gamma="(0,1,w)")
    cfg = SearchConfig(group="C3", ring="F4")
    assert cfg.space_size == 4 ** 6
    assert cfg.exhaustive
    assert cfg.total_candidates == 4096
    assert not SearchConfig(group="C7", ring="F2U", samples=50).exhaustive


def test_search_config_file_overrides(tmp_path):
    path = tmp_path / "search.json"
    path.write_text(json.dumps({"group": "C7", "ring": "F2U", "samples": 20, "seed": 3}))
    cfg = SearchConfig.from_file(path, seed=9, target_d=None)
    assert (cfg.group, cfg.samples, cfg.seed, cfg.target_d) == ("C7", 20, 9, None)


# ===== PIPELINE =====

async def test_construct_stores_record(db_session):
    record = await PipelineService.construct(db_session, ManifestRow.from_line(C9_ROW), label="c9-1")
    assert record.id is not None
    assert record.self_dual
    assert (record.profile.n, record.profile.k, record.profile.d) == (40, 20, 8)
    assert record.profile.type == "I"
    assert record.provenance["conditions"] == {"c1": True, "c2": True, "c3": True, "c4": True, "c5": True}
    assert record.gray_chain == "identity"

    stored = await crud.get_code_record(db_session, record.id)
    assert stored.label == "c9-1"
    assert CodeRecord.model_validate(stored).code() == record.code()


async def test_non_self_dual_candidate_is_flagged():
    record = await PipelineService.construct(None, ManifestRow.from_line("C3 F2 (0,0,0,0) 100 000"))
    assert not record.self_dual
    assert record.provenance["ring_self_dual"] is False
    assert record.profile.type == "I"


async def test_malformed_gamma_is_reported():
    with pytest.raises(ShorthandParseError):
        await PipelineService.construct(None, ManifestRow.from_line("C3 F2 (0,0,x,1) 100 000"))


async def test_verify_record_file(tmp_path):
    record = await PipelineService.construct(None, ManifestRow.from_line(C9_ROW))
    path = record.to_file(tmp_path / "record.json")
    loaded = await PipelineService.load_record(None, path=str(path))
    assert loaded.generator == record.generator
    result = PipelineService.verify(loaded)
    assert result["matches"]
    assert result["profile"]["d"] == 8


async def test_extension_and_neighbor_records(db_session):
    base = await PipelineService.construct(db_session, ManifestRow.from_line(C9_ROW))
    extended = await PipelineService.extend(db_session, base, c="1", x="1" + "0" * 39)
    assert extended.kind == "extension"
    assert extended.parent_id == base.id
    assert extended.self_dual
    assert (extended.profile.n, extended.profile.k) == (42, 21)
    assert "ring_generator" in extended.provenance

    moved = await PipelineService.neighbor(db_session, base, x="11" + "0" * 38, frame=CoordinateFrame.RAW)
    assert moved.kind == "neighbor"
    assert moved.self_dual
    assert moved.profile.n == 40
    assert [r.kind for r in await crud.list_code_records(db_session)] == ["construction", "extension", "neighbor"]


async def test_neighbor_needs_matching_length():
    base = await PipelineService.construct(None, ManifestRow.from_line(C9_ROW))
    with pytest.raises(ValueError):
        await PipelineService.neighbor(None, base, x="11", zero_prefix=0)


# ===== REPRODUCTION =====

@pytest.mark.parametrize("table,passes,discrepancies", [("table1", 2, 1), ("table3", 3, 0), ("table5", 15, 0),
                                                        ("table7", 7, 0)])
async def test_reproduce_small_tables(table, passes, discrepancies):
    report = await ReproduceService.reproduce(table)
    assert report.count("PASS") == passes, report.summary()
    assert report.count("DISCREPANCY") == discrepancies
    assert report.count("FAIL") == 0
    assert report.exit_code == 0


def test_type_one_row_in_table1_is_documented():
    outcome = ReproduceService.reproduce_row("table1", 3)
    assert outcome.status == "DISCREPANCY"
    assert outcome.expected["type"] == "II"
    assert (outcome.observed["d"], outcome.observed["type"], outcome.observed["self_dual"]) == (8, "I", True)
    assert "Type I" in outcome.message

    counts = weight_counts(binary_image(construction_generator("table1", 3)).code, 10)
    assert counts[8] == 364
    assert counts[10] == 2048


@pytest.mark.parametrize("index", [3, 4])
def test_table2_rows_failing_the_conditions(index):
    outcome = ReproduceService.reproduce_row("table2", index)
    assert outcome.status == "DISCREPANCY"
    assert not outcome.amended
    assert outcome.observed == {"self_dual": False, "conditions_failed": ["c3", "c4", "c5"]}


def test_table8_row_with_repeated_vector():
    outcome = ReproduceService.reproduce_row("table8", 3)
    assert outcome.status == "DISCREPANCY"
    assert outcome.observed["self_dual"] is False
    assert {"c3", "c4"} <= set(outcome.observed["conditions_failed"])
    assert "c5" not in outcome.observed["conditions_failed"]


def test_discrepancy_rows_keep_a_clean_exit_code():
    report = ReproductionReport(table="table8", title="t", rows=[
        RowOutcome(table="table8", row=1, status="PASS"),
        RowOutcome(table="table8", row=3, status="DISCREPANCY", observed={"self_dual": False}),
    ])
    assert report.exit_code == 0
    assert report.summary() == "table8: 1 PASS, 0 FAIL, 0 SKIP, 1 DISCREPANCY"
    assert "not self-dual" in _row_line(report.rows[1])
    report.rows.append(RowOutcome(table="table8", row=4, status="FAIL"))
    assert report.exit_code == 1


async def test_reproduce_selected_rows():
    report = await ReproduceService.reproduce("table5", rows=[1, 14])
    assert [row.row for row in report.rows] == [1, 14]
    assert [row.observed["type"] for row in report.rows] == ["I", "II"]


def test_unknown_table_and_row():
    with pytest.raises(ValueError):
        ReproduceService.row_count("table11")
    with pytest.raises(ValueError):
        ReproduceService.reproduce_row("table1", 4)


def test_printed_rows_are_amended_only_when_needed():
    table = CONSTRUCTION_TABLES["table4"]
    _, amended = resolve_params(table["rows"][0], table["ring"])
    assert amended
    table = CONSTRUCTION_TABLES["table1"]
    _, amended = resolve_params(table["rows"][0], table["ring"])
    assert not amended


@pytest.mark.slow
async def test_reproduce_table4_with_amendments():
    report = await ReproduceService.reproduce("table4")
    assert report.count("PASS") == 7, report.summary()
    assert report.count("SKIP") == 1
    assert report.rows[7].status == "SKIP"
    assert report.rows[0].amended


@pytest.mark.slow
@pytest.mark.parametrize("table,passes,discrepancies", [("table2", 9, 2), ("table6", 19, 0), ("table8", 11, 1),
                                                        ("table10", 6, 0)])
async def test_reproduce_large_tables(table, passes, discrepancies):
    report = await ReproduceService.reproduce(table, workers=4)
    assert report.count("PASS") == passes, report.summary()
    assert report.count("DISCREPANCY") == discrepancies
    assert report.exit_code == 0


@pytest.mark.slow
async def test_reproduce_neighbor_table():
    report = await ReproduceService.reproduce("table9", workers=4)
    assert report.count("FAIL") == 0, report.summary()
    assert report.count("PASS") >= 7
    assert report.count("PASS") + report.count("DISCREPANCY") == 17
    for row in report.rows:
        if row.status == "DISCREPANCY":
            assert (row.observed["n"], row.observed["k"], row.observed["self_dual"]) == (68, 34, True)
            assert row.interpretation.startswith("psi=")


# ===== SEARCH =====

def test_gamma_domain_forces_augmentations():
    ring = RingId.F2U
    domain = gamma_domain(SearchConfig(group="C3", ring="F2U"), ring, ring.zero, ring.one)
    assert domain
    for g1, g2, g3, g4 in domain:
        assert g1 == ring.zero and g3 == ring.one
        assert g1.square() + g2.square() + g3.square() + g4.square() == ring.one

    fixed = SearchConfig(group="C3", ring="F2U", gamma_mode="fixed", gamma="(1,u,0,0)")
    assert gamma_domain(fixed, ring, ring.zero, ring.zero) == [tuple(parse_shorthand("(1,u,0,0)", ring))]


def test_border_square_target_on_published_row():
    params, _ = resolve_params(CONSTRUCTION_TABLES["table1"]["rows"][0], "F4")
    # v1v1* + v2v2* + 1 = ωĝ and (γ2 + γ4)² = (1 + ω)² = ω
    assert border_square_target(params.v1, params.v2) == 0b0100


async def test_search_finds_published_codes():
    ledger = await SearchService.scan(SearchConfig(group="C3", ring="F4", target_d=8, workers=1))
    assert ledger.candidates_examined == 4096
    assert ledger.resume_token is None
    assert ledger.hits >= len(ledger.entries) > 0
    assert sum(entry.fingerprint_hits for entry in ledger.entries) == ledger.hits

    found = [entry.fingerprint for entry in ledger.entries]
    for index in (1, 2):
        code = binary_image(construction_generator("table1", index)).code
        expected = fingerprint(search_profile(code, 16))
        assert expected[:5] == [32, 16, 8, 620, 0]
        assert expected in found
    for entry in ledger.entries:
        assert entry.record.self_dual
        assert entry.fingerprint[2] >= 8


async def test_random_search_is_deterministic_across_workers():
    base = dict(group="C3", ring="F2U", v_mode="random", samples=300, seed=11)
    serial = await SearchService.scan(SearchConfig(**base, workers=1))
    parallel = await SearchService.scan(SearchConfig(**base, workers=2))
    assert serial.candidates_examined == parallel.candidates_examined == 300
    assert serial.hits == parallel.hits
    assert [(e.ordinal, e.fingerprint, e.fingerprint_hits) for e in serial.entries] == \
           [(e.ordinal, e.fingerprint, e.fingerprint_hits) for e in parallel.entries]


async def test_unreachable_targets_short_circuit():
    ledger = await SearchService.scan(SearchConfig(group="C3", ring="F4", target_d=20))
    assert ledger.entries == []
    assert ledger.candidates_examined == 0
    ledger = await SearchService.scan(SearchConfig(group="C3", ring="F4", target_n=40))
    assert ledger.candidates_examined == 0


async def test_budget_and_resume():
    cfg = SearchConfig(group="C3", ring="F4", max_candidates=50)
    ledger = await SearchService.scan(cfg)
    assert ledger.candidates_examined == 50
    assert ledger.resume_token == 50

    tail = await SearchService.scan(cfg.model_copy(update={"resume_from": 4090}))
    assert tail.candidates_examined == 6
    assert tail.resume_token is None


async def test_random_seed_is_drawn_and_reported():
    ledger = await SearchService.scan(SearchConfig(group="C7", ring="F2U", samples=5))
    assert ledger.config.seed is not None
    assert 0 <= ledger.config.seed < 2 ** 63


async def test_search_run_is_persisted(db_session):
    ledger = await SearchService.run(db_session, SearchConfig(group="C3", ring="F4", target_d=8, max_candidates=600))
    assert ledger.search_run_id is not None
    run = await crud.get_search_run(db_session, ledger.search_run_id)
    assert run.candidates_examined == 600
    assert run.resume_token == 600
    records = await crud.list_code_records(db_session, search_run_id=run.id)
    assert len(records) == len(ledger.entries)
    assert all(entry.record.id is not None for entry in ledger.entries)


# ===== COMMAND LINE =====

def test_cli_construct_and_verify(tmp_path, capsys):
    path = tmp_path / "c9.json"
    assert main.main(["construct", C9_ROW, "--output", str(path)]) == 0
    assert path.exists()
    assert "[40,20,8] Type I" in capsys.readouterr().out
    assert main.main(["verify", "--file", str(path)]) == 0


def test_cli_bad_input_exit_code():
    assert main.main(["construct", "C3 F2 (0,0,x,1) 100 000"]) == 2
    assert main.main(["construct", "--group", "C3"]) == 2
    assert main.main(["reproduce", "table42"]) == 2


def test_cli_reproduce_and_classify(tmp_path, capsys):
    assert main.main(["reproduce", "table3", "--json"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [row["status"] for row in reports[0]["rows"]] == ["PASS", "PASS", "PASS"]

    generator = tmp_path / "code.txt"
    assert main.main(["construct", C9_ROW, "--save-generator", str(generator)]) == 0
    capsys.readouterr()
    assert main.main(["minweight", "--file", str(generator), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"n": 40, "k": 20, "d": 8}


def test_cli_search_with_unreachable_target(capsys):
    assert main.main(["search", "--group", "C3", "--ring", "F4", "--target-d", "20", "--no-store"]) == 0
    assert "0 fingerprints" in capsys.readouterr().out
