import pytest

from codes.bincode import format_generator
from database import crud


async def test_code_record_lifecycle(db_session, hamming8):
    generator = format_generator(hamming8)
    row = await crud.create_code_record(db_session, kind="construction", provenance={"group": "C3"},
                                        generator=generator, label="h8", gray_chain="identity",
                                        gray_layout="block")
    assert row.id is not None
    assert row.self_dual is True
    assert row.created_at is not None

    fetched = await crud.get_code_record(db_session, row.id)
    assert fetched.generator == generator
    assert fetched.provenance == {"group": "C3"}

    updated = await crud.update_code_record(db_session, row.id, {"label": "extended hamming"})
    assert updated.label == "extended hamming"


async def test_missing_record(db_session):
    assert await crud.get_code_record_safe(db_session, 404) is None
    with pytest.raises(ValueError):
        await crud.get_code_record(db_session, 404)


async def test_parent_links_and_filters(db_session, hamming8):
    generator = format_generator(hamming8)
    base = await crud.create_code_record(db_session, kind="construction", provenance={}, generator=generator)
    child = await crud.create_code_record(db_session, kind="neighbor", provenance={"base_record": base.id},
                                          generator=generator, parent_id=base.id, self_dual=False)
    assert child.parent_id == base.id
    assert child.self_dual is False

    neighbors = await crud.list_code_records(db_session, kind="neighbor")
    assert [r.id for r in neighbors] == [child.id]
    assert len(await crud.list_code_records(db_session)) == 2


async def test_search_run_lifecycle(db_session, hamming8):
    run = await crud.create_search_run(db_session, config={"group": "C3", "ring": "F4"}, seed=7, workers=2)
    assert run.id is not None
    assert run.finished_at is None

    await crud.create_code_record(db_session, kind="construction", provenance={}, generator=format_generator(hamming8),
                                  search_run_id=run.id)
    records = await crud.list_code_records(db_session, search_run_id=run.id)
    assert len(records) == 1

    finished = await crud.finish_search_run(db_session, run.id, candidates_examined=4096, hits=3, resume_token=None)
    assert finished.candidates_examined == 4096
    assert finished.hits == 3
    assert finished.finished_at is not None

    with pytest.raises(ValueError):
        await crud.finish_search_run(db_session, 999, candidates_examined=0, hits=0)
