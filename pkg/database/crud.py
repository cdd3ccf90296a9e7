from datetime import datetime
from sqlalchemy import select, update
from sqlalchemy.ext.asyncio import AsyncSession
from typing import List, Optional, Dict, Any

from loguru import logger

from database.models import CodeRecordRow, SearchRun


# Code record CRUD operations
async def create_code_record(session: AsyncSession, kind: str, provenance: Dict[str, Any], generator: str,
                             label: Optional[str] = None, profile: Optional[Dict[str, Any]] = None,
                             gray_chain: Optional[str] = None, gray_layout: Optional[str] = None,
                             parent_id: Optional[int] = None, search_run_id: Optional[int] = None,
                             self_dual: bool = True) -> CodeRecordRow:
    """Create a new code record"""
    row = CodeRecordRow(
        kind=kind,
        label=label,
        provenance=provenance,
        generator=generator,
        self_dual=self_dual,
        profile=profile,
        gray_chain=gray_chain,
        gray_layout=gray_layout,
        parent_id=parent_id,
        search_run_id=search_run_id,
    )
    session.add(row)
    await session.commit()
    await session.refresh(row)
    logger.info(f"create_code_record: stored {kind} record id={row.id} label={label}")
    return row


async def get_code_record_safe(session: AsyncSession, record_id: int) -> Optional[CodeRecordRow]:
    """Get code record by ID without raising an exception if not found"""
    result = await session.execute(select(CodeRecordRow).where(CodeRecordRow.id == record_id))
    return result.scalars().first()


async def get_code_record(session: AsyncSession, record_id: int) -> CodeRecordRow:
    """Get code record by ID, raises ValueError if not found"""
    row = await get_code_record_safe(session, record_id)
    if row is None:
        logger.error(f"get_code_record: record {record_id} not found")
        raise ValueError(f"Code record {record_id} not found")
    return row


async def list_code_records(session: AsyncSession, kind: Optional[str] = None,
                            search_run_id: Optional[int] = None) -> List[CodeRecordRow]:
    """List code records, oldest first"""
    query = select(CodeRecordRow).order_by(CodeRecordRow.id)
    if kind is not None:
        query = query.where(CodeRecordRow.kind == kind)
    if search_run_id is not None:
        query = query.where(CodeRecordRow.search_run_id == search_run_id)
    result = await session.execute(query)
    return list(result.scalars().all())


async def update_code_record(session: AsyncSession, record_id: int, data: Dict[str, Any]) -> CodeRecordRow:
    """Update code record fields"""
    await session.execute(
        update(CodeRecordRow)
        .where(CodeRecordRow.id == record_id)
        .values(**data)
    )
    await session.commit()
    row = await get_code_record(session, record_id)
    await session.refresh(row)
    return row


# Search run CRUD operations
async def create_search_run(session: AsyncSession, config: Dict[str, Any], seed: Optional[int] = None,
                            workers: int = 1) -> SearchRun:
    """Create a new search run"""
    run = SearchRun(config=config, seed=seed, workers=workers)
    session.add(run)
    await session.commit()
    await session.refresh(run)
    return run


async def get_search_run(session: AsyncSession, run_id: int) -> Optional[SearchRun]:
    """Get search run by ID"""
    result = await session.execute(select(SearchRun).where(SearchRun.id == run_id))
    return result.scalars().first()


async def finish_search_run(session: AsyncSession, run_id: int, candidates_examined: int, hits: int,
                            resume_token: Optional[int] = None) -> SearchRun:
    """Record the outcome of a search run"""
    await session.execute(
        update(SearchRun)
        .where(SearchRun.id == run_id)
        .values(
            candidates_examined=candidates_examined,
            hits=hits,
            resume_token=resume_token,
            finished_at=datetime.utcnow(),
        )
    )
    await session.commit()
    run = await get_search_run(session, run_id)
    if run is None:
        raise ValueError(f"Search run {run_id} not found")
    await session.refresh(run)
    return run
