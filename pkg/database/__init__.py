from sqlalchemy.ext.asyncio import AsyncEngine, AsyncSession, async_sessionmaker, create_async_engine
from sqlalchemy.pool import NullPool

from config import config
from database.models import Base


def build_engine(url: str) -> AsyncEngine:
    # search workers are separate processes; no pooled connections survive a fork
    return create_async_engine(url, echo=False, poolclass=NullPool)


# Engine and session factory for the code record store
async_engine = build_engine(config.db.get_url())
SessionLocal = async_sessionmaker(async_engine, class_=AsyncSession, expire_on_commit=False)


async def init_models(engine: AsyncEngine = async_engine) -> None:
    """Create the code_records and search_runs tables if missing."""
    async with engine.begin() as conn:
        await conn.run_sync(Base.metadata.create_all)
