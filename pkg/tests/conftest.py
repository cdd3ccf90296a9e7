import asyncio
import os
import tempfile

import numpy as np
import pytest
import pytest_asyncio
from sqlalchemy.ext.asyncio import create_async_engine, async_sessionmaker

# Use in-memory SQLite for tests
TEST_DATABASE_URL = "sqlite+aiosqlite:///:memory:"

# CLI runs open fresh connections per session, so they need a file database
CLI_DATABASE_PATH = os.path.join(tempfile.mkdtemp(prefix="codes-tests-"), "codes.db")

os.environ["CODES_DB_URL"] = f"sqlite+aiosqlite:///{CLI_DATABASE_PATH}"
os.environ["CODES_WORKERS"] = "1"
os.environ["CODES_WEIGHT_CEILING"] = "16"
os.environ["CODES_GRAY_LAYOUT"] = "block"

from codes.bincode import BinaryCode  # noqa: E402
from codes.derive import NeighborSpec, neighbor  # noqa: E402
from database.models import Base  # noqa: E402

EXTENDED_HAMMING = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]


@pytest.fixture(scope="session")
def event_loop():
    """Create an instance of the default event loop for each test case."""
    loop = asyncio.get_event_loop_policy().new_event_loop()
    yield loop
    loop.close()


@pytest_asyncio.fixture(scope="function")
async def db_engine():
    engine = create_async_engine(TEST_DATABASE_URL, echo=False)

    async with engine.begin() as conn:
        await conn.run_sync(Base.metadata.create_all)

    yield engine

    async with engine.begin() as conn:
        await conn.run_sync(Base.metadata.drop_all)
    await engine.dispose()


@pytest_asyncio.fixture(scope="function")
async def db_session(db_engine):
    async_session = async_sessionmaker(db_engine, expire_on_commit=False)
    async with async_session() as session:
        yield session
        await session.rollback()


@pytest.fixture
def hamming8() -> BinaryCode:
    """Extended Hamming [8,4,4], self-dual Type II."""
    return BinaryCode(np.array(EXTENDED_HAMMING, dtype=np.uint8))


def random_self_dual(n: int, rng: np.random.Generator, steps: int = 6) -> BinaryCode:
    """Self-dual code of length n (n % 2 == 0) reached by random neighbor steps from i2^(n/2)."""
    pair = np.array([[1, 1]], dtype=np.uint8)
    rows = np.kron(np.eye(n // 2, dtype=np.uint8), pair)
    code = BinaryCode(rows)
    for _ in range(steps):
        x = rng.integers(0, 2, size=n).astype(np.uint8)
        if int(x.sum()) % 2:
            x[int(rng.integers(0, n))] ^= 1
        if code.contains(x):
            continue
        code = neighbor(NeighborSpec(code, x))
    return code


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture
def self_dual_factory(rng):
    return lambda n, steps=6: random_self_dual(n, rng, steps)
