import argparse
import asyncio
import sys
from contextlib import asynccontextmanager
from typing import Any, Awaitable, Callable

from loguru import logger
from sqlalchemy.ext.asyncio import AsyncSession, async_sessionmaker

from cli.handlers import codes, derive, reproduce, search
from config import config as settings
from database import SessionLocal, init_models

Handler = Callable[[argparse.Namespace, AsyncSession], Awaitable[int]]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="codes", description="Self-dual codes from group rings")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Register handlers
    codes.register(subparsers)
    derive.register(subparsers)
    search.register(subparsers)
    reproduce.register(subparsers)
    return parser


@asynccontextmanager
async def session_scope(sessionmaker: async_sessionmaker):
    """Commit on success, roll back on any error."""
    async with sessionmaker() as session:
        logger.debug("session_scope: opened session")
        try:
            yield session
            await session.commit()
        except Exception as e:
            await session.rollback()
            logger.error(f"session_scope: rolled back after {type(e).__name__}: {e}")
            raise


async def error_scope(handler: Handler, args: argparse.Namespace, session: AsyncSession) -> int:
    """Exit code 2 for bad input, 1 for anything unexpected."""
    try:
        result = await handler(args, session)
        logger.info(f"error_scope: {args.command} finished with exit code {result}")
        return result
    except ValueError as e:
        logger.error(f"error_scope: {args.command}: {type(e).__name__}: {e}")
        return 2
    except Exception as e:
        logger.exception(f"error_scope: unhandled exception in {args.command}: {e}")
        return 1


async def run(args: argparse.Namespace) -> int:
    await init_models()
    async with session_scope(SessionLocal) as session:
        return await error_scope(args.handler, args, session)


def main(argv: Any = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Setup logging
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if args.verbose else settings.log.level)

    return asyncio.run(run(args))


if __name__ == "__main__":
    sys.exit(main())
