import json
from typing import Any, Optional

from sqlalchemy.ext.asyncio import AsyncSession

from codes.bincode import BinaryCode, load_generator
from config import config
from services.pipeline_service import PipelineService
from services.schemas import CodeRecord


def add_compute_flags(parser) -> None:
    parser.add_argument("--workers", type=int, default=config.enumeration.workers,
                        help="threads for weight enumeration (env CODES_WORKERS)")
    parser.add_argument("--ceiling", type=int, default=config.enumeration.weight_ceiling,
                        help="largest weight counted without refusing")
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def add_source_flags(parser, generator_files: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--record", type=int, help="code record id in the database")
    group.add_argument("--file", help="code record JSON file" + (" or 'n k' generator file" if generator_files else ""))


def emit(args, payload: Any, text: Optional[str] = None) -> None:
    if getattr(args, "json", False) or text is None:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


async def load_record(args, session: Optional[AsyncSession]) -> CodeRecord:
    return await PipelineService.load_record(session, record_id=args.record, path=args.file)


async def load_code(args, session: Optional[AsyncSession]) -> BinaryCode:
    """Binary code from a record id, a record JSON file or a bare generator file."""
    if args.file is not None and not args.file.endswith(".json"):
        return load_generator(args.file)
    return (await load_record(args, session)).code()
