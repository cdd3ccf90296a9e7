from loguru import logger

from cli import add_compute_flags, add_source_flags, emit, load_record
from codes.derive import CoordinateFrame
from codes.gray import GrayLayout
from config import config
from services.pipeline_service import PipelineService


def register(subparsers) -> None:
    extend = subparsers.add_parser("extend", help="length n+2 extension of a stored F2 / F2+uF2 / F4+uF4 code")
    add_source_flags(extend)
    extend.add_argument("--c", required=True, help="unit c of the ring, e.g. 1 or u+1")
    extend.add_argument("--x", required=True, help="vector X with <X,X> = 1")
    extend.add_argument("--layout", choices=[layout.value for layout in GrayLayout], default=config.gray.layout)
    extend.add_argument("--label")
    extend.add_argument("--output", help="also write the record as JSON")
    add_compute_flags(extend)
    extend.set_defaults(handler=cmd_extend)

    neighbor = subparsers.add_parser("neighbor", help="neighbor <<x>^perp ∩ C, x> of a stored binary code")
    add_source_flags(neighbor)
    neighbor.add_argument("--x", required=True, help="0/1 vector, optionally without its zero prefix")
    neighbor.add_argument("--zero-prefix", type=int, default=0, help="number of zeros prepended to x")
    neighbor.add_argument("--frame", choices=[frame.value for frame in CoordinateFrame],
                          default=CoordinateFrame.STANDARD.value,
                          help="standard: x is given in the [I|A] coordinates of the code")
    neighbor.add_argument("--label")
    neighbor.add_argument("--output", help="also write the record as JSON")
    add_compute_flags(neighbor)
    neighbor.set_defaults(handler=cmd_neighbor)


def _summary(record) -> str:
    profile = record.profile
    return (f"record {record.id}: [{profile.n},{profile.k},{profile.d}] Type {profile.type}"
            f"{f' {profile.family} {profile.params}' if profile.family else ''}"
            f"{'' if record.self_dual else ' NOT SELF-DUAL'}")


async def cmd_extend(args, session) -> int:
    base = await load_record(args, session)
    logger.info(f"cmd_extend: base record {base.id}, c={args.c}")
    record = await PipelineService.extend(session, base, args.c, args.x, layout=GrayLayout(args.layout),
                                          label=args.label, workers=args.workers, ceiling=args.ceiling)
    if args.output:
        record.to_file(args.output)
    emit(args, record.model_dump(mode="json"), _summary(record))
    return 0 if record.self_dual else 1


async def cmd_neighbor(args, session) -> int:
    base = await load_record(args, session)
    logger.info(f"cmd_neighbor: base record {base.id}, frame={args.frame}")
    record = await PipelineService.neighbor(session, base, args.x, zero_prefix=args.zero_prefix,
                                            frame=CoordinateFrame(args.frame), label=args.label,
                                            workers=args.workers, ceiling=args.ceiling)
    if args.output:
        record.to_file(args.output)
    emit(args, record.model_dump(mode="json"), _summary(record))
    return 0 if record.self_dual else 1
