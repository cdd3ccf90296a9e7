from loguru import logger

from cli import add_compute_flags, add_source_flags, emit, load_code, load_record
from codes.bincode import min_weight, save_generator
from codes.gray import GrayChain, GrayLayout
from config import config
from services.pipeline_service import PipelineService, profile_code
from services.schemas import ManifestRow, WeightProfileModel


def register(subparsers) -> None:
    construct = subparsers.add_parser("construct", help="build, check and classify one construction")
    construct.add_argument("row", nargs="?", help='manifest line, e.g. "C9 F2 (0,0,0,1) 000000011 001110111"')
    construct.add_argument("--group")
    construct.add_argument("--ring")
    construct.add_argument("--gamma", help="(γ1,γ2,γ3,γ4)")
    construct.add_argument("--v1")
    construct.add_argument("--v2")
    construct.add_argument("--gray-chain", choices=[chain.value for chain in GrayChain])
    construct.add_argument("--layout", choices=[layout.value for layout in GrayLayout], default=config.gray.layout)
    construct.add_argument("--label")
    construct.add_argument("--output", help="also write the record as JSON")
    construct.add_argument("--save-generator", help="also write the binary generator in 'n k' format")
    add_compute_flags(construct)
    construct.set_defaults(handler=cmd_construct)

    verify = subparsers.add_parser("verify", help="recompute a stored record's weight profile")
    add_source_flags(verify)
    add_compute_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    minweight = subparsers.add_parser("minweight", help="exact minimum distance of a binary code")
    add_source_flags(minweight, generator_files=True)
    add_compute_flags(minweight)
    minweight.set_defaults(handler=cmd_minweight)

    classify = subparsers.add_parser("classify", help="low-weight enumerator and family parameters")
    add_source_flags(classify, generator_files=True)
    add_compute_flags(classify)
    classify.set_defaults(handler=cmd_classify)


def _manifest_row(args) -> ManifestRow:
    if args.row:
        return ManifestRow.from_line(args.row)
    fields = {name: getattr(args, name) for name in ("group", "ring", "gamma", "v1", "v2")}
    missing = [name for name, value in fields.items() if not value]
    if missing:
        raise ValueError(f"construct needs a manifest line or --{' --'.join(missing)}")
    return ManifestRow(**fields)


async def cmd_construct(args, session) -> int:
    row = _manifest_row(args)
    logger.info(f"cmd_construct: {row.as_line()}")
    chain = GrayChain(args.gray_chain) if args.gray_chain else None
    record = await PipelineService.construct(session, row, label=args.label, chain=chain,
                                             layout=GrayLayout(args.layout), workers=args.workers,
                                             ceiling=args.ceiling)
    if args.output:
        record.to_file(args.output)
    if args.save_generator:
        save_generator(record.code(), args.save_generator)
    profile = record.profile
    text = (f"record {record.id}: [{profile.n},{profile.k},{profile.d}] Type {profile.type}"
            f"{f' {profile.family} {profile.params}' if profile.family else ''}"
            f"{'' if record.self_dual else ' NOT SELF-DUAL'}")
    emit(args, record.model_dump(mode="json"), text)
    return 0 if record.self_dual else 1


async def cmd_verify(args, session) -> int:
    record = await load_record(args, session)
    result = PipelineService.verify(record, workers=args.workers, ceiling=args.ceiling)
    emit(args, result, f"record {record.id}: {'profile reproduced' if result['matches'] else 'PROFILE DIFFERS'}")
    return 0 if result["matches"] else 1


async def cmd_minweight(args, session) -> int:
    code = await load_code(args, session)
    d = min_weight(code, workers=args.workers, keep_level_limit=config.enumeration.keep_level_limit)
    emit(args, {"n": code.n, "k": code.k, "d": d}, f"[{code.n},{code.k},{d}]")
    return 0


async def cmd_classify(args, session) -> int:
    code = await load_code(args, session)
    profile = WeightProfileModel.from_profile(profile_code(code, workers=args.workers, ceiling=args.ceiling))
    low = ", ".join(f"A{w}={c}" for w, c in sorted(profile.counts.items()) if w and c)
    emit(args, profile.model_dump(mode="json"),
         f"[{profile.n},{profile.k},{profile.d}] Type {profile.type} {profile.family or ''} "
         f"{profile.params or ''} {low}".strip())
    return 0
