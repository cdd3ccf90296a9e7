import json

from loguru import logger

from cli import emit
from codes.gray import GrayLayout
from services.schemas import SearchConfig
from services.search_service import SearchService

# flag name -> SearchConfig field
_FLAGS = ("group", "ring", "gamma_mode", "gamma", "v_mode", "samples", "seed", "workers", "target_n", "target_d",
          "family", "exhaustive_limit", "max_candidates", "resume_from", "layout")


def register(subparsers) -> None:
    search = subparsers.add_parser("search", help="sweep construction parameters for self-dual codes")
    search.add_argument("--config", help="JSON file with any of the flags below; flags win")
    search.add_argument("--group", help="C9, C3xC3, C3,3, ...")
    search.add_argument("--ring", help="F2, F2U, F4 or F4U")
    search.add_argument("--gamma-mode", choices=["exhaustive", "fixed"])
    search.add_argument("--gamma", help="(γ1,γ2,γ3,γ4) for --gamma-mode fixed")
    search.add_argument("--v-mode", choices=["auto", "exhaustive", "random"])
    search.add_argument("--samples", type=int, help="random candidates when not exhaustive")
    search.add_argument("--seed", type=int)
    search.add_argument("--workers", type=int, help="candidate-parallel processes")
    search.add_argument("--target-n", type=int)
    search.add_argument("--target-d", type=int, help="keep codes with d at least this")
    search.add_argument("--family", help="keep only this family, e.g. W64,2")
    search.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                        help="family parameter filter, repeatable")
    search.add_argument("--exhaustive-limit", type=int)
    search.add_argument("--max-candidates", type=int, help="budget; a resume token is reported when hit")
    search.add_argument("--resume-from", type=int)
    search.add_argument("--layout", choices=[layout.value for layout in GrayLayout])
    search.add_argument("--no-store", action="store_true", help="do not persist the run")
    search.add_argument("--json", action="store_true")
    search.set_defaults(handler=cmd_search)


def _params(pairs) -> dict:
    params = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"--param expects NAME=VALUE, got {pair!r}")
        params[name.strip()] = int(value)
    return params


def build_config(args) -> SearchConfig:
    overrides = {name: getattr(args, name) for name in _FLAGS}
    if args.param:
        overrides["params"] = _params(args.param)
    if args.config:
        return SearchConfig.from_file(args.config, **overrides)
    return SearchConfig.model_validate({key: value for key, value in overrides.items() if value is not None})


async def cmd_search(args, session) -> int:
    cfg = build_config(args)
    logger.info(f"cmd_search: {json.dumps(cfg.model_dump(mode='json'))}")
    ledger = await SearchService.run(None if args.no_store else session, cfg)
    lines = [f"{entry.gamma} {entry.v1} {entry.v2}  d={entry.fingerprint[2]} "
             f"{entry.record.profile.family or 'Type ' + entry.record.profile.type} "
             f"{entry.record.profile.params or ''} hits={entry.fingerprint_hits}"
             for entry in ledger.entries]
    lines.append(f"{len(ledger.entries)} fingerprints from {ledger.hits} hits over "
                 f"{ledger.candidates_examined} candidates")
    if ledger.resume_token is not None:
        lines.append(f"budget exhausted; resume with --resume-from {ledger.resume_token}")
    lines.append(ledger.note)
    emit(args, ledger.model_dump(mode="json"), "\n".join(lines))
    return 0
