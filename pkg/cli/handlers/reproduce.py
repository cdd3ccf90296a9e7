from loguru import logger

from cli import emit
from codes.gray import GrayLayout
from config import config
from services.reproduce_service import ReproduceService
from services.tables_data import TABLE_IDS


def register(subparsers) -> None:
    reproduce = subparsers.add_parser("reproduce", help="re-derive a published table and compare every row")
    reproduce.add_argument("tables", nargs="+", help=f"table ids ({', '.join(TABLE_IDS)}) or 'all'")
    reproduce.add_argument("--rows", type=int, nargs="+", help="only these 1-based rows")
    reproduce.add_argument("--layout", choices=[layout.value for layout in GrayLayout], default=config.gray.layout,
                           help="Gray layout for construction tables")
    reproduce.add_argument("--workers", type=int, default=config.enumeration.workers)
    reproduce.add_argument("--ceiling", type=int, default=config.enumeration.weight_ceiling)
    reproduce.add_argument("--json", action="store_true")
    reproduce.set_defaults(handler=cmd_reproduce)


def _row_line(row) -> str:
    extra = []
    if row.amended:
        extra.append("amended")
    if row.interpretation:
        extra.append(row.interpretation)
    if row.status != "PASS" and row.message:
        extra.append(row.message)
    observed = row.observed
    if "n" in observed:
        shape = (f"[{observed['n']},{observed['k']},{observed['d']}] "
                 f"{observed.get('family') or 'Type ' + observed['type']} {observed.get('params') or ''}")
    elif observed:
        shape = "not self-dual "
    else:
        shape = ""
    return f"  row {row.row:>2}: {row.status}  {shape}{'  (' + '; '.join(extra) + ')' if extra else ''}"


async def cmd_reproduce(args, session) -> int:
    tables = list(TABLE_IDS) if args.tables == ["all"] else [name.lower() for name in args.tables]
    reports = []
    for table in tables:
        logger.info(f"cmd_reproduce: {table}")
        reports.append(await ReproduceService.reproduce(table, rows=args.rows, layout=GrayLayout(args.layout),
                                                        workers=args.workers, ceiling=args.ceiling))
    lines = []
    for report in reports:
        lines.append(f"{report.table} ({report.title})")
        lines.extend(_row_line(row) for row in report.rows)
        lines.append(f"  {report.summary()}")
    emit(args, [report.model_dump(mode="json") for report in reports], "\n".join(lines))
    return max((report.exit_code for report in reports), default=0)
