import argparse
import logging
import sys
from typing import List, Optional, TextIO

from app.cli.commands import family, ideal, mirror, planar, recover, reduce, repvar, trace_poly, variety, verify
from app.cli.render import render
from app.cli.services import build_config
from app.core.config import get_settings
from app.core.errors import CharVarError, InvariantViolation, UsageError

logger = logging.getLogger(__name__)

COMMANDS = [family, trace_poly, reduce, ideal, variety, recover, repvar, mirror, planar, verify]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--seed", type=int)
    common.add_argument("--tol", type=float)
    common.add_argument("--window", type=int)

    parser = _Parser(
        prog="charvar",
        description="SL(2,C) character and representation varieties of <x, y | x^m = y^n>",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers, [common])
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    settings = get_settings()
    _configure_logging(settings.log_level)
    try:
        args = build_parser().parse_args(argv)
        config = build_config(args, settings)
        result = args.handler(args, config)
        text = result if isinstance(result, str) else render(result, config.format)
    except CharVarError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UsageError.exit_code
    except RecursionError:
        print("error: input nests too deeply to evaluate", file=sys.stderr)
        return UsageError.exit_code
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0

    out.write(text if text.endswith("\n") else text + "\n")
    if not getattr(result, "passed", True):
        logger.warning("%s reported failing checks", config.command)
        return InvariantViolation.exit_code
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
