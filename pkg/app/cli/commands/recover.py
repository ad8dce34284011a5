import argparse

from app.cli.schemas import CliConfig, RecoverResponse
from app.cli.services import recover_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("recover", parents=parents, help="recover (m, n) from an intersection matrix")
    parser.add_argument("--matrix", required=True, help="JSON rows, e.g. '[[1,6],[6,1]]'")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> RecoverResponse:
    return recover_service(args.matrix)
