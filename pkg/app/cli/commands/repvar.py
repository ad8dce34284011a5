import argparse

from app.cli.schemas import CliConfig, RepVarResponse
from app.cli.services import repvar_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("repvar", parents=parents, help="components of the representation variety")
    parser.add_argument("-m", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> RepVarResponse:
    return repvar_service(args.m, args.n)
