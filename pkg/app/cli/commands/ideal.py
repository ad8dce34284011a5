import argparse

from app.cli.schemas import CliConfig, IdealResponse
from app.cli.services import ideal_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("ideal", parents=parents, help="generators of J, I1, I2, I3")
    parser.add_argument("-m", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> IdealResponse:
    return ideal_service(args.m, args.n, config)
