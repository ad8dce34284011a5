import argparse

from app.cli.schemas import CliConfig, MirrorResponse
from app.cli.services import mirror_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("mirror", parents=parents, help="mirror images of J and the intersection count")
    parser.add_argument("-m", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> MirrorResponse:
    return mirror_service(args.m, args.n, config)
