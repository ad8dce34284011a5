import argparse

from app.cli.schemas import CliConfig, ReduceResponse
from app.cli.services import reduce_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("reduce", parents=parents, help="trace of a word in x, y as a polynomial in X, Y, Z")
    parser.add_argument("word", help='space separated syllables, e.g. "x y x^-1 y^-1"')
    parser.add_argument("--check", action="store_true", help="compare against random SL(2,C) matrices")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> ReduceResponse:
    return reduce_service(args.word, args.check, config)
