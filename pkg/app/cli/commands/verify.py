import argparse

from app.cli.schemas import CliConfig, VerifyResponse
from app.cli.services import verify_service
from app.core.config import get_settings


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="identity and numeric suites by section")
    parser.add_argument("-m", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.add_argument("--section", action="append", default=[], help="2, 3, 4, 5, 6, 7, 8, appendix or all (repeatable)")
    parser.add_argument("--all", action="store_true", help="same as --section all")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> VerifyResponse:
    sections = list(args.section) + (["all"] if args.all else [])
    return verify_service(sections, args.m, args.n, config, get_settings())
