import argparse
import logging
import os
import pathlib
import sys
from typing import Optional
from typing import Sequence

import coloredlogs

from cubic_fermat_playground.cli.classify_controller import ClassifyController
from cubic_fermat_playground.cli.clear_controller import ClearController
from cubic_fermat_playground.cli.output import CommandResult
from cubic_fermat_playground.cli.output import error_result
from cubic_fermat_playground.cli.reduce_controller import ReduceController
from cubic_fermat_playground.cli.reference_controller import ReferenceController
from cubic_fermat_playground.cli.solve_controller import SolveController
from cubic_fermat_playground.cli.sweep_controller import SweepController
from cubic_fermat_playground.cli.sweep_controller import SWEEPS
from cubic_fermat_playground.cli.transform_controller import DIRECTIONS
from cubic_fermat_playground.cli.transform_controller import TransformController
from cubic_fermat_playground.cli.verify_controller import VerifyController
from cubic_fermat_playground.core.config import get_config
from cubic_fermat_playground.core.config import get_search_bounds
from cubic_fermat_playground.core.config import get_workers
from cubic_fermat_playground.core.exceptions import PlaygroundError
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.exceptions import RemoteLookupError
from cubic_fermat_playground.core.exceptions import VerificationError
from cubic_fermat_playground.core.search import SearchBounds


logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def exit_code_for(error: PlaygroundError) -> int:
    if isinstance(error, VerificationError):
        return EXIT_VERIFICATION
    if isinstance(error, (PreconditionError, RemoteLookupError)):
        return EXIT_PRECONDITION
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = ArgumentParser(
        description="Nontrivial solutions of x³+y³=kz³ over quadratic fields "
        "through rational points on Mordell curves."
    )
    parser.set_defaults(func=None, command=None)
    parser.add_argument("--basedir", type=pathlib.Path, default=pathlib.Path.cwd())
    parser.add_argument(
        "--loglevel",
        choices=["debug", "info", "warning", "error", "critical"],
        default="warning",
    )
    parser.add_argument("--json", action="store_true", help="Print a JSON document.")

    output_options = ArgumentParser(add_help=False)
    output_options.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS
    )
    parameter_options = ArgumentParser(add_help=False, parents=[output_options])
    parameter_options.add_argument("--d", type=int, required=True)
    parameter_options.add_argument("--k", type=int, default=1)

    subparsers = parser.add_subparsers(
        description="The tools are organized in subcommands.", metavar="Command"
    )

    subparser = subparsers.add_parser(
        "classify",
        parents=[parameter_options],
        help="Torsion, root numbers and known facts for (d, k).",
    )
    subparser.set_defaults(
        command="classify",
        func=lambda options: ClassifyController().render(options.d, options.k),
    )

    subparser = subparsers.add_parser(
        "solve",
        parents=[parameter_options],
        help="Search for a witness and report the verdict.",
    )
    subparser.add_argument("--max-denom", type=int)
    subparser.add_argument("--max-height", type=int)
    subparser.add_argument("--workers", type=int)
    subparser.set_defaults(
        command="solve",
        func=lambda options: SolveController(
            make_search_bounds(options),
            get_workers() if options.workers is None else options.workers,
        ).render(options.d, options.k),
    )

    subparser = subparsers.add_parser(
        "transform",
        parents=[parameter_options],
        help="Map solutions and points into each other.",
    )
    subparser.add_argument("direction", choices=DIRECTIONS)
    subparser.add_argument("elements", nargs="*", metavar="ELEMENT")
    subparser.add_argument("--x")
    subparser.add_argument("--y")
    subparser.set_defaults(
        command="transform",
        func=lambda options: TransformController().render(
            options.direction,
            options.d,
            options.k,
            elements=options.elements,
            x=options.x,
            y=options.y,
        ),
    )

    subparser = subparsers.add_parser(
        "verify",
        parents=[parameter_options],
        help="Check a claimed solution or point.",
    )
    subparser.add_argument("elements", nargs="*", metavar="ELEMENT")
    subparser.add_argument("--x")
    subparser.add_argument("--y")
    subparser.add_argument("--over", choices=["q", "k"], default="q")
    subparser.set_defaults(command="verify", func=run_verify)

    subparser = subparsers.add_parser(
        "clear-denominators",
        parents=[parameter_options],
        help="Scale a solution into the ring of integers.",
    )
    subparser.add_argument("elements", nargs=3, metavar="ELEMENT")
    subparser.set_defaults(
        command="clear-denominators",
        func=lambda options: ClearController().render(
            options.d, options.k, options.elements
        ),
    )

    subparser = subparsers.add_parser(
        "reference",
        parents=[output_options],
        help="Embedded curve facts, optionally checked against the LMFDB.",
    )
    subparser.add_argument("--d", type=int)
    subparser.add_argument("--k", type=int, default=1)
    subparser.add_argument("--label")
    subparser.add_argument("--online", action="store_true")
    subparser.set_defaults(
        command="reference",
        func=lambda options: ReferenceController(
            options.online or get_config()["reference"]["online"]
        ).render(options.d, options.k, options.label),
    )

    subparser = subparsers.add_parser(
        "sweep",
        parents=[output_options],
        help="Exhaustive consistency checks of torsion and root numbers.",
    )
    subparser.add_argument("kind", choices=SWEEPS)
    subparser.add_argument("--limit", type=int)
    subparser.set_defaults(
        command="sweep",
        func=lambda options: SweepController().render(options.kind, options.limit),
    )

    subparser = subparsers.add_parser(
        "reduce",
        parents=[output_options],
        help="Rewrite ax³+ay³=cz³ as x³+y³=kz³.",
    )
    subparser.add_argument("--a", required=True)
    subparser.add_argument("--c", required=True)
    subparser.set_defaults(
        command="reduce",
        func=lambda options: ReduceController().render(options.a, options.c),
    )

    options = parser.parse_args(argv)
    coloredlogs.install(
        fmt="%(asctime)s %(name)s %(levelname)s %(message)s",
        level=options.loglevel.upper(),
    )
    if options.func is None:
        parser.print_help()
        return EXIT_USAGE

    os.chdir(options.basedir)
    try:
        document = options.func(options)
        result = CommandResult(options.command, document, status_for(document))
    except PlaygroundError as e:
        logger.debug(f"{options.command} failed with {type(e).__name__}.")
        result = error_result(options.command, e, exit_code_for(e))

    if options.json:
        print(result.to_json())
    elif result.status == 0:
        print(result.to_text(), end="")
    else:
        print(result.to_text(), end="", file=sys.stderr)
    return result.status


def status_for(document: dict) -> int:
    if document.get("ok") is False:
        return EXIT_VERIFICATION
    return 0


def make_search_bounds(options: argparse.Namespace) -> SearchBounds:
    configured = get_search_bounds()
    return SearchBounds(
        configured.max_denominator
        if options.max_denom is None
        else options.max_denom,
        configured.max_height if options.max_height is None else options.max_height,
    )


def run_verify(options: argparse.Namespace) -> dict:
    controller = VerifyController()
    if options.elements:
        return controller.render_solution(options.d, options.k, options.elements)
    return controller.render_point(
        options.d, options.k, options.x, options.y, options.over
    )


if __name__ == "__main__":
    sys.exit(main())
