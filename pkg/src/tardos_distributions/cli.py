"""
Command line entry point: one subcommand per command, arguments generated from the command input schemas.
"""

import sys
import types
import typing
import logging
import argparse

from pydantic import ValidationError

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.errors import TardosError
from tardos_distributions.common.states import RunConfig
from tardos_distributions.commands import (
    DistCommand,
    CdfCommand,
    MuCommand,
    SweepCommand,
    ConvergeCommand,
    ParamsCommand,
    SimulateCommand,
    NotebookCommand,
)


logger = logging.getLogger(__name__)


dist_command = DistCommand()
cdf_command = CdfCommand()
mu_command = MuCommand()
sweep_command = SweepCommand()
converge_command = ConvergeCommand()
params_command = ParamsCommand()
simulate_command = SimulateCommand()
notebook_command = NotebookCommand()

commands_map = {
    dist_command.name : dist_command,
    cdf_command.name : cdf_command,
    mu_command.name : mu_command,
    sweep_command.name : sweep_command,
    converge_command.name : converge_command,
    params_command.name : params_command,
    simulate_command.name : simulate_command,
    notebook_command.name : notebook_command,
}


EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_UNUSABLE = 4
EXIT_IO = 5

EXIT_CODES = {
    TardosError.TardosErrorType.INVALID_INPUT: EXIT_USAGE,
    TardosError.TardosErrorType.MISSING_ARGS: EXIT_USAGE,
    TardosError.TardosErrorType.INVALID_ARGS: EXIT_USAGE,
    TardosError.TardosErrorType.NUMERICAL_FAILURE: EXIT_NUMERICAL,
    TardosError.TardosErrorType.NON_INTEGRABLE: EXIT_NUMERICAL,
    TardosError.TardosErrorType.UNUSABLE_CONFIGURATION: EXIT_UNUSABLE,
    TardosError.TardosErrorType.IO_FAILURE: EXIT_IO,
}

SHARED_ARGS = ('output', 'format', 'seed', 'jobs')



# REGION: [Parser]

def _integer(value: str) -> int:
    # DOC: accepts 0x-prefixed seeds
    return int(value, 0)


def _value_type(annotation):
    # DOC: lists stay strings, split by the schema validators
    options = typing.get_args(annotation) if typing.get_origin(annotation) in (typing.Union, types.UnionType) else (annotation,)
    if int in options:
        return _integer
    if float in options:
        return float
    return str


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=N.PACKAGE, description="Tardos fingerprinting bias distributions and code length analysis.")
    subparsers = parser.add_subparsers(dest='subcommand', required=True)

    for name, command in commands_map.items():
        subparser = subparsers.add_parser(name, help=command.description, description=command.description)
        for arg, schema in command.args_schema.model_fields.items():
            subparser.add_argument(
                f"--{arg.replace('_', '-')}",
                dest = arg,
                type = _value_type(schema.annotation),
                default = None,
                required = False,
                help = schema.description,
            )
        subparser.add_argument(
            "--log-level",
            dest = 'log_level',
            default = None,
            choices = ['DEBUG', 'INFO', 'WARNING', 'ERROR'],
            type = str.upper,
            help = f"Log verbosity on stderr. Default is ${N.LOG_LEVEL_ENV} or {N.DEFAULT_LOG_LEVEL}.",
        )
    return parser

# ENDREGION: [Parser]



# REGION: [Run]

def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exit:
        return int(exit.code or 0)

    raw_args = vars(namespace)
    subcommand = raw_args.pop('subcommand')
    log_level = raw_args.pop('log_level')
    utils.setup_logging(log_level)

    try:
        config = RunConfig(
            subcommand = subcommand,
            command_args = {arg: value for arg, value in raw_args.items() if arg not in SHARED_ARGS and value is not None},
            output = raw_args['output'],
            format = raw_args['format'],
            seed = raw_args['seed'] if raw_args['seed'] is not None else N.DEFAULT_SEED,
            jobs = raw_args['jobs'] if raw_args['jobs'] is not None else 1,
            log_level = log_level,
        )
    except ValidationError as error:
        print(f"{subcommand}: invalid arguments: {'; '.join(e['msg'] for e in error.errors())}", file=sys.stderr)
        return EXIT_USAGE

    try:
        output = commands_map[config.subcommand].run(config.as_command_args())
    except TardosError as error:
        logger.debug("%s failed: %s", config.subcommand, error.as_dict)
        print(f"{config.subcommand}: {error.type}: {error.message}", file=sys.stderr)
        return EXIT_CODES.get(error.type, EXIT_USAGE)

    print(f"{config.subcommand}: {output.summary} -> {output.artifact}")
    return 0


def main():
    sys.exit(run())

# ENDREGION: [Run]


if __name__ == "__main__":
    main()
