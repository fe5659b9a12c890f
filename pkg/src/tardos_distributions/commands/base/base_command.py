import logging
import os

from pydantic import BaseModel, Field, ValidationError

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.errors import TardosError

from .command_output import CommandOutput


logger = logging.getLogger(__name__)


OUTPUT_FORMATS = (N.FORMAT_CSV, N.FORMAT_JSON, N.FORMAT_IPYNB)


# DOC: Arguments shared by every command
class CommandSchema(BaseModel):

    output: None | str = Field(
        title = "Output",
        description = "Path of the artifact to write. If not specified use <command>.<format> in the working directory.",
        examples = [None, "sweep.csv", "/tmp/converge.json"],
        default = None
    )
    format: None | str = Field(
        title = "Format",
        description = "Artifact format: csv, json or ipynb. If not specified it is taken from the output extension, else the command default.",
        examples = [None, N.FORMAT_CSV, N.FORMAT_JSON],
        default = None
    )
    seed: int = Field(
        title = "Seed",
        description = f"Root seed of every random stream. Default is {N.DEFAULT_SEED:#x}.",
        examples = [N.DEFAULT_SEED, 1],
        default = N.DEFAULT_SEED
    )
    jobs: int = Field(
        title = "Jobs",
        description = "Worker processes for sweeps and simulations. Results do not depend on it.",
        examples = [1, 4],
        default = 1
    )


# DOC: This is a base command: typed arguments, then required, validation and inference steps, then execution
class BaseCommand:

    name: str = None
    description: str = None
    args_schema: type[CommandSchema] = None
    default_format: str = N.FORMAT_CSV
    formats: tuple = (N.FORMAT_CSV, N.FORMAT_JSON)

    output: CommandOutput = None

    # DOC: Setup specific command with a given name, description and args_schema
    def __init__(self, name: str, description: str, args_schema: type[CommandSchema]):
        self.name = name
        self.description = description
        self.args_schema = args_schema

    # DOC: Coerce raw values (strings from the cli, python values from callers) to the schema types
    def parse_args(self, command_args: dict) -> dict:
        fields = self.args_schema.model_fields
        unknown_args = [arg for arg in command_args if arg not in fields]
        if len(unknown_args) > 0:
            raise TardosError(
                self.name,
                TardosError.TardosErrorType.INVALID_ARGS,
                f"Unknown arguments: {unknown_args}.",
                {"invalid_args": {arg: "unknown argument" for arg in unknown_args}}
            )
        raw_args = {arg: command_args.get(arg) for arg, schema in fields.items() if arg in command_args or schema.is_required()}
        raw_args = {arg: value for arg, value in raw_args.items() if value is not None or fields[arg].is_required()}
        try:
            return self.args_schema.model_validate(raw_args).model_dump()
        except ValidationError as error:
            invalid_args = {".".join(str(loc) for loc in e["loc"]): e["msg"] for e in error.errors()}
            raise TardosError(
                self.name,
                TardosError.TardosErrorType.INVALID_ARGS,
                f"Invalid arguments: {list(invalid_args.keys())}.",
                {"invalid_args": invalid_args}
            )

    # DOC: Check missing arguments based on the args_schema (if Default is unset then it's required)
    def check_required_args(self, command_args):
        missing_args = [arg for arg, schema in self.args_schema.model_fields.items() if schema.is_required() and command_args[arg] is None]

        if len(missing_args) > 0:
            raise TardosError(
                self.name,
                TardosError.TardosErrorType.MISSING_ARGS,
                f"Missing required arguments: {missing_args}.",
                {"missing_args": missing_args}
            )

    # DOC: Check invalid arguments based on a list of function related to each argument { argname: [ test(**command_args) -> Invalid-Reason else None , ... ], ... }
    def _set_args_validation_rules(self) -> dict:
        return {
            'format': [
                lambda **ka: f"Invalid format: {ka['format']}. It should be one of {list(self.formats)}."
                    if ka['format'] is not None and ka['format'] not in self.formats else None
            ],
            'jobs': [
                lambda **ka: f"Invalid jobs: {ka['jobs']}. It should be at least 1."
                    if ka['jobs'] < 1 else None
            ],
            'seed': [
                lambda **ka: f"Invalid seed: {ka['seed']}. It should be a non-negative integer."
                    if ka['seed'] < 0 else None
            ],
        }

    def check_validation_rules(self, command_args):
        args_validation_rules = self._set_args_validation_rules()

        invalid_args = dict()

        for arg in self.args_schema.model_fields.keys():
            for rule in args_validation_rules.get(arg, []):
                invalid_reason = rule(**command_args)
                if invalid_reason is not None:
                    invalid_args[arg] = invalid_reason
                    break

        if len(invalid_args) > 0:
            raise TardosError(
                self.name,
                TardosError.TardosErrorType.INVALID_ARGS,
                f"Invalid arguments: {list(invalid_args.keys())}. " + " ".join(invalid_args.values()),
                {"invalid_args": invalid_args}
            )

    # DOC: Infer argument values based on current provided values and one function related to argument { argname: infer(**command_args) -> inferred_value , ... }
    def _set_args_inference_rules(self) -> dict:

        def infer_format(**ka):
            if ka['format'] is None:
                extension = utils.justext(ka['output']) if ka['output'] is not None else ""
                return extension if extension in self.formats else self.default_format
            return ka['format']

        def infer_output(**ka):
            if ka['output'] is None:
                return f"{self.name}.{ka['format']}"
            return utils.normpath(ka['output'])

        return {
            'format': infer_format,
            'output': infer_output,
        }

    def infer_args(self, command_args):
        args_inference_rules = self._set_args_inference_rules()
        # DOC: format first, output path depends on it
        for arg in ['format', *self.args_schema.model_fields.keys()]:
            if arg in args_inference_rules and args_inference_rules[arg] is not None:
                command_args[arg] = args_inference_rules[arg](**command_args)

    # DOC: Command execution, what this returns will be set as command.output so this should be overridden by the subclass
    def _execute(self, **command_args) -> CommandOutput:
        return None

    # DOC: Run command with the given arguments: validation and inference, execution, artifact
    def run(self, command_args: dict, write: bool = True) -> CommandOutput:

        def controls_before_execution(command_args):
            command_args = self.parse_args(command_args)    # 0. Typed arguments
            self.check_required_args(command_args)          # 1. Required arguments
            self.check_validation_rules(command_args)       # 2. Invalid arguments
            self.infer_args(command_args)                   # 3. Infer arguments
            return command_args

        command_args = controls_before_execution(command_args)
        logger.info("Running %s with %s", self.name, command_args)

        self.output = self._execute(**command_args)

        if write:
            directory = os.path.dirname(command_args['output'])
            if directory and not os.path.isdir(directory):
                raise TardosError(self.name, TardosError.TardosErrorType.IO_FAILURE, f"Output directory {directory} does not exist.", {"path": command_args['output']})
            self.output.write(command_args['output'], command_args['format'])

        return self.output
