import pandas as pd

from pydantic import Field

from tardos_distributions.common import names as N
from tardos_distributions.core.distributions import make_distribution, normalize_family, points_for_colluders, resolve_cutoff
from tardos_distributions.core.scheme import choose_parameters
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: Heuristic code length l and accusation threshold Z for c~ colluders among n users at false positive target eps1.

class ParamsCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        colluders: None | int = Field(
            title = "Colluders",
            description = "Coalition size c~ the code must resist.",
            examples = [3, 20],
        )
        users: None | int = Field(
            title = "Users",
            description = "Number of users n.",
            examples = [100, 1000000],
        )
        epsilon1: float = Field(
            title = "Epsilon1",
            description = "Target probability of accusing at least one innocent user. Default is 0.01.",
            examples = [0.01, 0.001],
            default = 0.01
        )
        family: str = Field(
            title = "Family",
            description = "Bias distribution family. Default is gl.",
            examples = ["gl", "arcsine"],
            default = "gl"
        )
        points: None | int = Field(
            title = "Points",
            description = "Atoms of a discrete family. If not specified it is ceil(colluders / 2).",
            examples = [None, 2],
            default = None
        )
        cutoff: None | float = Field(
            title = "Cutoff",
            description = "Cutoff of the continuous arcsine family. If not specified it follows the schedule.",
            examples = [None, 0.003],
            default = None
        )
        schedule: str = Field(
            title = "Schedule",
            description = f"Cutoff schedule of the continuous family. Default is {N.DEFAULT_SCHEDULE}.",
            examples = [N.DEFAULT_SCHEDULE],
            default = N.DEFAULT_SCHEDULE
        )


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.PARAMS_COMMAND,
            description = "Choose the code length and accusation threshold from the minimum expected coalition score.",
            args_schema = ParamsCommand.InputSchema,
        )


    # DOC: Validation rules
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'colluders': [
                args_rules.at_least('colluders', 1),
            ],
            'users': [
                args_rules.at_least('users', 2),
            ],
            'epsilon1': [
                args_rules.open_interval('epsilon1', 0.0, 1.0),
            ],
            'family': [
                args_rules.known_family('family'),
            ],
            'points': [
                args_rules.at_least('points', 1),
                lambda **ka: f"Invalid points: a point count only applies to the discrete families, not to {ka['family']}."
                    if ka['points'] is not None and args_rules.is_continuous(ka['family']) else None,
            ],
            'cutoff': args_rules.cutoff_rules('family'),
            'schedule': [
                args_rules.known_schedule('schedule'),
            ],
        }


    # DOC: Inference rules
    def _set_args_inference_rules(self) -> dict:

        def infer_family(**ka):
            return normalize_family(ka['family'])

        def infer_points(**ka):
            if ka['points'] is None and not args_rules.is_continuous(ka['family']):
                return points_for_colluders(ka['colluders'])
            return ka['points']

        def infer_cutoff(**ka):
            if ka['cutoff'] is None and args_rules.is_continuous(ka['family']):
                return resolve_cutoff(ka['schedule'], ka['colluders'])
            return ka['cutoff']

        return {
            **super()._set_args_inference_rules(),
            'family': infer_family,
            'points': infer_points,
            'cutoff': infer_cutoff,
        }


    def _execute(self, colluders, users, epsilon1, family, points, cutoff, **command_args) -> CommandOutput:
        distribution = make_distribution(family, point_count=points, cutoff=cutoff)
        params = choose_parameters(colluders, users, epsilon1, distribution)
        return CommandOutput(
            command = self.name,
            summary = f"{distribution.label}, c~={colluders}, n={users}, eps1={epsilon1}: l={params.code_length}, Z={params.threshold:.6g}",
            table = pd.DataFrame([params.as_dict()], columns=N.PARAMS_COLUMNS),
            document = {**params.as_dict(), "distribution": distribution.label},
        )
