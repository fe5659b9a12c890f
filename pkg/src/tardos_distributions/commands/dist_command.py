from pydantic import Field

from tardos_distributions.common import names as N
from tardos_distributions.core.distributions import make_distribution, normalize_family, points_for_colluders
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: Tabulate the atoms (point, probability) of a discrete bias distribution.

class DistCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        family: None | str = Field(
            title = "Family",
            description = "Discrete distribution family: gl, darcsine or cheb.",
            examples = ["gl", "darcsine", "cheb"],
        )
        points: None | int = Field(
            title = "Points",
            description = "Number of atoms c. If not specified it is ceil(colluders / 2).",
            examples = [None, 2, 10],
            default = None
        )
        colluders: None | int = Field(
            title = "Colluders",
            description = "Coalition size the distribution is designed against, used when points is not given.",
            examples = [None, 3, 20],
            default = None
        )
        cutoff: None | float = Field(
            title = "Cutoff",
            description = "Not accepted: discrete families have no cutoff.",
            examples = [None],
            default = None
        )


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.DIST_COMMAND,
            description = "Tabulate the atoms of a Gauss-Legendre, discrete arcsine or Chebyshev-Gauss bias distribution.",
            args_schema = DistCommand.InputSchema,
        )


    # DOC: Validation rules ( i.e.: discrete family, cutoff never combined with it ... )
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'family': [
                args_rules.known_family('family'),
                args_rules.discrete_family('family'),
            ],
            'points': [
                args_rules.at_least('points', 1),
                args_rules.one_of_required('points', 'colluders'),
            ],
            'colluders': [
                args_rules.at_least('colluders', 1),
            ],
            'cutoff': args_rules.cutoff_rules('family'),
        }


    # DOC: Inference rules ( i.e.: points from the coalition size ... )
    def _set_args_inference_rules(self) -> dict:

        def infer_family(**ka):
            return normalize_family(ka['family'])

        def infer_points(**ka):
            if ka['points'] is None:
                return points_for_colluders(ka['colluders'])
            return ka['points']

        return {
            **super()._set_args_inference_rules(),
            'family': infer_family,
            'points': infer_points,
        }


    def _execute(self, family: str, points: int, **command_args) -> CommandOutput:
        distribution = make_distribution(family, point_count=points)
        return CommandOutput(
            command = self.name,
            summary = f"{distribution.label}: {distribution.point_count} atoms, raw normalizer {distribution.raw_normalizer:.12g}",
            table = distribution.as_frame(),
            document = distribution.as_document(),
        )
