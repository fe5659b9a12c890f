import pandas as pd

from pydantic import Field

from tardos_distributions.common import names as N
from tardos_distributions.core.analysis import coalition_mean, resolve_profile
from tardos_distributions.core.attacks import load_profile
from tardos_distributions.core.distributions import make_distribution, normalize_family, points_for_colluders, resolve_cutoff
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: Exact expected coalition score per segment and the code length constant d_l = 2 / mu^2 for one distribution, coalition size and pirate profile.

class MuCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        family: None | str = Field(
            title = "Family",
            description = "Distribution family: gl, darcsine, cheb or arcsine.",
            examples = ["gl", "arcsine"],
        )
        colluders: None | int = Field(
            title = "Colluders",
            description = "Coalition size c~.",
            examples = [2, 20],
        )
        points: None | int = Field(
            title = "Points",
            description = "Atoms of a discrete family. If not specified it is ceil(colluders / 2).",
            examples = [None, 10],
            default = None
        )
        cutoff: None | float = Field(
            title = "Cutoff",
            description = "Cutoff of the continuous arcsine family. If not specified it follows the schedule.",
            examples = [None, 0.0, 0.003],
            default = None
        )
        schedule: str = Field(
            title = "Schedule",
            description = f"Cutoff schedule of the continuous family: none, power43 or constant. Default is {N.DEFAULT_SCHEDULE}.",
            examples = [N.DEFAULT_SCHEDULE, N.SCHEDULE_NONE],
            default = N.DEFAULT_SCHEDULE
        )
        strategy: str = Field(
            title = "Strategy",
            description = "Pirate strategy: interleaving, majority, minority, coin_flip or minimizing. Default is minimizing.",
            examples = [N.MINIMIZING, N.INTERLEAVING],
            default = N.MINIMIZING
        )
        profile_file: None | str = Field(
            title = "Profile File",
            description = "CSV with columns sigma,theta giving a custom pirate profile. Overrides strategy.",
            examples = [None, "profile.csv"],
            default = None
        )


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.MU_COMMAND,
            description = "Compute the expected coalition score mu and d_l = 2 / mu^2.",
            args_schema = MuCommand.InputSchema,
        )


    # DOC: Validation rules
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'family': [
                args_rules.known_family('family'),
            ],
            'colluders': [
                args_rules.at_least('colluders', 1),
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
            'strategy': [
                args_rules.known_strategy('strategy'),
            ],
            'profile_file': [
                args_rules.existing_file('profile_file'),
            ],
        }


    # DOC: Inference rules ( i.e.: points and cutoff from the coalition size ... )
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


    def _execute(self, family, colluders, points, cutoff, strategy, profile_file, **command_args) -> CommandOutput:
        distribution = make_distribution(family, point_count=points, cutoff=cutoff)
        profile = load_profile(profile_file) if profile_file is not None else resolve_profile(strategy, distribution, colluders)
        report = coalition_mean(distribution, colluders, profile)
        row = report.as_row()
        return CommandOutput(
            command = self.name,
            summary = f"{distribution.label}, c~={colluders}, {profile.name}: mu={report.mu:.12g} d_l={report.dl:.12g}",
            table = pd.DataFrame([row], columns=N.MU_COLUMNS),
            document = {**row, "error": report.error, "degenerate": report.degenerate, "theta": profile.theta.tolist()},
        )
