from pydantic import Field, field_validator

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.core.analysis import dl_sweep
from tardos_distributions.core.attacks import load_profile, normalize_strategy
from tardos_distributions.core.distributions import normalize_family
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: d_l estimates for every (family, coalition size) pair, with the pi^2 / 2 reference rows.

class SweepCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        families: list[str] = Field(
            title = "Families",
            description = "Comma separated families to sweep. Default is all four.",
            examples = [["gl", "darcsine", "cheb", "arcsine"]],
            default = ["gl", "darcsine", "cheb", "arcsine"]
        )
        cmin: int = Field(
            title = "Minimum Coalition Size",
            description = "Smallest coalition size c~ of the sweep. Default is 2.",
            examples = [2],
            default = 2
        )
        cmax: int = Field(
            title = "Maximum Coalition Size",
            description = "Largest coalition size c~ of the sweep, included. Default is 40.",
            examples = [40, 100],
            default = 40
        )
        strategy: str = Field(
            title = "Strategy",
            description = "Fixed pirate strategy, or minimizing for the lower bound on mu. Default is minimizing.",
            examples = [N.MINIMIZING, N.INTERLEAVING],
            default = N.MINIMIZING
        )
        schedule: str = Field(
            title = "Schedule",
            description = f"Cutoff schedule of the continuous family. Default is {N.DEFAULT_SCHEDULE}.",
            examples = [N.DEFAULT_SCHEDULE, N.SCHEDULE_NONE],
            default = N.DEFAULT_SCHEDULE
        )
        profile_file: None | str = Field(
            title = "Profile File",
            description = "CSV with columns sigma,theta. Only usable when cmin equals cmax.",
            examples = [None, "profile.csv"],
            default = None
        )

        @field_validator('families', mode='before')
        @classmethod
        def comma_list(cls, value):
            return utils.split_list(value)


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.SWEEP_COMMAND,
            description = "Sweep d_l over families and coalition sizes under a fixed or minimizing attack.",
            args_schema = SweepCommand.InputSchema,
        )


    # DOC: Validation rules
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'families': [
                lambda **ka: "Invalid families: the list is empty." if len(ka['families']) == 0 else None,
                args_rules.known_family('families'),
            ],
            'cmin': [
                args_rules.at_least('cmin', 1),
            ],
            'cmax': [
                lambda **ka: f"Invalid cmax: {ka['cmax']}. It should be at least cmin = {ka['cmin']}."
                    if ka['cmax'] < ka['cmin'] else None,
            ],
            'strategy': [
                args_rules.known_strategy('strategy'),
            ],
            'schedule': [
                args_rules.known_schedule('schedule'),
            ],
            'profile_file': [
                args_rules.existing_file('profile_file'),
                lambda **ka: "Invalid profile_file: a fixed profile fits one coalition size, set cmin equal to cmax."
                    if ka['profile_file'] is not None and ka['cmin'] != ka['cmax'] else None,
            ],
        }


    # DOC: Inference rules
    def _set_args_inference_rules(self) -> dict:

        def infer_families(**ka):
            return list(dict.fromkeys(normalize_family(f) for f in ka['families']))

        def infer_strategy(**ka):
            return normalize_strategy(ka['strategy'])

        return {
            **super()._set_args_inference_rules(),
            'families': infer_families,
            'strategy': infer_strategy,
        }


    def _execute(self, families, cmin, cmax, strategy, schedule, profile_file, jobs, **command_args) -> CommandOutput:
        strategy_mode = load_profile(profile_file) if profile_file is not None else strategy
        table = dl_sweep(families, range(cmin, cmax + 1), strategy_mode=strategy_mode, schedule=schedule, jobs=jobs)
        return CommandOutput(
            command = self.name,
            summary = f"{len(families)} families x c~ in [{cmin}, {cmax}] under {strategy if profile_file is None else N.CUSTOM_PROFILE}: {len(table)} rows",
            table = table,
        )
