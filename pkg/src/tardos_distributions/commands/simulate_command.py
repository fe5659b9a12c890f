import pandas as pd

from pydantic import Field, field_validator

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.core.analysis import simulate
from tardos_distributions.core.attacks import load_profile, normalize_strategy
from tardos_distributions.core.distributions import make_distribution
from tardos_distributions.core.scheme import choose_parameters
from tardos_distributions.commands.base import BaseCommand, CommandOutput, args_rules
from tardos_distributions.commands.params_command import ParamsCommand



# DOC: Monte Carlo check of the heuristic parameters: per trial fresh biases, code, forged copy and accusation. Shares the parameter arguments of ParamsCommand.

class SimulateCommand(ParamsCommand):


    # DOC: Command input schema
    class InputSchema(ParamsCommand.InputSchema):

        strategy: str = Field(
            title = "Strategy",
            description = "Pirate strategy: interleaving, majority, minority, coin_flip or minimizing. Default is interleaving.",
            examples = [N.INTERLEAVING, N.MINIMIZING],
            default = N.INTERLEAVING
        )
        profile_file: None | str = Field(
            title = "Profile File",
            description = "CSV with columns sigma,theta executed as the pirate strategy. Overrides strategy.",
            examples = [None, "profile.csv"],
            default = None
        )
        coalition: None | list[int] = Field(
            title = "Coalition",
            description = "Comma separated user indices of the pirates. If not specified the first c~ users.",
            examples = [None, [0, 1, 2], [5, 17, 42]],
            default = None
        )
        trials: int = Field(
            title = "Trials",
            description = "Number of independent trials. Default is 500.",
            examples = [1, 500],
            default = 500
        )

        @field_validator('coalition', mode='before')
        @classmethod
        def comma_list(cls, value):
            return utils.split_list(value)


    default_format = N.FORMAT_JSON


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        BaseCommand.__init__(
            self,
            name = N.SIMULATE_COMMAND,
            description = "Simulate the scheme and report false positive and false negative trial rates.",
            args_schema = SimulateCommand.InputSchema,
        )


    # DOC: Validation rules ( parameters as in ParamsCommand, plus coalition and trials )
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'strategy': [
                args_rules.known_strategy('strategy'),
            ],
            'profile_file': [
                args_rules.existing_file('profile_file'),
            ],
            'coalition': [
                lambda **ka: f"Invalid coalition: {ka['coalition']}. Members should be distinct user indices in [0, {ka['users']})."
                    if ka['coalition'] is not None and (
                        len(ka['coalition']) == 0
                        or len(set(ka['coalition'])) != len(ka['coalition'])
                        or min(ka['coalition']) < 0
                        or max(ka['coalition']) >= ka['users']
                    ) else None,
            ],
            'trials': [
                args_rules.at_least('trials', 1),
            ],
        }


    # DOC: Inference rules
    def _set_args_inference_rules(self) -> dict:

        def infer_strategy(**ka):
            return normalize_strategy(ka['strategy'])

        def infer_coalition(**ka):
            if ka['coalition'] is None:
                return list(range(min(ka['colluders'], ka['users'])))
            return ka['coalition']

        return {
            **super()._set_args_inference_rules(),
            'strategy': infer_strategy,
            'coalition': infer_coalition,
        }


    def _execute(self, colluders, users, epsilon1, family, points, cutoff, strategy, profile_file, coalition, trials, seed, jobs, **command_args) -> CommandOutput:
        distribution = make_distribution(family, point_count=points, cutoff=cutoff)
        params = choose_parameters(colluders, users, epsilon1, distribution)
        strategy_name = load_profile(profile_file) if profile_file is not None else strategy
        report = simulate(params, distribution, strategy_name, coalition=coalition, trials=trials, rng_seed=seed, jobs=jobs)
        document = report.as_document()
        return CommandOutput(
            command = self.name,
            summary = f"{trials} trials, {report.strategy} vs {report.distribution}: fp_rate={report.fp_rate:.4g} fn_rate={report.fn_rate:.4g}",
            table = pd.json_normalize(document),
            document = document,
        )
