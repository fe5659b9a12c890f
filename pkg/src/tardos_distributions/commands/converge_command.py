from dataclasses import asdict

import pandas as pd

from pydantic import Field, field_validator

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.core.analysis import theorem1_report
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: Compare exact Gauss-Legendre points, weights and normalizer with their large-c asymptotic forms.

class ConvergeCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        points: None | list[int] = Field(
            title = "Points",
            description = "Comma separated point counts c >= 2.",
            examples = [[100], [5, 10, 20, 40, 80]],
        )
        alpha: float = Field(
            title = "Alpha",
            description = "Fraction of indices excluded at each end: only alpha c < k < (1 - alpha) c is compared. Default is 0.1.",
            examples = [0.1, 0.25],
            default = 0.1
        )

        @field_validator('points', mode='before')
        @classmethod
        def comma_list(cls, value):
            return utils.split_list(value)


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.CONVERGE_COMMAND,
            description = "Report the convergence of the Gauss-Legendre bias distribution towards the arcsine law.",
            args_schema = ConvergeCommand.InputSchema,
        )


    # DOC: Validation rules
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'points': [
                args_rules.all_at_least('points', 2),
            ],
            'alpha': [
                args_rules.open_interval('alpha', 0.0, 0.5),
            ],
        }


    def _execute(self, points, alpha, **command_args) -> CommandOutput:
        reports = [theorem1_report(c, alpha) for c in points]
        table = pd.DataFrame([report.as_row() for report in reports], columns=N.CONVERGE_COLUMNS)
        last = reports[-1]
        return CommandOutput(
            command = self.name,
            summary = f"c={last.point_count}, alpha={alpha}: max point error {last.max_point_error:.3e}, normalizer gap {last.normalizer_gap:.3e}",
            table = table,
            document = {"alpha": alpha, "reports": [asdict(report) for report in reports]},
        )
