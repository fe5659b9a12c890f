import numpy as np
import pandas as pd

from pydantic import Field, field_validator

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.core.distributions import (
    DiscreteBiasDistribution,
    arcsine_distribution,
    make_distribution,
    normalize_family,
)
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: Evaluate bias distribution CDFs on a uniform p-grid, always together with the uncut arcsine limit F_inf.

class CdfCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        families: list[str] = Field(
            title = "Families",
            description = "Comma separated families to evaluate. Default is all four.",
            examples = [["gl"], ["gl", "darcsine", "cheb", "arcsine"]],
            default = ["gl", "darcsine", "cheb", "arcsine"]
        )
        points: list[int] = Field(
            title = "Points",
            description = "Comma separated atom counts c for the discrete families. Default is 1,2,5,10.",
            examples = [[2], [1, 2, 5, 10]],
            default = [1, 2, 5, 10]
        )
        cutoff: float = Field(
            title = "Cutoff",
            description = "Cutoff of the continuous arcsine family. Default is 0.",
            examples = [0.0, 0.003],
            default = 0.0
        )
        grid: int = Field(
            title = "Grid",
            description = "Number of equally spaced p values in [0, 1], endpoints included. Default is 201.",
            examples = [101, 201],
            default = 201
        )

        @field_validator('families', 'points', mode='before')
        @classmethod
        def comma_list(cls, value):
            return utils.split_list(value)


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.CDF_COMMAND,
            description = "Evaluate distribution functions on a grid, including the arcsine limit F_inf.",
            args_schema = CdfCommand.InputSchema,
        )


    # DOC: Validation rules
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'families': [
                args_rules.known_family('families'),
            ],
            'points': [
                args_rules.all_at_least('points', 1),
            ],
            'cutoff': [
                lambda **ka: f"Invalid cutoff: {ka['cutoff']}. It should lie in [0, 0.5)."
                    if not (0.0 <= ka['cutoff'] < 0.5) else None,
                lambda **ka: f"Invalid cutoff: a cutoff only applies to the continuous arcsine family, which is not among {ka['families']}."
                    if ka['cutoff'] != 0.0 and not any(args_rules.is_continuous(f) for f in ka['families']) else None,
            ],
            'grid': [
                args_rules.at_least('grid', 2),
            ],
        }


    # DOC: Inference rules
    def _set_args_inference_rules(self) -> dict:

        def infer_families(**ka):
            return list(dict.fromkeys(normalize_family(f) for f in ka['families']))

        return {
            **super()._set_args_inference_rules(),
            'families': infer_families,
        }


    def _execute(self, families: list[str], points: list[int], cutoff: float, grid: int, **command_args) -> CommandOutput:
        p = np.linspace(0.0, 1.0, grid)

        distributions = []
        for family in families:
            if family == N.ARCSINE:
                distributions.append((family, make_distribution(family, cutoff=cutoff)))
            else:
                distributions.extend((family, make_distribution(family, point_count=c)) for c in points)
        distributions.append((N.REFERENCE, arcsine_distribution()))

        frames = []
        for family, distribution in distributions:
            frames.append(pd.DataFrame({
                "family": family,
                "points": pd.array([distribution.point_count if isinstance(distribution, DiscreteBiasDistribution) else None] * grid, dtype="Int64"),
                "cutoff": pd.array([getattr(distribution, "cutoff", None)] * grid, dtype="Float64"),
                "p": p,
                "cdf": distribution.cdf(p),
            }, columns=N.CDF_COLUMNS))
        table = pd.concat(frames, ignore_index=True)

        return CommandOutput(
            command = self.name,
            summary = f"{len(distributions)} distribution functions on {grid} grid points",
            table = table,
        )
