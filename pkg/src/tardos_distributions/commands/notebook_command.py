from pydantic import Field

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.notebook_templates import nbt_utils, nbt_figures
from tardos_distributions.commands.base import BaseCommand, CommandSchema, CommandOutput, args_rules



# DOC: Build a Jupyter notebook that plots the artifacts of the cdf and sweep commands.

class NotebookCommand(BaseCommand):


    # DOC: Command input schema
    class InputSchema(CommandSchema):

        cdf_csv: None | str = Field(
            title = "CDF CSV",
            description = "Artifact of the cdf command to plot. If not specified the distribution function plot is omitted.",
            examples = [None, "cdf.csv"],
            default = None
        )
        sweep_csv: None | str = Field(
            title = "Sweep CSV",
            description = "Artifact of the sweep command to plot. If not specified the d_l plot is omitted.",
            examples = [None, "sweep.csv"],
            default = None
        )


    default_format = N.FORMAT_IPYNB
    formats = (N.FORMAT_IPYNB,)


    # DOC: Initialize the command with a name, description and args_schema
    def __init__(self):
        super().__init__(
            name = N.NOTEBOOK_COMMAND,
            description = "Write a notebook plotting cdf and sweep artifacts.",
            args_schema = NotebookCommand.InputSchema,
        )


    # DOC: Validation rules
    def _set_args_validation_rules(self) -> dict:

        return {
            **super()._set_args_validation_rules(),
            'cdf_csv': [
                args_rules.one_of_required('cdf_csv', 'sweep_csv'),
                args_rules.existing_file('cdf_csv'),
            ],
            'sweep_csv': [
                args_rules.existing_file('sweep_csv'),
            ],
        }


    # DOC: Inference rules
    def _set_args_inference_rules(self) -> dict:

        def infer_path(arg):
            return lambda **ka: utils.normpath(ka[arg]) if ka[arg] is not None else None

        return {
            **super()._set_args_inference_rules(),
            'cdf_csv': infer_path('cdf_csv'),
            'sweep_csv': infer_path('sweep_csv'),
        }


    def _execute(self, cdf_csv, sweep_csv, **command_args) -> CommandOutput:
        notebook = nbt_utils.write_notebook_template(nbt_figures, values_dict={'cdf_csv': cdf_csv, 'sweep_csv': sweep_csv})
        plotted = [path for path in (cdf_csv, sweep_csv) if path is not None]
        return CommandOutput(
            command = self.name,
            summary = f"notebook plotting {', '.join(plotted)}",
            notebook = notebook,
        )
