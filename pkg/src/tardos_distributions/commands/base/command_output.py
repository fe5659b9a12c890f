from dataclasses import dataclass, field

import nbformat as nbf
import pandas as pd

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.errors import TardosError


# DOC: What a command hands back to the cli: a table for csv, a document for json, a notebook for ipynb, and the one-line summary.

@dataclass
class CommandOutput:
    command: str
    summary: str
    table: pd.DataFrame | None = None
    document: dict | None = None
    notebook: nbf.NotebookNode | None = None
    artifact: str | None = field(default=None)

    def write(self, path: str, format: str) -> str:
        if format == N.FORMAT_CSV and self.table is not None:
            utils.write_table(self.table, path)
        elif format == N.FORMAT_JSON and self.document is not None:
            utils.write_document(self.document, path)
        elif format == N.FORMAT_JSON and self.table is not None:
            utils.write_document({"command": self.command, "rows": self.table.to_dict(orient="records")}, path)
        elif format == N.FORMAT_IPYNB and self.notebook is not None:
            try:
                nbf.write(self.notebook, path)
            except OSError as error:
                raise TardosError("write_notebook", TardosError.TardosErrorType.IO_FAILURE, f"Cannot write {path}: {error}", {"path": path})
        else:
            raise TardosError(
                self.command,
                TardosError.TardosErrorType.INVALID_ARGS,
                f"Command {self.command} has no {format} output.",
                {"format": format}
            )
        self.artifact = path
        return path
