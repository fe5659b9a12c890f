import re
import copy

import nbformat as nbf



class CellMetadata():

    NEED_FORMAT = "NEED_FORMAT"             # DOC: cell source is formatted with the artifact paths (default False)
    CHECK_IMPORT = "CHECK_IMPORT"           # DOC: import lines already present in an earlier import cell are dropped (default False)
    REQUIRES = "REQUIRES"                   # DOC: cell is kept only if this value key is set (default unset)


def notebook_copy(notebook: nbf.NotebookNode) -> nbf.NotebookNode:
    return copy.deepcopy(notebook)


def clean_code_lines(code: str, format_dict: dict = None) -> str:
    """Format, then strip blank border lines and the indentation of the first line."""
    if format_dict is not None:
        code = code.format(**format_dict)
    lines = code.split('\n')
    while lines and lines[0].strip() == '':
        lines = lines[1:]
    while lines and lines[-1].strip() == '':
        lines = lines[:-1]
    if not lines:
        return ''
    indent = len(re.match(r'^\s*', lines[0]).group())
    return '\n'.join(line[indent:] for line in lines)


def write_notebook_template(template: nbf.NotebookNode, values_dict: dict = dict()) -> nbf.NotebookNode:
    """Compile a template into a new notebook: format the cells that ask for it, drop repeated imports and cells whose inputs are missing."""
    notebook = notebook_copy(template)

    imported = set()
    compiled_cells = []
    for cell in notebook.cells:
        requires = cell.metadata.pop(CellMetadata.REQUIRES, None)
        if requires is not None and values_dict.get(requires) is None:
            continue
        need_format = cell.metadata.pop(CellMetadata.NEED_FORMAT, False)
        check_import = cell.metadata.pop(CellMetadata.CHECK_IMPORT, False)
        cell.source = clean_code_lines(cell.source, format_dict=values_dict if need_format else None)
        if check_import:
            lines = [line for line in cell.source.split('\n') if line.strip() not in imported]
            imported.update(line.strip() for line in lines if line.strip())
            cell.source = '\n'.join(lines)
        compiled_cells.append(cell)

    notebook.cells = [cell for cell in compiled_cells if cell.cell_type != "code" or cell.source.strip() != ""]

    return notebook
