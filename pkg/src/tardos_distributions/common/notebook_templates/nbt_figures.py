import nbformat as nbf

from .nbt_utils import CellMetadata


# DOC: Notebook that plots the cdf and sweep artifacts. Rendering happens when the user runs it.

notebook_template = nbf.v4.new_notebook()
notebook_template.cells.extend([
    nbf.v4.new_markdown_cell("""
        # Bias distributions and code length constants

        Distribution functions of the discrete bias distributions against the arcsine limit, and the code length constant d_l per coalition size.
    """),

    nbf.v4.new_code_cell("""
        # Section "Dependencies"

        import numpy as np
        import pandas as pd
        import matplotlib.pyplot as plt
    """,
    metadata={ CellMetadata.CHECK_IMPORT: True }),

    nbf.v4.new_code_cell("""
        # Section "Parameters"

        cdf_csv = {cdf_csv!r}

        sweep_csv = {sweep_csv!r}
    """,
    metadata={ CellMetadata.NEED_FORMAT: True }),

    nbf.v4.new_code_cell("""
        # Section "Distribution functions"

        cdf = pd.read_csv(cdf_csv)

        fig, ax = plt.subplots(figsize=(8, 5))
        for (family, points), group in cdf.groupby(['family', 'points'], dropna=False, sort=False):
            if pd.isna(points):
                ax.plot(group['p'], group['cdf'], '--' if family == 'reference' else '-', label=family)
            else:
                ax.step(group['p'], group['cdf'], where='post', label=f'{family} c={int(points)}')
        ax.set_xlabel('p')
        ax.set_ylabel('F(p)')
        ax.legend(fontsize='small')
        plt.show()
    """,
    metadata={ CellMetadata.REQUIRES: 'cdf_csv' }),

    nbf.v4.new_code_cell("""
        # Section "Code length constants"

        sweep = pd.read_csv(sweep_csv)

        fig, ax = plt.subplots(figsize=(8, 5))
        for family, group in sweep.groupby('family', sort=False):
            style = '--' if family == 'reference' else '-o'
            ax.plot(group['c_tilde'], group['dl'], style, markersize=3, label=family)
        ax.set_xlabel('coalition size')
        ax.set_ylabel('d_l')
        ax.legend(fontsize='small')
        plt.show()
    """,
    metadata={ CellMetadata.REQUIRES: 'sweep_csv' }),
])
