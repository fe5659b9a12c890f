from . import nbt_utils
from .nbt_figures import notebook_template as nbt_figures
