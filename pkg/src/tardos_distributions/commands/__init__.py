from . import base

from .dist_command import DistCommand
from .cdf_command import CdfCommand
from .mu_command import MuCommand
from .sweep_command import SweepCommand
from .converge_command import ConvergeCommand
from .params_command import ParamsCommand
from .simulate_command import SimulateCommand
from .notebook_command import NotebookCommand
