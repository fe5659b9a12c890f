from dotenv import load_dotenv
load_dotenv()

from . import common
from .common import (
    errors,
    names,
    states,
    utils
)

from . import core
from .core import (
    legendre,
    distributions,
    scheme,
    attacks,
    analysis
)

from . import commands
