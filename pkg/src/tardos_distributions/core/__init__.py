from . import legendre
from . import distributions
from . import scheme
from . import attacks
from . import analysis
