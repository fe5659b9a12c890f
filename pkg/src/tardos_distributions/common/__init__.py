from . import names
from . import errors
from . import states
from . import utils
from . import notebook_templates
