from .command_output import CommandOutput
from .base_command import BaseCommand, CommandSchema
from . import args_rules
