"""Commands module containing every supercount subcommand."""
from .checks import oracle_command, validate_command
from .count import batch_command, count_command
from .matrix import charpoly_command, hasse_witt_command, jacobian_command

# Helper variable for easy importing
commands = [
    count_command,
    batch_command,
    hasse_witt_command,
    charpoly_command,
    jacobian_command,
    validate_command,
    oracle_command,
]
