# Commands package for the minimal period tool
# One handler per subcommand; each takes (record, options) and returns a RecordResult

from .period_commands import (
    mp_command, rmp_command, lmp_command, tree_command
)

from .pseudo_commands import (
    cmp_command, detect_command
)

COMMANDS = {
    'mp': mp_command,
    'rmp': rmp_command,
    'lmp': lmp_command,
    'cmp': cmp_command,
    'detect': detect_command,
    'tree': tree_command,
}

# Export all handlers
__all__ = [
    # Period arrays
    'mp_command', 'rmp_command', 'lmp_command', 'tree_command',

    # Pseudo-powers
    'cmp_command', 'detect_command',

    'COMMANDS'
]
