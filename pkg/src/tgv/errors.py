"""Exception hierarchy shared by all modules; the CLI maps these to exit codes."""


class TgvError(Exception):
    """Base class for all workbench errors."""


class InputError(TgvError, ValueError):
    """Invalid user input (bad file, out-of-range parameter). CLI exit code 1."""


class GuardError(TgvError, RuntimeError):
    """Request refused by a tractability guard. CLI exit code 2."""


class ConsistencyError(TgvError, RuntimeError):
    """Internal cross-check failed (should never fire). CLI exit code 3."""
