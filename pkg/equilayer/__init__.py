"""Standard bases of symmetric-group equivariant linear layers."""

__version__ = "0.1.0"


from .core import (
    EquilayerError,
    get_logger,
    get_settings,
    log_check_event,
    settings,
    setup_logging,
)

__all__ = [
    "__version__",
    "settings",
    "get_settings",
    "setup_logging",
    "get_logger",
    "log_check_event",
    "EquilayerError",
]
