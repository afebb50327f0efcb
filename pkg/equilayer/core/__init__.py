"""Core package initialization."""

from .config import Settings, get_settings, settings
from .exceptions import (
    EquilayerError,
    InternalConsistencyError,
    InvalidInputError,
    ShapeMismatchError,
    SizeCapExceededError,
    VerificationError,
    ensure_within_cap,
)
from .logging import (
    HANDLER_APP_JSON,
    HANDLER_CONSOLE,
    HANDLER_ERROR_JSON,
    HANDLER_VERIFICATION_JSON,
    get_logger,
    log_check_event,
    log_operation_event,
    setup_logging,
)

__all__ = [
    "Settings",
    "get_settings",
    "settings",
    "EquilayerError",
    "InternalConsistencyError",
    "InvalidInputError",
    "ShapeMismatchError",
    "SizeCapExceededError",
    "VerificationError",
    "ensure_within_cap",
    "setup_logging",
    "get_logger",
    "log_check_event",
    "log_operation_event",
    "HANDLER_CONSOLE",
    "HANDLER_APP_JSON",
    "HANDLER_VERIFICATION_JSON",
    "HANDLER_ERROR_JSON",
]
