"""Exception hierarchy shared by the library and the CLI."""

from typing import Any

import structlog

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_CAP = 3

log = structlog.get_logger(__name__)


class EquilayerError(Exception):
    """Base exception carrying the process exit code the CLI should use."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_VERIFICATION_FAILED,
        details: dict[str, Any] | None = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class InvalidInputError(EquilayerError):
    """Raised when an argument violates an operation's precondition."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, exit_code=EXIT_USAGE, details=details)


class ShapeMismatchError(EquilayerError):
    """Raised when matrix or diagram shapes do not fit together."""

    def __init__(
        self,
        message: str = "Shape mismatch",
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, exit_code=EXIT_USAGE, details=details)


class SizeCapExceededError(EquilayerError):
    """Raised when a request would exceed a configured size cap."""

    def __init__(
        self,
        message: str,
        *,
        required: int,
        cap: int,
        bytes_per_item: int = 16,
        details: dict[str, Any] | None = None,
    ):
        merged = {
            "required": required,
            "cap": cap,
            "estimated_bytes": required * bytes_per_item,
            **(details or {}),
        }
        super().__init__(message, exit_code=EXIT_SIZE_CAP, details=merged)


class VerificationError(EquilayerError):
    """Raised when a verification check fails."""

    def __init__(
        self,
        message: str = "Verification failed",
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, exit_code=EXIT_VERIFICATION_FAILED, details=details)


class InternalConsistencyError(EquilayerError):
    """Raised when an internal invariant of a computation breaks."""

    def __init__(
        self,
        message: str = "Internal consistency check failed",
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, exit_code=EXIT_VERIFICATION_FAILED, details=details)


def ensure_within_cap(
    what: str, required: int, cap: int, *, force: bool = False
) -> None:
    """Raise ``SizeCapExceededError`` unless ``required <= cap`` or forced."""

    if force or required <= cap:
        return
    log.info("size_cap_refused", what=what, required=required, cap=cap)
    raise SizeCapExceededError(
        f"{what} needs {required:,} entries, above the cap of {cap:,}; "
        "raise the cap or pass --force",
        required=required,
        cap=cap,
    )
