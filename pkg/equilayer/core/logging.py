from __future__ import annotations

import logging
import logging.config
import sys
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

import structlog
from pythonjsonlogger.json import JsonFormatter

from equilayer.core.config import settings

HANDLER_CONSOLE = "console"
HANDLER_APP_JSON = "app_json"
HANDLER_VERIFICATION_JSON = "verification_json"
HANDLER_ERROR_JSON = "error_json"

VERIFICATION_LOGGER = "equilayer.verification"


def _iso_utc_timestamp() -> str:
    """Return an ISO 8601 timestamp with a trailing Z."""

    return datetime.now(UTC).isoformat().replace("+00:00", "Z")


class StructuredLogFormatter(JsonFormatter):
    """JSON formatter that injects run metadata into each record."""

    def add_fields(
        self,
        log_record: dict[str, Any],
        record: logging.LogRecord,
        message_dict: dict[str, Any],
    ) -> None:
        super().add_fields(log_record, record, message_dict)

        if "timestamp" not in log_record:
            log_record["timestamp"] = _iso_utc_timestamp()

        log_record.setdefault("service", settings.SERVICE_NAME)
        log_record.setdefault("level", record.levelname)

        for attribute in ("check", "outcome", "operation", "verification_event"):
            if hasattr(record, attribute):
                log_record[attribute] = getattr(record, attribute)


class VerificationFilter(logging.Filter):
    """Mark records that report a verification outcome."""

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: D401 - inherited documentation
        preflag = getattr(record, "verification_event", None)

        if preflag is True:
            return True

        record.verification_event = (
            hasattr(record, "outcome") or record.levelno >= logging.ERROR
        )
        return True


def configure_structlog(level: int) -> None:
    """Render structlog events as JSON and hand them to the stdlib handlers.

    Loggers are not cached so a later ``setup_logging`` changes their level.
    """

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.add_log_level,
            structlog.processors.JSONRenderer(),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        cache_logger_on_first_use=False,
    )


def setup_logging(
    log_level: str = "INFO",
    *,
    log_directory: str | Path | None = None,
    to_file: bool | None = None,
) -> None:
    """Configure the structured logging pipeline.

    Console output goes to stderr so command output on stdout stays
    machine readable. File handlers are attached when ``to_file`` is true,
    when a ``log_directory`` is passed, or when ``LOG_TO_FILE`` is set.
    """

    level_name = log_level.upper()
    resolved_level = getattr(logging, level_name, logging.INFO)
    write_files = (
        to_file
        if to_file is not None
        else (log_directory is not None or settings.LOG_TO_FILE)
    )

    configure_structlog(resolved_level)

    handlers: dict[str, dict[str, Any]] = {
        HANDLER_CONSOLE: {
            "class": "logging.StreamHandler",
            "level": level_name,
            "formatter": "console"
            if settings.ENVIRONMENT == "development"
            else "json",
            "stream": sys.stderr,
            "filters": ["verification"],
        },
    }
    app_handlers = [HANDLER_CONSOLE]
    verification_handlers = [HANDLER_CONSOLE]

    if write_files:
        logs_path = Path(log_directory or settings.LOG_DIRECTORY)
        logs_path.mkdir(parents=True, exist_ok=True)
        handlers[HANDLER_APP_JSON] = {
            "class": "logging.handlers.TimedRotatingFileHandler",
            "level": "DEBUG",
            "formatter": "json",
            "filename": logs_path / "application.log",
            "when": "midnight",
            "interval": 1,
            "backupCount": 30,
            "filters": ["verification"],
        }
        handlers[HANDLER_VERIFICATION_JSON] = {
            "class": "logging.handlers.TimedRotatingFileHandler",
            "level": "INFO",
            "formatter": "json",
            "filename": logs_path / "verification.log",
            "when": "midnight",
            "interval": 1,
            "backupCount": 90,
            "filters": ["verification"],
        }
        handlers[HANDLER_ERROR_JSON] = {
            "class": "logging.handlers.TimedRotatingFileHandler",
            "level": "ERROR",
            "formatter": "json",
            "filename": logs_path / "errors.log",
            "when": "midnight",
            "interval": 1,
            "backupCount": 365,
            "filters": ["verification"],
        }
        app_handlers += [HANDLER_APP_JSON, HANDLER_ERROR_JSON]
        verification_handlers += [
            HANDLER_APP_JSON,
            HANDLER_VERIFICATION_JSON,
            HANDLER_ERROR_JSON,
        ]

    config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "json": {"()": StructuredLogFormatter},
            "console": {
                "format": "%(asctime)s | %(name)s | %(levelname)s | %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
        },
        "filters": {"verification": {"()": VerificationFilter}},
        "handlers": handlers,
        "loggers": {
            "equilayer": {
                "level": level_name,
                "handlers": app_handlers,
                "propagate": False,
            },
            VERIFICATION_LOGGER: {
                "level": "DEBUG",
                "handlers": verification_handlers,
                "propagate": False,
            },
            "": {
                "level": "WARNING",
                "handlers": [HANDLER_CONSOLE],
            },
        },
    }

    logging.config.dictConfig(config)

    logger = logging.getLogger("equilayer.core.logging")
    logger.debug(
        "Structured logging configured",
        extra={
            "environment": settings.ENVIRONMENT,
            "log_level": level_name,
            "file_handlers": bool(write_files),
        },
    )


def get_logger(name: str) -> logging.Logger:
    """Return a configured logger instance."""

    return logging.getLogger(name)


def log_check_event(
    logger: logging.Logger,
    check: str,
    *,
    passed: bool,
    **kwargs: Any,
) -> None:
    """Emit one structured record describing a verification check outcome."""

    extra_data = {
        "verification_event": True,
        "check": check,
        "outcome": "pass" if passed else "fail",
        "timestamp": _iso_utc_timestamp(),
        **kwargs,
    }

    if passed:
        logger.info("Verification check", extra=extra_data)
    else:
        logger.warning("Verification check failed", extra=extra_data)


def log_operation_event(
    logger: logging.Logger,
    operation: str,
    **kwargs: Any,
) -> None:
    """Emit a record for a completed library operation."""

    extra_data = {
        "operation": operation,
        "timestamp": _iso_utc_timestamp(),
        **kwargs,
    }

    logger.info("Operation completed", extra=extra_data)


configure_structlog(getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING))
