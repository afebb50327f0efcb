"""Shared fixtures for the equilayer test suite."""

from __future__ import annotations

import logging

import pytest
import structlog
from hypothesis import settings as hypothesis_settings

from equilayer.models.set_partition import SetPartition, ShapeSplit

hypothesis_settings.register_profile("equilayer", max_examples=60, deadline=None)
hypothesis_settings.load_profile("equilayer")


@pytest.fixture(autouse=True)
def _restore_logging():
    """Undo handler and structlog changes made by setup_logging inside a test."""

    names = ["", "equilayer", "equilayer.verification"]
    saved = {
        name: (
            logging.getLogger(name).handlers[:],
            logging.getLogger(name).level,
            logging.getLogger(name).propagate,
        )
        for name in names
    }
    structlog_config = structlog.get_config()
    try:
        yield
    finally:
        structlog.configure(**structlog_config)
        for name, (handlers, level, propagate) in saved.items():
            logger = logging.getLogger(name)
            logger.handlers[:] = handlers
            logger.setLevel(level)
            logger.propagate = propagate


@pytest.fixture
def square_two() -> ShapeSplit:
    return ShapeSplit.square(2)


@pytest.fixture
def identity_two() -> SetPartition:
    """The identity diagram of P_2: {1,3 | 2,4}."""

    return SetPartition.parse("{1,3|2,4}")
