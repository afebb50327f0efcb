"""Transcribed appendix pattern matrices shipped with the package."""

from __future__ import annotations

import json
from functools import cache
from importlib import resources

from equilayer.core.exceptions import InvalidInputError
from equilayer.schemas.payloads import AppendixFile

APPENDICES = ("A", "B", "C", "D", "E")


@cache
def load_appendix(which: str) -> AppendixFile:
    key = which.strip().upper()
    if key not in APPENDICES:
        raise InvalidInputError(
            f"Unknown appendix {which!r}", details={"choices": list(APPENDICES)}
        )
    text = (
        resources.files(__name__)
        .joinpath(f"appendix_{key.lower()}.json")
        .read_text(encoding="utf-8")
    )
    return AppendixFile.model_validate(json.loads(text))
