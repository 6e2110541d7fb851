"""
Utility functions for the Newton-Maclaurin lab.

This module provides helpers for loading and validating input documents,
as well as setting up logging.
"""

import json
import logging
import os
import sys
from typing import Any, Dict, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from .errors import InputError

HANDLER_NAME = "newton-maclaurin"

Model = TypeVar("Model", bound=BaseModel)


class JsonFormatter(logging.Formatter):
    """One JSON object per log record."""

    def format(self, record: logging.LogRecord) -> str:
        log_record = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "name": record.name,
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_record)


def setup_logging(level: str = "WARNING", json_format: bool = False) -> None:
    """Set up logging configuration.

    Logs go to stderr; stdout is reserved for command output. Calling this
    again replaces the handler installed by the previous call.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_format: Whether to output logs in JSON format
    """
    log_level = getattr(logging, level.upper())

    if json_format:
        formatter: logging.Formatter = JsonFormatter()
    else:
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    for handler in list(root_logger.handlers):
        if handler.get_name() == HANDLER_NAME:
            root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.set_name(HANDLER_NAME)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)


def read_document(source: Optional[str]) -> Dict[str, Any]:
    """Read a JSON input document.

    Args:
        source: Path to a JSON file, an inline JSON object (starting with
            "{"), or "-" for stdin

    Returns:
        The decoded JSON object

    Raises:
        InputError: If the source is missing, unreadable or not a JSON object
    """
    if source is None:
        raise InputError("an input document is required (--input FILE, --input '{...}' or --input -)")

    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        if not os.path.exists(source):
            raise InputError(f"Input file not found: {source}")
        with open(source, "r") as f:
            text = f.read()

    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON input: {e}")
    if not isinstance(document, dict):
        raise InputError("the input document must be a JSON object")
    return document


def load_input(
    source: Optional[str], model: Type[Model], overrides: Optional[Dict[str, Any]] = None
) -> Model:
    """Load and validate an input document.

    Args:
        source: See read_document; None is allowed when overrides carry
            every required field
        model: Pydantic model to validate against
        overrides: Values that replace fields of the document (command-line
            options); None entries are skipped

    Returns:
        Validated model instance

    Raises:
        InputError: If the document is missing, malformed or invalid
    """
    extra = {key: value for key, value in (overrides or {}).items() if value is not None}
    data = read_document(source) if source is not None or not extra else {}
    data.update(extra)

    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InputError(f"Invalid input: {e}")
