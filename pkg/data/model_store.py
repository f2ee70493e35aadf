"""Persistence of trained scorer models as self-describing JSON."""

import json
import logging
from pathlib import Path
from typing import Union

from config import MODEL_FORMAT_VERSION
from errors import ModelFormatError
from models import LinearKind, LinearModel, NbModel

logger = logging.getLogger(__name__)

Model = Union[NbModel, LinearModel]

_LINEAR_KINDS = {kind.value for kind in LinearKind}


def save_model(model: Model, path: str) -> None:
    """Write a model file.

    Args:
        model: Trained NbModel or LinearModel
        path: Output file; parent directories are created

    Raises:
        OSError: If the file cannot be written
    """
    file_to_save = Path(path)
    data = {"format_version": MODEL_FORMAT_VERSION}
    data.update(model.to_dict())
    try:
        file_to_save.parent.mkdir(parents=True, exist_ok=True)
        temp_file = file_to_save.with_name(file_to_save.name + ".tmp")
        with open(temp_file, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, sort_keys=True)
        temp_file.replace(file_to_save)
        logger.info(f"Saved {data['kind']} model ({len(model.vocabulary)} tokens) to {file_to_save}")
    except Exception as e:
        logger.error(f"Error saving model: {e}")
        raise


def load_model(path: str) -> Model:
    """Read a model file written by save_model.

    Raises:
        ModelFormatError: If the file is not a model, or its kind or
            format version is unknown
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{path} is not valid JSON: {e}") from e

    if not isinstance(data, dict):
        raise ModelFormatError(f"{path} does not hold a model object")
    version = data.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ModelFormatError(f"Unsupported model format version {version!r} in {path}")

    kind = data.get("kind")
    try:
        if kind == "nb":
            model: Model = NbModel.from_dict(data)
        elif kind in _LINEAR_KINDS:
            model = LinearModel.from_dict(data)
        else:
            raise ModelFormatError(f"Unknown model kind {kind!r} in {path}")
    except (KeyError, TypeError, ValueError) as e:
        raise ModelFormatError(f"Invalid {kind} model in {path}: {e}") from e

    logger.info(f"Loaded {kind} model from {path}")
    return model
