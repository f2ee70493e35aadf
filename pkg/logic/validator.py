"""
Validation of thresholds, grids and experiment settings.

This module provides validators for:
- Threshold ranges (band widths and AST)
- Threshold and AST grids (non-empty, deduplicated)
- Whole experiment configurations before a run starts
"""

import logging
from typing import List, Optional, Sequence, Tuple

from config import SCORER_EXTERNAL, SCORER_KINDS
from errors import ConfigError
from models import ExperimentConfig, Thresholds

logger = logging.getLogger(__name__)


class Validator:
    """Configuration rule validator."""

    @staticmethod
    def validate_band_width(value: float, name: str = "t") -> Tuple[bool, Optional[str]]:
        """Check that an omission band width lies in [0, 0.5).

        Returns:
            Tuple of (is_valid, error_message)
        """
        if not 0.0 <= value < 0.5:
            return (False, f"{name} must be in [0, 0.5), got {value}")
        return (True, None)

    @staticmethod
    def validate_ast(value: float) -> Tuple[bool, Optional[str]]:
        """Check that an actor significance threshold lies in (0, 1)."""
        if not 0.0 < value < 1.0:
            return (False, f"ast must be in (0, 1), got {value}")
        return (True, None)

    @staticmethod
    def validate_thresholds(thresholds: Thresholds) -> Tuple[bool, List[str]]:
        """Check all ranges of a Thresholds object.

        Returns:
            Tuple of (is_valid, list_of_error_messages)
        """
        checks = [
            Validator.validate_band_width(thresholds.t_adult, "t_adult"),
            Validator.validate_band_width(thresholds.t_child, "t_child"),
            Validator.validate_ast(thresholds.ast),
        ]
        errors = [message for ok, message in checks if not ok]
        return (len(errors) == 0, errors)

    @staticmethod
    def dedupe_grid(values: Sequence[float], name: str) -> List[float]:
        """Drop repeated grid values, keeping first occurrences in order.

        A warning is logged when anything is dropped.
        """
        unique = list(dict.fromkeys(float(v) for v in values))
        if len(unique) != len(values):
            logger.warning(f"Duplicate values removed from {name}: {list(values)} -> {unique}")
        return unique

    @staticmethod
    def validate_grid(values: Sequence[float], name: str, is_t: bool) -> Tuple[bool, List[str]]:
        """Check that a grid is non-empty and every value is in range."""
        if not values:
            return (False, [f"{name} must not be empty"])
        errors = []
        for value in values:
            ok, message = Validator.validate_band_width(value, name) if is_t else Validator.validate_ast(value)
            if not ok:
                errors.append(message)
        return (len(errors) == 0, errors)

    @staticmethod
    def validate_experiment_config(config: ExperimentConfig) -> Tuple[bool, List[str]]:
        """Check an experiment configuration before it runs.

        Returns:
            Tuple of (is_valid, list_of_error_messages)
        """
        errors: List[str] = []

        if config.scorer not in SCORER_KINDS:
            errors.append(f"unknown scorer {config.scorer!r}, expected one of {', '.join(SCORER_KINDS)}")
        if config.scorer == SCORER_EXTERNAL and not config.scores_path:
            errors.append("the external scorer needs a scores file")
        if not 0.0 < config.split_fraction < 1.0:
            errors.append(f"split_fraction must be in (0, 1), got {config.split_fraction}")
        if not config.alpha > 0:
            errors.append(f"alpha must be > 0, got {config.alpha}")
        if config.epochs < 1:
            errors.append(f"epochs must be >= 1, got {config.epochs}")
        if not config.learning_rate > 0:
            errors.append(f"learning_rate must be > 0, got {config.learning_rate}")
        if config.min_messages_corpus < 0 or config.min_messages_mla < 0:
            errors.append("message minimums must be >= 0")
        if config.workers < 1:
            errors.append(f"workers must be >= 1, got {config.workers}")

        errors.extend(Validator.validate_grid(config.t_grid, "t_grid", is_t=True)[1])
        errors.extend(Validator.validate_grid(config.ast_grid, "ast_grid", is_t=False)[1])
        for name in ("t_adult", "t_child"):
            value = getattr(config, name)
            if value is not None:
                ok, message = Validator.validate_band_width(value, name)
                if not ok:
                    errors.append(message)

        return (len(errors) == 0, errors)

    @staticmethod
    def require_valid_config(config: ExperimentConfig) -> None:
        """Raise ConfigError listing every problem of a configuration."""
        is_valid, errors = Validator.validate_experiment_config(config)
        if not is_valid:
            raise ConfigError("; ".join(errors))

    @staticmethod
    def require_valid_thresholds(thresholds: Thresholds) -> None:
        """Raise ConfigError if a Thresholds object is out of range."""
        is_valid, errors = Validator.validate_thresholds(thresholds)
        if not is_valid:
            raise ConfigError("; ".join(errors))
