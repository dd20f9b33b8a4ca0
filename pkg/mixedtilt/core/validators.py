"""
Input validation for the mixed tilt stability toolkit

Numeric checks hand back exact Fractions so validated values go straight
into the arithmetic.
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Union

from .exceptions import ValidationError, ConfigurationError
from .logger import logger
from .rationals import RationalLike, parse_rational

Number = Union[int, float]


def _is_int(value: Any) -> bool:
    # bool is an int subclass but never a valid count
    return isinstance(value, int) and not isinstance(value, bool)


class Validator:
    """Static checks raising ValidationError (or ConfigurationError for documents)."""

    @staticmethod
    def validate_rational(value: Any, name: str = "value") -> Fraction:
        """
        Accept an int, a Fraction or a rational string such as ``"-1/2"``.

        Floats are refused: they cannot be converted without rounding.
        """
        if _is_int(value) or isinstance(value, Fraction):
            return Fraction(value)
        if isinstance(value, str):
            return parse_rational(value)
        kind = "a boolean" if isinstance(value, bool) else type(value).__name__
        raise ValidationError(f"{name} must be an int, Fraction or rational string, got {kind}")

    @staticmethod
    def validate_positive(value: RationalLike, name: str = "value",
                          allow_zero: bool = False) -> Fraction:
        q = Validator.validate_rational(value, name)
        if q < 0 or (q == 0 and not allow_zero):
            bound = "non-negative" if allow_zero else "positive"
            raise ValidationError(f"{name} must be {bound}, got {q}")
        return q

    @staticmethod
    def validate_int(value: Any, name: str = "value") -> int:
        if not _is_int(value):
            raise ValidationError(f"{name} must be an integer, got {value!r}")
        return value

    @staticmethod
    def validate_non_negative_int(value: Any, name: str = "value") -> int:
        n = Validator.validate_int(value, name)
        if n < 0:
            raise ValidationError(f"{name} must be non-negative, got {n}")
        return n

    @staticmethod
    def validate_range(value: Number, min_val: Number, max_val: Number,
                       name: str = "value") -> Number:
        """Bounds check for plain configuration numbers (ints or floats)."""
        if not (_is_int(value) or isinstance(value, float)):
            raise ValidationError(f"{name} must be a number, got {type(value).__name__}")
        if not min_val <= value <= max_val:
            raise ValidationError(f"{name} must be between {min_val} and {max_val}, got {value}")
        return value

    @staticmethod
    def validate_choice(value: Any, choices: Iterable[str], name: str = "value") -> str:
        allowed = list(choices)
        if value not in allowed:
            raise ValidationError(f"{name} must be one of {allowed}, got {value!r}")
        return value

    @staticmethod
    def validate_file_exists(filepath: Union[str, Path], name: str = "file") -> Path:
        path = Path(filepath)
        if not path.is_file():
            problem = "is not a file" if path.exists() else "does not exist"
            raise ValidationError(f"{name} {problem}: {filepath}")
        logger.debug(f"Found {name}: {path}")
        return path

    @staticmethod
    def validate_config_dict(config: Any, required_keys: List[str],
                             name: str = "configuration") -> dict:
        """
        Check that a loaded YAML/JSON section is a mapping carrying
        ``required_keys``.

        Raises:
            ConfigurationError: not a mapping, or keys are missing
        """
        if not isinstance(config, dict):
            raise ConfigurationError(f"{name} must be a mapping, got {type(config).__name__}")
        missing = [key for key in required_keys if key not in config]
        if missing:
            raise ConfigurationError(f"{name} is missing keys: {missing}")
        return config
