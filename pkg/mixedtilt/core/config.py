"""
Configuration management for the mixed tilt stability toolkit

Provides centralized configuration with validation, defaults and YAML
round-tripping.
"""

from typing import Dict, Any, Optional, Union
from pathlib import Path
from fractions import Fraction
import yaml
from dataclasses import asdict, dataclass, field, fields

from .constants import (
    DEFAULT_SEED, DEFAULT_SAMPLES, DEFAULT_MAX_NUMERATOR, DEFAULT_MAX_DENOMINATOR,
    DEFAULT_ENUMERATION_MAX_ABS, DEFAULT_SCAN_PRECISION, DEFAULT_T0,
    DEFAULT_SLOW_CALL_SECONDS, DEFAULT_LOG_LEVEL, LOG_LEVELS,
)
from .exceptions import ConfigurationError, ValidationError
from .validators import Validator
from .logger import logger


@dataclass
class SamplingConfig:
    """Random sampling used by the property checks"""
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    max_numerator: int = DEFAULT_MAX_NUMERATOR  # |p| bound of sampled p/q
    max_denominator: int = DEFAULT_MAX_DENOMINATOR

    def validate(self):
        """Validate sampling configuration"""
        Validator.validate_non_negative_int(self.seed, "seed")
        Validator.validate_range(self.samples, 1, 10_000_000, "samples")
        Validator.validate_range(self.max_numerator, 1, 10_000, "max_numerator")
        Validator.validate_range(self.max_denominator, 1, 10_000, "max_denominator")


@dataclass
class EnumerationConfig:
    """Destabilizer enumeration defaults"""
    max_abs: str = DEFAULT_ENUMERATION_MAX_ABS
    lattice: bool = True
    show_progress: bool = False

    def validate(self):
        """Validate enumeration configuration"""
        Validator.validate_positive(self.max_abs, "max_abs", allow_zero=True)

    @property
    def max_abs_value(self) -> Fraction:
        return Validator.validate_rational(self.max_abs, "max_abs")


@dataclass
class ScanConfig:
    """Wall curve scan output"""
    precision: int = DEFAULT_SCAN_PRECISION  # digits of the approximate alpha column

    def validate(self):
        """Validate scan configuration"""
        Validator.validate_range(self.precision, 0, 50, "precision")


@dataclass
class RegionConfig:
    """Parameter region checker defaults"""
    default_t0: str = DEFAULT_T0

    def validate(self):
        """Validate region configuration"""
        Validator.validate_positive(self.default_t0, "default_t0", allow_zero=True)

    @property
    def default_t0_value(self) -> Fraction:
        return Validator.validate_rational(self.default_t0, "default_t0")


@dataclass
class ToolkitConfig:
    """Main toolkit configuration"""
    _SECTIONS = ('sampling', 'enumeration', 'scan', 'region')
    _LOGGING_KEYS = ('log_dir', 'log_level', 'log_to_file', 'slow_call_seconds')

    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)
    region: RegionConfig = field(default_factory=RegionConfig)

    # Logging
    log_dir: Path = field(default_factory=lambda: Path("logs"))
    log_level: str = DEFAULT_LOG_LEVEL
    log_to_file: bool = False
    slow_call_seconds: float = DEFAULT_SLOW_CALL_SECONDS

    def validate(self):
        """Validate all configuration"""
        try:
            self.sampling.validate()
            self.enumeration.validate()
            self.scan.validate()
            self.region.validate()
            Validator.validate_choice(
                str(self.log_level).upper(),
                LOG_LEVELS,
                "log_level",
            )
            Validator.validate_range(self.slow_call_seconds, 0, 3600, "slow_call_seconds")
        except ValidationError as e:
            raise ConfigurationError(str(e)) from e

        logger.debug("Configuration validated successfully")

    def apply_logging(self):
        """Push the logging section into the global logger"""
        logger.set_level(self.log_level)
        logger.slow_call_seconds = self.slow_call_seconds
        if self.log_to_file:
            logger.enable_file_output(self.log_dir)

    @classmethod
    def from_dict(cls, config_dict: Optional[Dict[str, Any]]) -> 'ToolkitConfig':
        """
        Build and validate a configuration from a parsed YAML document.

        Missing sections keep their defaults; unknown keys inside a section
        are logged and skipped.
        """
        config = cls()
        document = Validator.validate_config_dict(config_dict or {}, [])

        for section_name in cls._SECTIONS:
            section = getattr(config, section_name)
            known = {f.name for f in fields(section)}
            values = Validator.validate_config_dict(
                document.get(section_name) or {}, [],
                f"configuration section {section_name!r}",
            )
            for key, value in values.items():
                if key not in known:
                    logger.warning(f"Ignoring unknown configuration key {section_name}.{key}")
                    continue
                setattr(section, key, value)

        for key in cls._LOGGING_KEYS:
            if key in document:
                setattr(config, key, Path(document[key]) if key == 'log_dir' else document[key])

        config.validate()
        return config

    @classmethod
    def from_yaml(cls, filepath: Union[str, Path]) -> 'ToolkitConfig':
        """
        Raises:
            ConfigurationError: missing file, unreadable file or malformed YAML
        """
        try:
            path = Validator.validate_file_exists(filepath, "configuration file")
            document = yaml.safe_load(path.read_text())
        except ValidationError as e:
            raise ConfigurationError(str(e)) from e
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Failed to parse YAML configuration: {e}") from e
        except OSError as e:
            raise ConfigurationError(f"Failed to read configuration: {e}") from e

        logger.info(f"Loaded configuration from {path}")
        return cls.from_dict(document)

    def to_dict(self) -> Dict[str, Any]:
        """Plain YAML-ready mapping; rationals stay strings."""
        document: Dict[str, Any] = {name: asdict(getattr(self, name)) for name in self._SECTIONS}
        document['enumeration']['max_abs'] = str(self.enumeration.max_abs)
        document['region']['default_t0'] = str(self.region.default_t0)
        for key in self._LOGGING_KEYS:
            document[key] = getattr(self, key)
        document['log_dir'] = str(self.log_dir)
        return document

    def save_to_yaml(self, filepath: Union[str, Path]):
        try:
            Path(filepath).write_text(yaml.safe_dump(self.to_dict(), sort_keys=False))
        except OSError as e:
            raise ConfigurationError(f"Failed to save configuration: {e}") from e
        logger.info(f"Saved configuration to {filepath}")


_global_config: Optional[ToolkitConfig] = None


def get_config() -> ToolkitConfig:
    """The process-wide configuration, created from defaults on first use."""
    global _global_config
    if _global_config is None:
        _global_config = ToolkitConfig()
        _global_config.validate()
    return _global_config


def set_config(config: ToolkitConfig):
    global _global_config
    config.validate()
    _global_config = config
    logger.debug("Global configuration updated")


def load_config(filepath: Union[str, Path]) -> ToolkitConfig:
    """Read ``filepath`` and install it as the global configuration."""
    config = ToolkitConfig.from_yaml(filepath)
    set_config(config)
    return config
