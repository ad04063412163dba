from enum import Enum
from typing import Optional

from dacite import Config, DaciteError, from_dict

from config.experiment_config import ExperimentConfig
from config.experiment_config_validator import ExperimentConfigValidator
from exceptions import ConfigurationError
from models.experiment_tag import ExperimentTag
from utils.file_utils import read_json

DACITE_CONFIG = Config(type_hooks={float: float}, cast=[Enum], strict=True)


def load_config(path: Optional[str],
                tag: ExperimentTag,
                seed: Optional[int] = None,
                unsafe: bool = False) -> ExperimentConfig:
    """Parses the JSON document at `path` (defaults when absent) for `tag`, applies the CLI overrides, validates."""
    data = read_json(path) if path is not None else {}

    if not isinstance(data, dict):
        raise ConfigurationError(f"Config {path} must hold a JSON object")

    declared_tag = data.get('tag', tag.value)

    if declared_tag != tag.value:
        raise ConfigurationError(f"Config {path} is tagged `{declared_tag}` but the `{tag.value}` experiment was requested")

    config = parse_config({**data, 'tag': tag.value})

    if seed is not None:
        config.seed = seed

    config.unsafe = config.unsafe or unsafe
    ExperimentConfigValidator().validate(config)

    return config


def parse_config(data: dict) -> ExperimentConfig:
    try:
        return from_dict(data_class=ExperimentConfig, data=data, config=DACITE_CONFIG)
    except (DaciteError, ValueError) as e:
        raise ConfigurationError(f"Config schema violation: {e}") from e
