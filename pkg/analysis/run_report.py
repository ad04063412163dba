from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from dataclasses_json import dataclass_json

from analysis.check_record import CheckRecord
from analysis.environment_fingerprint import EnvironmentFingerprint
from config.experiment_config import ExperimentConfig
from consts.miscellaneous_consts import SCHEMA_VERSION
from exceptions import ConfigurationError
from models.experiment_tag import ExperimentTag
from tools.content_hasher import ContentHasher

RUN_ID_LENGTH = 12


@dataclass_json
@dataclass
class RunReport:
    """
    One run: every check exactly once, the environment it ran in and the validated config it ran from. `partial`
    marks a run whose pipeline stopped early; its artifacts cover only the stages that finished.
    """
    run_id: str
    tag: ExperimentTag
    checks: List[CheckRecord]
    fingerprint: EnvironmentFingerprint
    config: Dict[str, Any]
    artifacts: List[str] = field(default_factory=list)
    partial: bool = False
    error: Optional[str] = None
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        names = [check.name for check in self.checks]
        duplicates = sorted({name for name in names if names.count(name) > 1})

        if duplicates:
            raise ConfigurationError(f"Checks {duplicates} appear more than once in run {self.run_id}")

    @property
    def hard_failures(self) -> List[CheckRecord]:
        return [check for check in self.checks if check.is_hard_failure]

    @property
    def succeeded(self) -> bool:
        return not self.partial and not self.hard_failures


def config_echo(config: ExperimentConfig) -> Dict[str, Any]:
    """`asdict` of the config with enums as their values, so that it loads back through the config parser."""
    return asdict(config, dict_factory=lambda items: {key: _plain(value) for key, value in items})


def make_run_id(config: ExperimentConfig) -> str:
    digest = ContentHasher().hash(config_echo(config))
    return f'{config.tag.value}-{digest[:RUN_ID_LENGTH]}'


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value

    if isinstance(value, tuple):
        return list(value)

    return value
