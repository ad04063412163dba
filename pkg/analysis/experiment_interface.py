from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from pandas import DataFrame

from analysis.check_record import CheckRecord
from models.experiment_tag import ExperimentTag


@dataclass
class ExperimentOutcome:
    checks: List[CheckRecord] = field(default_factory=list)
    artifacts: Dict[str, DataFrame] = field(default_factory=dict)
    partial: bool = False
    error: Optional[str] = None


class IExperiment(ABC):
    @abstractmethod
    def run(self) -> ExperimentOutcome:
        raise NotImplementedError

    @property
    @abstractmethod
    def tag(self) -> ExperimentTag:
        raise NotImplementedError
