from dataclasses import dataclass, field
from typing import Optional

from config.estimates_config import EstimatesConfig
from config.grid_config import GridConfig
from config.ladder_config import LadderConfig
from config.nls_config import NLSConfig
from config.potential_config import PotentialConfig
from config.tolerance_config import ToleranceConfig
from models.experiment_tag import ExperimentTag


@dataclass
class ExperimentConfig:
    tag: ExperimentTag
    potential: PotentialConfig = field(default_factory=PotentialConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    ladder: LadderConfig = field(default_factory=LadderConfig)
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    estimates: EstimatesConfig = field(default_factory=EstimatesConfig)
    nls: NLSConfig = field(default_factory=NLSConfig)
    output_dir: Optional[str] = None
    seed: int = 0
    unsafe: bool = False
