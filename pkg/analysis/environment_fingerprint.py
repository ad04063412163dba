import platform
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
import scipy
from dataclasses_json import dataclass_json

from utils.datetime_utils import get_current_datetime
from utils.vcs_utils import get_current_commit_hash, is_dirty_worktree


@dataclass_json
@dataclass
class EnvironmentFingerprint:
    commit: Optional[str]
    dirty: Optional[bool]
    timestamp: str
    python_version: str
    numpy_version: str
    scipy_version: str
    pandas_version: str

    @classmethod
    def collect(cls) -> "EnvironmentFingerprint":
        return cls(
            commit=get_current_commit_hash(),
            dirty=is_dirty_worktree(),
            timestamp=get_current_datetime(),
            python_version=platform.python_version(),
            numpy_version=np.__version__,
            scipy_version=scipy.__version__,
            pandas_version=pd.__version__
        )
