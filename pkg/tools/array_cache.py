import os
from typing import Dict, Optional

import numpy as np

from consts.miscellaneous_consts import NPZ_FILE_SUFFIX
from tools.logging import logger


class ArrayCache:
    def __init__(self, dir_path: str):
        self._dir_path = dir_path

    def load(self, key: str) -> Optional[Dict[str, np.ndarray]]:
        path = self._build_path(key)

        if not os.path.exists(path):
            logger.info(f"Cache miss for `{key[:12]}` in {self._dir_path}")
            return None

        with np.load(path) as archive:
            return {name: archive[name] for name in archive.files}

    def save(self, key: str, arrays: Dict[str, np.ndarray]) -> None:
        os.makedirs(self._dir_path, exist_ok=True)
        np.savez(self._build_path(key), **arrays)

    def _build_path(self, key: str) -> str:
        return os.path.join(self._dir_path, f'{key}{NPZ_FILE_SUFFIX}')
