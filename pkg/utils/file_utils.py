import json
import os
from pathlib import Path
from typing import Union

from pandas import DataFrame

from consts.miscellaneous_consts import JSON_ENCODING, UTF_8_ENCODING


def to_json(d: Union[dict, list], path: str) -> None:
    _ensure_parent_dir(path)

    with open(path, 'w', encoding=JSON_ENCODING) as f:
        json.dump(d, f, ensure_ascii=False, indent=4)


def read_json(path: str) -> Union[dict, list]:
    with open(path, 'r', encoding=JSON_ENCODING) as f:
        return json.load(f)


def to_csv(data: DataFrame, output_path: str, header: bool = True, mode: str = 'w') -> None:
    _ensure_parent_dir(output_path)
    data.to_csv(output_path, index=False, encoding=UTF_8_ENCODING, header=header, mode=mode)


def _ensure_parent_dir(path: str) -> None:
    dir_path = Path(os.path.dirname(path) or '.')

    if not os.path.exists(dir_path):
        dir_path.mkdir(parents=True)
