import hashlib
import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any


class ContentHasher:
    """SHA-256 over a canonical JSON rendering of parameters; used as the on-disk cache key."""

    def hash(self, *components: Any) -> str:
        serialized = json.dumps([self._to_serializable(component) for component in components], sort_keys=True)
        return hashlib.sha256(serialized.encode('utf-8')).hexdigest()

    def _to_serializable(self, component: Any) -> Any:
        if is_dataclass(component):
            return {type(component).__name__: self._to_serializable(asdict(component))}

        if isinstance(component, Enum):
            return component.value

        if isinstance(component, dict):
            return {str(key): self._to_serializable(value) for key, value in component.items()}

        if isinstance(component, (list, tuple)):
            return [self._to_serializable(value) for value in component]

        if isinstance(component, float):
            return float.hex(component)

        return component
