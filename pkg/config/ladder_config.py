from dataclasses import dataclass

from consts.transform_consts import DEFAULT_LADDER_DEPTH
from transform.dyadic_ladder import DyadicLadder


@dataclass
class LadderConfig:
    depth: int = DEFAULT_LADDER_DEPTH

    def to_ladder(self) -> DyadicLadder:
        return DyadicLadder(depth=self.depth)
