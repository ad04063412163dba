from enum import Enum


class LittlewoodPaleyMode(Enum):
    BAND = 'band'
    LOW = 'low'
