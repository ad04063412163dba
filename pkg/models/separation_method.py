from enum import Enum


class SeparationMethod(Enum):
    DYADIC = 'dyadic'
    GLOBAL = 'global'
