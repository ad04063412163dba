from enum import Enum


class PotentialForm(Enum):
    GAUSSIAN = 'gaussian'
    SPHERICAL_WELL = 'spherical_well'
    EXPONENTIAL = 'exponential'
    TABLE = 'table'
