from enum import Enum


class ExperimentTag(Enum):
    SPECTRA = 'spectra'
    TRANSFORM_CHECK = 'transform-check'
    DISPERSIVE = 'dispersive'
    ESTIMATES = 'estimates'
    IDENTITY = 'identity'
    MKERNEL = 'mkernel'
    NLS = 'nls'
