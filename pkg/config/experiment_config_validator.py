from dataclasses import fields
from typing import Any, Tuple

from config.estimates_config import EstimatesConfig
from config.experiment_config import ExperimentConfig
from config.grid_config import GridConfig
from config.ladder_config import LadderConfig
from config.nls_config import NLSConfig
from config.potential_config import PotentialConfig
from consts.grid_consts import MIN_GRID_NODES
from consts.miscellaneous_consts import DEFAULT_RANGE_FACTOR
from exceptions import ConfigurationError
from pseudoproduct.holder import shifted_exponents, validate_holder_exponents
from pseudoproduct.symbol_library import TEST_SYMBOLS

NON_NEGATIVE_FIELDS = ('l_max', 'amplitude')
COUNT_FIELDS = ('n_r', 'n_k', 'coarse_n_k')
SIGNED_FIELDS = ('amplitude',)


class ExperimentConfigValidator:
    """
    Positivity, minimal node counts, Hölder exponent consistency and the ×10 range rule against the section defaults.
    Tolerances are exempt from the range rule; `unsafe` lifts it altogether.
    """

    def validate(self, config: ExperimentConfig) -> None:
        sections = [
            ('potential', config.potential, PotentialConfig()),
            ('grid', config.grid, GridConfig()),
            ('ladder', config.ladder, LadderConfig()),
            ('estimates', config.estimates, EstimatesConfig()),
            ('nls', config.nls, NLSConfig())
        ]

        for section_name, section, defaults in sections:
            for name, value, default in self._numeric_fields(section, defaults):
                self._validate_sign(f'{section_name}.{name}', name, value)

                if not config.unsafe:
                    self._validate_range(f'{section_name}.{name}', name, value, default)

        for name, value in vars(config.tolerances).items():
            if not value > 0:
                raise ConfigurationError(f"Tolerance `{name}` must be positive, got {value}")

        self._validate_estimates(config.estimates)
        self._validate_grids(config)

    @staticmethod
    def _numeric_fields(section: Any, defaults: Any):
        for section_field in fields(section):
            value = getattr(section, section_field.name)

            if isinstance(value, (int, float)) and not isinstance(value, bool):
                yield section_field.name, value, getattr(defaults, section_field.name)

    @staticmethod
    def _validate_sign(path: str, name: str, value: float) -> None:
        if name in SIGNED_FIELDS:
            return

        if name in NON_NEGATIVE_FIELDS:
            if value < 0:
                raise ConfigurationError(f"`{path}` must be non-negative, got {value}")
            return

        if not value > 0:
            raise ConfigurationError(f"`{path}` must be positive, got {value}")

        if name in COUNT_FIELDS and value < MIN_GRID_NODES:
            raise ConfigurationError(f"`{path}` must be at least {MIN_GRID_NODES}, got {value}")

    @staticmethod
    def _validate_range(path: str, name: str, value: float, default: float) -> None:
        lower, upper = _allowed_range(abs(default))

        if value == 0 and name in NON_NEGATIVE_FIELDS:
            return

        if not lower <= abs(value) <= upper:
            raise ConfigurationError(
                f"`{path}` = {value} is outside the documented range [{lower:g}, {upper:g}]; pass --unsafe to override"
            )

    @staticmethod
    def _validate_estimates(estimates: EstimatesConfig) -> None:
        validate_holder_exponents(estimates.p, estimates.q, estimates.r_prime)
        shifted_exponents(estimates.p, estimates.q)

        if estimates.commutator_q < estimates.commutator_p:
            raise ConfigurationError(
                f"Commutator harness maps L^p to L^q with q ≥ p, got p={estimates.commutator_p}, "
                f"q={estimates.commutator_q}"
            )

        if not 2 <= estimates.dispersive_p <= 6:
            raise ConfigurationError(f"Dispersive exponent must lie in [2, 6], got {estimates.dispersive_p}")

        if estimates.dispersive_final_time <= 1:
            raise ConfigurationError("Dispersive ratios run over t ∈ [1, T] and need T > 1")

        unknown = [symbol for symbol in estimates.symbols if symbol not in TEST_SYMBOLS]

        if unknown:
            raise ConfigurationError(f"Unknown test symbols {unknown}; choose from {sorted(TEST_SYMBOLS)}")

    @staticmethod
    def _validate_grids(config: ExperimentConfig) -> None:
        config.grid.to_grids()
        config.nls.to_grids()
        config.potential.to_potential()


def _allowed_range(default: float) -> Tuple[float, float]:
    if default == 0:
        return 0.0, DEFAULT_RANGE_FACTOR

    return default / DEFAULT_RANGE_FACTOR, default * DEFAULT_RANGE_FACTOR
