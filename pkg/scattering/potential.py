from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from consts.scattering_consts import SUPPORT_THRESHOLD, DECAY_POWER, HARDY_CONSTANT
from consts.typing_consts import RealArray
from exceptions import ConfigurationError, NumericError
from grids.radial_grid import RadialGrid
from models.potential_form import PotentialForm


@dataclass(frozen=True)
class Potential:
    """
    Radial potential V(r). `amplitude` is the signed V₀ (negative means attractive); `width` is the length scale a.
    For the tabulated form V(r) = V₀ · profile(r), linearly interpolated and zero beyond the last radius.
    """
    form: PotentialForm
    amplitude: float
    width: float = 1.0
    table_radii: Optional[Tuple[float, ...]] = None
    table_profile: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if not np.isfinite(self.amplitude):
            raise ConfigurationError(f"Potential amplitude must be finite, got {self.amplitude}")

        if not self.width > 0:
            raise ConfigurationError(f"Potential width must be positive, got {self.width}")

        if self.form == PotentialForm.TABLE:
            self._validate_table()

    def __call__(self, r: RealArray) -> RealArray:
        r = np.asarray(r, dtype=float)

        if self.is_zero:
            return np.zeros_like(r)

        if self.form == PotentialForm.GAUSSIAN:
            return self.amplitude * np.exp(-(r / self.width) ** 2)

        if self.form == PotentialForm.EXPONENTIAL:
            return self.amplitude * np.exp(-r / self.width)

        if self.form == PotentialForm.SPHERICAL_WELL:
            return np.where(r < self.width, self.amplitude, 0.0)

        return self.amplitude * np.interp(r, self.table_radii, self.table_profile, right=0.0)

    @classmethod
    def free(cls) -> "Potential":
        return cls(form=PotentialForm.GAUSSIAN, amplitude=0.0)

    @property
    def is_zero(self) -> bool:
        return self.amplitude == 0

    @cached_property
    def support_radius(self) -> float:
        """Radius R_V beyond which |V| < 10⁻¹⁴."""
        magnitude = abs(self.amplitude)

        if magnitude <= SUPPORT_THRESHOLD:
            return 0.0

        if self.form == PotentialForm.GAUSSIAN:
            return float(self.width * np.sqrt(np.log(magnitude / SUPPORT_THRESHOLD)))

        if self.form == PotentialForm.EXPONENTIAL:
            return float(self.width * np.log(magnitude / SUPPORT_THRESHOLD))

        if self.form == PotentialForm.SPHERICAL_WELL:
            return float(self.width)

        significant = np.nonzero(magnitude * np.abs(self.table_profile) >= SUPPORT_THRESHOLD)[0]
        return float(self.table_radii[significant[-1] + 1]) if significant.size else 0.0

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        """Radii where V is not smooth; the radial integrator places mesh points on them."""
        if self.form == PotentialForm.SPHERICAL_WELL:
            return (self.width,)

        if self.form == PotentialForm.TABLE:
            return tuple(self.table_radii)

        return tuple()

    @property
    def is_repulsive(self) -> bool:
        if self.form == PotentialForm.TABLE:
            return self.amplitude * min(self.table_profile) >= 0

        return self.amplitude >= 0

    def _validate_table(self) -> None:
        if self.table_radii is None or self.table_profile is None:
            raise ConfigurationError("Tabulated potentials need both `table_radii` and `table_profile`")

        radii = np.asarray(self.table_radii)

        if len(self.table_radii) != len(self.table_profile) or radii.size < 2:
            raise ConfigurationError("`table_radii` and `table_profile` must have the same length ≥ 2")

        if radii[0] < 0 or np.any(np.diff(radii) <= 0):
            raise ConfigurationError("`table_radii` must be non-negative and strictly increasing")

        if np.max(np.abs(self.table_profile)) > 1:
            raise ConfigurationError("`table_profile` is a shape in [−1, 1]; put the scale in `amplitude`")

        if self.table_profile[-1] != 0:
            raise ConfigurationError("Tabulated potentials must vanish at the last radius")


def decay_constant(potential: Potential, grid: RadialGrid) -> float:
    """C = max_i |V(r_i)|·⟨r_i⟩⁶, finite for every admissible potential."""
    japanese_bracket = np.sqrt(1 + grid.nodes ** 2)
    constant = float(np.max(np.abs(potential(grid.nodes)) * japanese_bracket ** DECAY_POWER))

    if not np.isfinite(constant):
        raise NumericError(f"Potential {potential} violates the ⟨r⟩^-{DECAY_POWER} decay bound on the grid")

    return constant


def hardy_condition(potential: Potential, grid: RadialGrid) -> bool:
    """V(r) ≥ −1/(4r²) at every node, which excludes bound states and zero resonances."""
    return bool(np.all(potential(grid.nodes) >= -HARDY_CONSTANT / grid.nodes ** 2))
