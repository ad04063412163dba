from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from consts.grid_consts import TAIL_REGION_FRACTION
from consts.transform_consts import DILATION_EXPONENTS, FAMILY_RESOLUTION_TOLERANCE, MAX_MODULATION_FREQUENCY
from consts.typing_consts import RadialFunction
from exceptions import ConfigurationError
from grids.axisymmetric_field import AxisymmetricField
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from tools.logging import logger
from transform.distorted_fourier_transform import flat_forward


@dataclass
class FamilyMember:
    parameter: float
    field: AxisymmetricField


def gaussian_profile(width: float = 1.0, power: int = 0) -> RadialFunction:
    """r^power · e^{−r²/(2·width²)}."""
    return lambda r: r ** power * np.exp(-0.5 * (r / width) ** 2)


def band_limited_bump(center: float = 1.0) -> RadialFunction:
    """A smooth radial bump whose flat spectrum decays like a Gaussian around `center`."""
    return lambda r: np.sinc(center * r / np.pi) * np.exp(-0.25 * r ** 2)


def dilation_family(profile: RadialFunction,
                    radial_grid: RadialGrid,
                    momentum_grid: MomentumGrid,
                    exponents: Sequence[int] = DILATION_EXPONENTS,
                    l: int = 0) -> List[FamilyMember]:
    """f_λ(x) = f(λx) for λ = 2^e, keeping only the members the grids resolve in space and in frequency."""
    members = []

    for exponent in exponents:
        scale = 2.0 ** exponent
        field = AxisymmetricField.from_radial(radial_grid, lambda r: profile(scale * r), l=l)

        if is_resolved(field, momentum_grid):
            members.append(FamilyMember(parameter=scale, field=field))
        else:
            logger.warning(f"Dropping dilation λ={scale:g}: the grids do not resolve it")

    if not members:
        raise ConfigurationError("No member of the dilation family is resolved by the grids")

    return members


def modulated_family(profile: RadialFunction,
                     radial_grid: RadialGrid,
                     momentum_grid: MomentumGrid,
                     frequencies: Sequence[float]) -> List[FamilyMember]:
    """f(r)·e^{ik₀r} for k₀ ≤ MAX_MODULATION_FREQUENCY."""
    members = []

    for frequency in frequencies:
        if frequency > MAX_MODULATION_FREQUENCY:
            raise ConfigurationError(f"Modulation k₀={frequency} exceeds {MAX_MODULATION_FREQUENCY}")

        field = AxisymmetricField.from_radial(radial_grid, lambda r: profile(r) * np.exp(1j * frequency * r))

        if is_resolved(field, momentum_grid):
            members.append(FamilyMember(parameter=frequency, field=field))

    return members


def random_field_family(radial_grid: RadialGrid,
                        count: int,
                        seed: int,
                        l_max: int = 0) -> List[AxisymmetricField]:
    """Sums of two complex Gaussian bumps r^l e^{−r²/(2σ²)} per channel with σ ∈ [0.7, 1.5]."""
    generator = np.random.default_rng(seed)
    family = []

    for _ in range(count):
        field = AxisymmetricField.zeros(radial_grid, l_max)

        for l in range(l_max + 1):
            for _ in range(2):
                coefficient = generator.normal() + 1j * generator.normal()
                field.channels[l] += coefficient * gaussian_profile(generator.uniform(0.7, 1.5), l)(radial_grid.nodes)

        family.append(field)

    return family


def is_resolved(field: AxisymmetricField, momentum_grid: MomentumGrid) -> bool:
    if field.tail_mass() > FAMILY_RESOLUTION_TOLERANCE:
        return False

    spectral = flat_forward(field, momentum_grid)
    outer = momentum_grid.nodes > TAIL_REGION_FRACTION * momentum_grid.k_max
    total = spectral.channel_masses().sum()

    if total == 0:
        return True

    degrees = np.arange(spectral.l_max + 1)
    outer_mass = np.sum(4 * np.pi / (2 * degrees + 1) * (np.abs(spectral.channels[:, outer]) ** 2
                                                         @ momentum_grid.volume_weights[outer]))

    return outer_mass / total <= FAMILY_RESOLUTION_TOLERANCE
