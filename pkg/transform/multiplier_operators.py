from typing import List, Optional

import numpy as np

from consts.transform_consts import MAX_SOBOLEV_REGULARITY, LAMBDA_LOWER_EDGE, LAMBDA_UPPER_EDGE
from consts.typing_consts import RealArray
from exceptions import DomainError
from grids.angular_quadrature import AngularQuadrature, default_angular_nodes, get_angular_quadrature
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import collocation_lp_norm, lp_norm
from models.littlewood_paley_mode import LittlewoodPaleyMode
from scattering.scattering_table import ScatteringTable
from transform.bumps import cubic_smoothstep, low_pass_bump
from transform.distorted_fourier_transform import get_transform
from transform.dyadic_ladder import DyadicLadder
from transform.multiplier_spec import MultiplierSpec


def apply_multiplier(f: AxisymmetricField, spec: MultiplierSpec, table: ScatteringTable) -> AxisymmetricField:
    """m(D♯)f = inverse(m(k)·forward(f)); radial symbols never mix channels."""
    transform = get_transform(table)
    multiplier = spec.evaluate(table.momentum_grid.nodes)

    return transform.inverse(transform.forward(f).multiply(multiplier))


def littlewood_paley(f: AxisymmetricField,
                     scale: float,
                     table: ScatteringTable,
                     mode: LittlewoodPaleyMode = LittlewoodPaleyMode.BAND,
                     ladder: Optional[DyadicLadder] = None) -> AxisymmetricField:
    ladder = ladder or DyadicLadder()
    ladder.validate_scale(scale)
    spec = MultiplierSpec(symbol=lambda k: ladder.symbol(k, scale, mode))

    return apply_multiplier(f, spec, table)


def sobolev_multiplier(s: float, homogeneous: bool) -> MultiplierSpec:
    if homogeneous:
        return MultiplierSpec(symbol=lambda k: np.asarray(k, dtype=float) ** s)

    return MultiplierSpec(symbol=lambda k: (1 + np.asarray(k, dtype=float) ** 2) ** (s / 2))


def sobolev_norm(f: AxisymmetricField, s: float, p: float, homogeneous: bool, table: ScatteringTable) -> float:
    """‖|D♯|^s f‖_p or ‖⟨D♯⟩^s f‖_p."""
    _validate_exponent(p)

    if abs(s) > MAX_SOBOLEV_REGULARITY:
        raise DomainError(f"Sobolev regularity must satisfy |s| ≤ {MAX_SOBOLEV_REGULARITY}, got {s}")

    if s == 0:
        return lp_norm(f, p)

    return lp_norm(apply_multiplier(f, sobolev_multiplier(s, homogeneous), table), p)


def lambda_symbol(k: RealArray, alpha: float, t: float) -> RealArray:
    """t^{α/2}·φ(√t·k)^α with φ = 1 below 1, 1/k above 2 and a monotone cubic blend between."""
    scaled = np.sqrt(t) * np.asarray(k, dtype=float)
    blend = cubic_smoothstep((scaled - LAMBDA_LOWER_EDGE) / (LAMBDA_UPPER_EDGE - LAMBDA_LOWER_EDGE))
    profile = (1 - blend) + blend / np.maximum(scaled, LAMBDA_LOWER_EDGE)

    return t ** (alpha / 2) * profile ** alpha


def lambda_inverse(f: AxisymmetricField, alpha: float, t: float, table: ScatteringTable) -> AxisymmetricField:
    if alpha < 0:
        raise DomainError(f"Fractional integration order must be non-negative, got {alpha}")

    if not t > 0:
        raise DomainError(f"Fractional integration needs t > 0, got {t}")

    return apply_multiplier(f, MultiplierSpec(symbol=lambda k: lambda_symbol(k, alpha, t)), table)


def band_projections(f: AxisymmetricField,
                     table: ScatteringTable,
                     ladder: Optional[DyadicLadder] = None) -> List[AxisymmetricField]:
    """P_N f for every N of the ladder, sharing one forward transform."""
    ladder = ladder or DyadicLadder()
    transform = get_transform(table)
    spectral = transform.forward(f)
    k = table.momentum_grid.nodes

    return [transform.inverse(spectral.multiply(ladder.symbol(k, scale))) for scale in ladder.scales]


def square_function_values(f: AxisymmetricField,
                           table: ScatteringTable,
                           quadrature: AngularQuadrature,
                           s: float = 0.0,
                           ladder: Optional[DyadicLadder] = None) -> RealArray:
    ladder = ladder or DyadicLadder()
    projections = band_projections(f, table, ladder)
    squares = sum(
        scale ** (2 * s) * np.abs(projection.to_collocation(quadrature)) ** 2
        for scale, projection in zip(ladder.scales, projections)
    )

    return np.sqrt(squares)


def square_function(f: AxisymmetricField,
                    table: ScatteringTable,
                    ladder: Optional[DyadicLadder] = None) -> AxisymmetricField:
    """(∑_N |P_N f|²)^{1/2} on the collocation grid, projected back onto the channels of f."""
    quadrature = get_angular_quadrature(default_angular_nodes(f.l_max))
    values = square_function_values(f, table, quadrature, ladder=ladder)

    return AxisymmetricField.from_collocation(values, f.grid, f.l_max, quadrature)


def square_function_norm(f: AxisymmetricField,
                         s: float,
                         p: float,
                         table: ScatteringTable,
                         ladder: Optional[DyadicLadder] = None) -> float:
    """‖(∑_N N^{2s}|P_N f|²)^{1/2}‖_p, evaluated on the collocation samples."""
    _validate_exponent(p)
    quadrature = get_angular_quadrature(default_angular_nodes(f.l_max))
    values = square_function_values(f, table, quadrature, s, ladder)

    return collocation_lp_norm(values, f.grid, quadrature, p)


def maximal_modulated_values(f: AxisymmetricField,
                             n: int,
                             table: ScatteringTable,
                             quadrature: AngularQuadrature,
                             ladder: Optional[DyadicLadder] = None) -> RealArray:
    ladder = ladder or DyadicLadder()
    transform = get_transform(table)
    spectral = transform.forward(f)
    k = table.momentum_grid.nodes
    supremum = np.zeros((quadrature.n_mu, f.grid.n_r))

    for scale in ladder.scales:
        spec = MultiplierSpec(symbol=low_pass_bump_at(scale), modulation=n, scale=scale)
        projection = transform.inverse(spectral.multiply(spec.evaluate(k)))
        supremum = np.maximum(supremum, np.abs(projection.to_collocation(quadrature)))

    return supremum


def maximal_modulated(f: AxisymmetricField,
                      n: int,
                      table: ScatteringTable,
                      ladder: Optional[DyadicLadder] = None) -> AxisymmetricField:
    """sup_N |e^{2πi n k/(KN)} Ψ(k/N)(D♯) f| pointwise on the collocation grid, projected back."""
    quadrature = get_angular_quadrature(default_angular_nodes(f.l_max))
    values = maximal_modulated_values(f, n, table, quadrature, ladder)

    return AxisymmetricField.from_collocation(values, f.grid, f.l_max, quadrature)


def maximal_modulated_norm(f: AxisymmetricField,
                           n: int,
                           p: float,
                           table: ScatteringTable,
                           ladder: Optional[DyadicLadder] = None) -> float:
    quadrature = get_angular_quadrature(default_angular_nodes(f.l_max))
    return collocation_lp_norm(maximal_modulated_values(f, n, table, quadrature, ladder), f.grid, quadrature, p)


def low_pass_bump_at(scale: float):
    return lambda k: low_pass_bump(np.asarray(k) / scale)


def _validate_exponent(p: float) -> None:
    if not 1 < p < np.inf:
        raise DomainError(f"Exponent p must lie in (1, ∞), got {p}")
