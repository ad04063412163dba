from typing import Optional, Union

import numpy as np

from consts.grid_consts import TRUNCATION_WARNING
from consts.typing_consts import ComplexArray, RadialFunction, RealArray
from exceptions import DomainError, NumericError, ShapeMismatchError
from grids.angular_quadrature import AngularQuadrature, default_angular_nodes, get_angular_quadrature
from grids.axisymmetric_field import AxisymmetricField
from grids.radial_grid import RadialGrid
from tools.logging import logger


def inner_product(f: AxisymmetricField, g: AxisymmetricField) -> complex:
    """∫ f ḡ dx = ∑_l 4π/(2l+1) ∫ f_l ḡ_l r² dr. Missing channels count as zero."""
    _validate_same_grid(f, g)
    l_common = min(f.l_max, g.l_max)
    degrees = np.arange(l_common + 1)
    products = (f.channels[:l_common + 1] * np.conj(g.channels[:l_common + 1])) @ f.grid.volume_weights

    return complex(np.sum(4 * np.pi / (2 * degrees + 1) * products))


def l2_norm(f: AxisymmetricField) -> float:
    return float(np.sqrt(f.mass()))


def lp_norm(f: AxisymmetricField, p: float) -> float:
    quadrature = get_angular_quadrature(default_angular_nodes(f.l_max))
    return collocation_lp_norm(f.to_collocation(quadrature), f.grid, quadrature, p)


def collocation_lp_norm(values: ComplexArray, grid: RadialGrid, quadrature: AngularQuadrature, p: float) -> float:
    """(2π ∫∫ |f|^p r² dr dμ)^{1/p} from samples on the (μ_q, r_i) product grid; p = ∞ is the sample maximum."""
    if not p >= 1:
        raise DomainError(f"L^p norms need p ≥ 1, got {p}")

    magnitudes = np.abs(values)

    if np.isinf(p):
        return float(magnitudes.max(initial=0.0))

    angular_integral = quadrature.weights @ magnitudes ** p
    integral = 2 * np.pi * float(angular_integral @ grid.volume_weights)

    return integral ** (1 / p)


def multiply_fields(f: AxisymmetricField, g: AxisymmetricField, l_max: Optional[int] = None) -> AxisymmetricField:
    """
    Pointwise product on a Gauss–Legendre rule that integrates P_l·f·g exactly, projected back to channels.
    Channels above `l_max` (default L_f + L_g, no truncation) are dropped and their mass recorded.
    """
    _validate_same_grid(f, g)
    full_l_max = f.l_max + g.l_max
    n_mu = max(default_angular_nodes(max(f.l_max, g.l_max)), full_l_max + 1)
    quadrature = get_angular_quadrature(n_mu)
    product_values = f.to_collocation(quadrature) * g.to_collocation(quadrature)
    product = AxisymmetricField.from_collocation(product_values, f.grid, full_l_max, quadrature)

    if l_max is None or l_max >= full_l_max:
        return product

    truncated = product.with_l_max(l_max)
    _log_truncation(truncated)

    return truncated


def multiply_radial_weight(f: AxisymmetricField, weight: Union[RadialFunction, RealArray]) -> AxisymmetricField:
    values = weight(f.grid.nodes) if callable(weight) else np.asarray(weight)
    values = np.broadcast_to(values, f.grid.nodes.shape)

    if not np.all(np.isfinite(values)):
        raise NumericError("Radial weight is not finite on every radial node")

    return AxisymmetricField(f.channels * values[None, :], f.grid, f.dropped_mass)


def cos_theta(f: AxisymmetricField) -> AxisymmetricField:
    """The polar cosine as a field (channel 1 ≡ 1); a multiplier, not an L² function."""
    field = AxisymmetricField.zeros(f.grid, 1)
    field.channels[1] = 1.0

    return field


def _validate_same_grid(f: AxisymmetricField, g: AxisymmetricField) -> None:
    if f.grid != g.grid:
        raise ShapeMismatchError(f"Fields live on different radial grids: {f.grid} vs {g.grid}")


def _log_truncation(field: AxisymmetricField) -> None:
    total = field.mass() + field.dropped_mass

    if total > 0 and field.dropped_mass / total > TRUNCATION_WARNING:
        logger.warning(
            f"Truncated product to L = {field.l_max}, dropping {field.dropped_mass / total:.2e} of its L² mass"
        )
