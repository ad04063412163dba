from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss, legvander

from consts.grid_consts import EXTRA_ANGULAR_NODES
from consts.typing_consts import RealArray


@dataclass(frozen=True)
class AngularQuadrature:
    """Gauss–Legendre rule in μ = cosθ, exact for polynomials of degree ≤ 2·n_mu − 1."""
    n_mu: int

    @cached_property
    def _rule(self):
        return leggauss(self.n_mu)

    @property
    def nodes(self) -> RealArray:
        return self._rule[0]

    @property
    def weights(self) -> RealArray:
        return self._rule[1]

    def legendre_matrix(self, l_max: int) -> RealArray:
        return legvander(self.nodes, l_max)

    def projection_matrix(self, l_max: int) -> RealArray:
        """Rows l: (2l + 1)/2 · ω_q P_l(μ_q)."""
        degrees = np.arange(l_max + 1)
        return 0.5 * (2 * degrees[:, None] + 1) * (self.legendre_matrix(l_max).T * self.weights[None, :])


@lru_cache
def get_angular_quadrature(n_mu: int) -> AngularQuadrature:
    return AngularQuadrature(n_mu)


def default_angular_nodes(l_max: int) -> int:
    return 2 * l_max + EXTRA_ANGULAR_NODES
