from dataclasses import dataclass
from typing import Tuple

import numpy as np

from consts.scattering_consts import MAX_INTEGRATION_STEP, STAGE_OFFSET, FIRST_MATCHING_OFFSET, \
    SECOND_MATCHING_OFFSET, MATCHING_CONDITION_LIMIT
from consts.typing_consts import RealArray
from exceptions import ConfigurationError, DomainError, NumericError
from grids.radial_grid import RadialGrid
from scattering.potential import Potential
from scattering.riccati_bessel import riccati_j, riccati_j_with_derivative, riccati_y_with_derivative, \
    matched_solution
from utils.numeric_utils import ensure_finite


@dataclass
class RadialSolution:
    solutions: RealArray
    phase_shifts: RealArray
    matching_residuals: RealArray


@dataclass
class _IntegrationPath:
    starts: RealArray
    steps: RealArray
    record_after: RealArray


class RadialSolver:
    """
    Outward integration of −u'' + (l(l+1)/r² + V)u = k²u for a whole momentum vector at once.
    Classical RK4 on a mesh made of the radial nodes, the potential breakpoints and the matching radii, each gap
    split into equal sub-steps no longer than MAX_INTEGRATION_STEP; V is sampled strictly inside each sub-step.
    """

    def __init__(self, potential: Potential, grid: RadialGrid):
        self._potential = potential
        self._grid = grid

    @property
    def matching_radii(self) -> Tuple[float, float]:
        support_radius = self._potential.support_radius
        first_radius = support_radius + FIRST_MATCHING_OFFSET
        second_radius = support_radius + SECOND_MATCHING_OFFSET

        if second_radius > self._grid.r_max:
            raise ConfigurationError(
                f"Matching radius {second_radius:.3f} lies beyond r_max = {self._grid.r_max}; the potential support "
                f"R_V = {support_radius:.3f} needs a larger box"
            )

        return first_radius, second_radius

    def solve_channel(self, l: int, momenta: RealArray) -> RadialSolution:
        momenta = np.asarray(momenta, dtype=float)
        nodes = self._grid.nodes

        if self._potential.is_zero:
            return self._solve_free_channel(l, momenta)

        matching_radii = np.array(self.matching_radii)
        inner = nodes < matching_radii[-1]
        values, derivatives = self.integrate(l, momenta, np.concatenate([nodes[inner], matching_radii]))
        coefficients, residuals = self._match(l, momenta, matching_radii, values[-2:], derivatives[-2:])
        amplitudes, phase_shifts = self._to_amplitude_and_phase(coefficients)

        solutions = np.empty((momenta.size, nodes.size))
        solutions[:, inner] = values[:-2].T / amplitudes[:, None]
        solutions[:, ~inner] = matched_solution(l, np.outer(momenta, nodes[~inner]), phase_shifts[:, None])
        ensure_finite(solutions, f"Radial solutions of channel l={l}")

        return RadialSolution(solutions=solutions, phase_shifts=phase_shifts, matching_residuals=residuals)

    def solve_zero_energy(self, l: int, radius: float) -> Tuple[RealArray, float, float]:
        """Regular k = 0 solution on the nodes below `radius`, plus its value and slope at `radius`."""
        nodes = self._grid.nodes
        record_radii = np.concatenate([nodes[nodes < radius], [radius]])
        values, derivatives = self.integrate(l, np.zeros(1), record_radii)

        return values[:-1, 0], float(values[-1, 0]), float(derivatives[-1, 0])

    def integrate(self, l: int, momenta: RealArray, record_radii: RealArray) -> Tuple[RealArray, RealArray]:
        """Values and derivatives, shape (len(record_radii), n_k), of the solution started as r^{l+1}(1 + a₂r²)."""
        start = self._grid.nodes[0]
        unique_radii = np.unique(np.asarray(record_radii, dtype=float))

        if unique_radii[0] < start:
            raise DomainError(f"Cannot record the solution at r={unique_radii[0]} below the first node {start}")

        path = self._build_path(start, unique_radii)
        squared_momenta = momenta ** 2
        stage_radii = np.stack([path.starts, path.starts + 0.5 * path.steps, path.starts + path.steps])
        sampling_radii = np.stack([
            path.starts + STAGE_OFFSET * path.steps,
            path.starts + 0.5 * path.steps,
            path.starts + (1 - STAGE_OFFSET) * path.steps
        ])
        effective = l * (l + 1) / stage_radii ** 2 + self._potential(sampling_radii)

        leading = (self._potential(np.array([start]))[0] - squared_momenta) / (2 * (2 * l + 3))
        u = start ** (l + 1) * (1 + leading * start ** 2)
        p = (l + 1) * start ** l + (l + 3) * leading * start ** (l + 2)
        values, derivatives = [], []

        if unique_radii[0] == start:
            values.append(u)
            derivatives.append(p)

        for index in range(path.steps.size):
            h = path.steps[index]
            q_start = effective[0, index] - squared_momenta
            q_middle = effective[1, index] - squared_momenta
            q_end = effective[2, index] - squared_momenta

            k1u, k1p = p, q_start * u
            k2u, k2p = p + 0.5 * h * k1p, q_middle * (u + 0.5 * h * k1u)
            k3u, k3p = p + 0.5 * h * k2p, q_middle * (u + 0.5 * h * k2u)
            k4u, k4p = p + h * k3p, q_end * (u + h * k3u)
            u = u + h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u)
            p = p + h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p)

            if path.record_after[index]:
                values.append(u)
                derivatives.append(p)

        positions = np.searchsorted(unique_radii, record_radii)
        return np.array(values)[positions], np.array(derivatives)[positions]

    def _build_path(self, start: float, record_radii: RealArray) -> _IntegrationPath:
        end = record_radii[-1]
        breakpoints = [point for point in self._potential.breakpoints if start < point < end]
        mesh = np.unique(np.concatenate([[start], record_radii, breakpoints]))
        recorded = set(record_radii[record_radii > start].tolist())
        starts, steps, record_after = [], [], []

        for left, right in zip(mesh[:-1], mesh[1:]):
            count = max(1, int(np.ceil((right - left) / MAX_INTEGRATION_STEP - 1e-9)))
            step = (right - left) / count
            starts.extend(left + step * np.arange(count))
            steps.extend([step] * count)
            record_after.extend([False] * (count - 1) + [right in recorded])

        return _IntegrationPath(np.array(starts), np.array(steps), np.array(record_after, dtype=bool))

    @staticmethod
    def _match(l: int,
               momenta: RealArray,
               radii: RealArray,
               values: RealArray,
               derivatives: RealArray) -> Tuple[RealArray, RealArray]:
        """
        Least-squares fit of a·ĵ_l + b·n̂_l to (u, u'/k) at both matching radii. Columns are scaled to unit norm
        before the 2×2 normal equations are solved, which keeps small k·R at high l well conditioned.
        """
        rows, targets = [], []

        for radius, value, derivative in zip(radii, values, derivatives):
            regular, regular_slope = riccati_j_with_derivative(l, momenta * radius)
            irregular, irregular_slope = riccati_y_with_derivative(l, momenta * radius)
            rows.extend([np.stack([regular, irregular], axis=-1), np.stack([regular_slope, irregular_slope], axis=-1)])
            targets.extend([value, derivative / momenta])

        design = np.stack(rows, axis=1)
        target = np.stack(targets, axis=1)
        scales = np.linalg.norm(design, axis=1)
        scaled = design / scales[:, None, :]
        gram = np.einsum('kij,kil->kjl', scaled, scaled)
        condition = np.linalg.cond(gram)

        if np.any(condition > MATCHING_CONDITION_LIMIT):
            worst = momenta[np.argmax(condition)]
            raise NumericError(
                f"Phase-shift matching is singular at k={worst:.4g} (condition {condition.max():.2e}); "
                f"change n_k or the potential width so that k·R avoids the degenerate configuration"
            )

        right_hand_side = np.einsum('kij,ki->kj', scaled, target)
        coefficients = np.linalg.solve(gram, right_hand_side[..., None])[..., 0] / scales
        fitted = np.einsum('kij,kj->ki', design, coefficients)
        residuals = np.linalg.norm(fitted - target, axis=1) / np.linalg.norm(target, axis=1)

        return coefficients, residuals

    @staticmethod
    def _to_amplitude_and_phase(coefficients: RealArray) -> Tuple[RealArray, RealArray]:
        """u = A(cos δ·ĵ − sin δ·n̂) with δ folded into (−π/2, π/2]; folding flips the sign of A."""
        regular, irregular = coefficients[:, 0], coefficients[:, 1]
        amplitudes = np.hypot(regular, irregular)
        phase_shifts = np.arctan2(-irregular, regular)
        upper = phase_shifts > np.pi / 2
        lower = phase_shifts <= -np.pi / 2
        phase_shifts = phase_shifts - np.pi * upper + np.pi * lower

        return np.where(upper | lower, -amplitudes, amplitudes), phase_shifts

    def _solve_free_channel(self, l: int, momenta: RealArray) -> RadialSolution:
        solutions = riccati_j(l, np.outer(momenta, self._grid.nodes))
        zeros = np.zeros(momenta.size)

        return RadialSolution(solutions=solutions, phase_shifts=zeros, matching_residuals=zeros.copy())


def solve_radial(potential: Potential, k: float, l: int, grid: RadialGrid) -> Tuple[RealArray, float]:
    if not k > 0:
        raise DomainError(f"Radial solutions need k > 0, got {k}")

    if l < 0:
        raise DomainError(f"Angular momentum must be non-negative, got {l}")

    solution = RadialSolver(potential, grid).solve_channel(l, np.array([k]))
    return solution.solutions[0], float(solution.phase_shifts[0])
