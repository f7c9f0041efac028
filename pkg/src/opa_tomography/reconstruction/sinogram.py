from __future__ import annotations

import logging
import math

import attr
import numpy as np
from scipy.integrate import trapezoid

from ..errors import SinogramError
from ..states import marginal_density
from ..states.models import readonly_array
from .quadrature import QuadratureDistribution, symmetrize

LOG = logging.getLogger(__name__)

DEFAULT_POINTS = 1025
PHASE_TOLERANCE = 1e-9


def _phases_in_half_turn(instance, attribute, value):
    if value.ndim != 1 or value.size == 0:
        raise ValueError(f"'{attribute.name}' must be a non-empty 1-D array")

    if np.any(np.diff(value) <= 0):
        raise ValueError(f"'{attribute.name}' must be strictly increasing")

    if value[0] < 0 or value[-1] >= math.pi:
        raise ValueError(f"'{attribute.name}' must lie in [0, pi)")


def _rows_shape(instance, attribute, value):
    if value.shape != (instance.phases.size, instance.x.size):
        raise ValueError(f"'{attribute.name}' must have shape (len(phases), len(x))")


@attr.s(frozen=True, eq=False)
class Sinogram:
    """Quadrature densities on a shared grid, one row per phase in [0, pi).

    `measured[i]` is False for rows synthesized by symmetry.
    """

    phases: np.ndarray   = attr.ib(converter=readonly_array, validator=_phases_in_half_turn)
    x: np.ndarray        = attr.ib(converter=readonly_array)
    rows: np.ndarray     = attr.ib(converter=readonly_array, validator=_rows_shape)
    measured: np.ndarray = attr.ib(
        default=attr.Factory(lambda self: np.ones(self.phases.size, dtype=bool), takes_self=True),
        converter=lambda value: readonly_array(value).astype(bool),
    )

    @x.validator
    def _check_x(self, attribute, value):
        steps = np.diff(value)

        if value.ndim != 1 or value.size < 3 or np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-9, atol=0):
            raise ValueError("'x' must be a uniform increasing grid")

    def __eq__(self, other):
        if not isinstance(other, Sinogram):
            return NotImplemented

        return all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ('phases', 'x', 'rows', 'measured')
        )

    __hash__ = None

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def half_width(self) -> float:
        return float(self.x[-1])

    def row(self, index: int) -> QuadratureDistribution:
        return QuadratureDistribution(self.phases[index], self.x, self.rows[index])

    def variances(self) -> np.ndarray:
        return np.array([trapezoid(self.x ** 2 * row, self.x) for row in self.rows])

    def support_radius(self, mass: float = 1e-3) -> float:
        return max(self.row(i).support_radius(mass) for i in range(self.phases.size))


def _mirrored(distributions):
    """Add pi - theta for every measured theta in (0, pi) whose partner is missing."""
    phases = [dist.phase for dist in distributions]
    extra = []

    for dist in distributions:
        partner = math.pi - dist.phase

        if dist.phase <= PHASE_TOLERANCE or partner >= math.pi:
            continue

        if any(abs(partner - phase) <= PHASE_TOLERANCE for phase in phases):
            continue

        extra.append(attr.evolve(dist, phase=partner))

    return extra


def build_sinogram(
    distributions,
    *,
    reflection_symmetric: bool = True,
    points: int = DEFAULT_POINTS,
    half_width: float = None,
) -> Sinogram:
    """Stack quadrature distributions into a sinogram on a common uniform grid.

    The measured phases must reach from 0 to pi/2. Inversion symmetry makes
    P_(theta + pi) redundant; for states with W(x, p) = W(x, -p) the rows in
    (pi/2, pi) are copies of P_(pi - theta).
    """
    distributions = sorted(distributions, key=lambda dist: dist.phase)

    if len(distributions) < 2:
        raise SinogramError(f"Angular coverage too small: {len(distributions)} phase(s)")

    phases = np.array([dist.phase for dist in distributions])

    if phases[0] > PHASE_TOLERANCE or phases[-1] < math.pi / 2 - PHASE_TOLERANCE:
        raise SinogramError(
            f"Phases must cover [0, pi/2], got [{phases[0]:.4f}, {phases[-1]:.4f}]"
        )

    if np.any(np.diff(phases) <= 0):
        raise SinogramError("Phases must be distinct")

    measured = [True] * len(distributions)

    if reflection_symmetric:
        extra = _mirrored(distributions)
        distributions = distributions + extra
        measured += [False] * len(extra)
        order = np.argsort([dist.phase for dist in distributions], kind='stable')
        distributions = [distributions[i] for i in order]
        measured = [measured[i] for i in order]

    reach = max(float(np.max(np.abs(dist.evaluation_points()))) for dist in distributions)
    half_width = reach if half_width is None else float(half_width)

    for dist in distributions:
        support = dist.support_radius()

        if support > half_width * (1 + 1e-9):
            raise SinogramError(
                f"Row at phase {dist.phase:.4f} has support {support:.3f} beyond the common grid half-width {half_width:.3f}"
            )

    x = np.linspace(-half_width, half_width, points)
    rows = np.array([symmetrize(_resampled(dist, x)).density for dist in distributions])

    LOG.debug(f"Sinogram with {len(distributions)} rows ({sum(measured)} measured) on {points} points")
    return Sinogram(np.array([dist.phase for dist in distributions]), x, rows, measured)


def _resampled(dist: QuadratureDistribution, x: np.ndarray) -> QuadratureDistribution:
    row = QuadratureDistribution(dist.phase, x, dist.density_at(x))
    integral = row.integral()

    if not integral > 0:
        raise SinogramError(f"Row at phase {dist.phase:.4f} vanishes on the common grid")

    return row.normalized()


def forward_radon(state, phases, x_grid) -> Sinogram:
    """Exact marginals of `state` (a Gaussian state or a Wigner grid) as a sinogram."""
    x_grid = np.asarray(x_grid, dtype=float)
    rows = []

    for theta in phases:
        row = QuadratureDistribution(theta, x_grid, marginal_density(state, theta, x_grid))
        rows.append(symmetrize(row).normalized().density)

    return Sinogram(np.asarray(phases, dtype=float), x_grid, np.array(rows))
