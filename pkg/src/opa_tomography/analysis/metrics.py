"""Figures of merit: squeezing in dB, purity, fidelity and distribution distances."""
from __future__ import annotations

import logging
import math
from typing import Optional

import attr
import numpy as np
from scipy.interpolate import RegularGridInterpolator

from .. import VACUUM_VARIANCE
from ..errors import ExtentTooSmallError, UnnormalizedGridError, UnphysicalStateError
from ..reconstruction import variance_curve
from ..states import StateSpec, WignerGrid, wigner_function
from .modes import MIN_RECORDS, ModeFit, fit_mode_number

LOG = logging.getLogger(__name__)

PURITY_TOLERANCE = 1e-3
FIDELITY_TOLERANCE = 1e-2
NORMALIZATION_TOLERANCE = 1e-3
TARGET_MASS_TOLERANCE = 1e-2


def squeezing_db(variance_ratio: float) -> float:
    if not variance_ratio > 0:
        raise ValueError(f"Variance ratio must be positive, got {variance_ratio}")

    return 10 * math.log10(variance_ratio)


def antisqueezing_db(a: float, d: float) -> float:
    return squeezing_db(a + d)


def purity_gaussian(delta_x0: float, delta_x_pi2: float, *, strict: bool = False) -> float:
    """Vacuum variance over the product of the principal-axis standard deviations."""
    if not (delta_x0 > 0 and delta_x_pi2 > 0):
        raise ValueError("Standard deviations must be positive")

    purity = VACUUM_VARIANCE / (delta_x0 * delta_x_pi2)
    _check_purity(purity, strict)
    return purity


def _check_purity(purity: float, strict: bool):
    if purity <= 1 + PURITY_TOLERANCE:
        return

    if strict:
        raise UnphysicalStateError(quantity='purity', value=purity)

    LOG.warning(f"Purity {purity:.4f} exceeds 1; the reconstruction is unphysical")


def _require_normalized(grid: WignerGrid):
    integral = grid.integrate()

    if abs(integral - 1) > NORMALIZATION_TOLERANCE:
        raise UnnormalizedGridError(integral=integral)


def purity_grid(grid: WignerGrid, *, strict: bool = False) -> float:
    """pi * integral of W^2, one for any pure state."""
    _require_normalized(grid)
    purity = math.pi * grid.integrate(np.square(grid.values))
    _check_purity(purity, strict)
    return purity


def _target_values(grid: WignerGrid, target) -> np.ndarray:
    """Target W on the axes of `grid`; grids on other axes are interpolated."""
    if isinstance(target, StateSpec):
        values = wigner_function(target)(*grid.meshgrid())
        mass = grid.integrate(values)

        if 1 - mass > TARGET_MASS_TOLERANCE:
            raise ExtentTooSmallError(extent=grid.extent, mass_outside=1 - mass)

        return values

    if np.array_equal(target.x, grid.x) and np.array_equal(target.p, grid.p):
        return np.asarray(target.values)

    interpolator = RegularGridInterpolator((target.x, target.p), target.values, bounds_error=False, fill_value=0.0)
    X, P = grid.meshgrid()
    return interpolator(np.stack((X, P), axis=-1))


def fidelity_to_pure(grid: WignerGrid, target: StateSpec) -> float:
    """Overlap pi * integral of W_rec W_target, the fidelity when the target is pure."""
    _require_normalized(grid)
    fidelity = math.pi * grid.integrate(grid.values * _target_values(grid, target))

    if fidelity > 1 + FIDELITY_TOLERANCE:
        LOG.warning(f"Fidelity {fidelity:.4f} exceeds 1")

    return float(np.clip(fidelity, 0.0, 1 + FIDELITY_TOLERANCE))


def normalized_overlap(grid: WignerGrid, target) -> float:
    """Integral of W1 W2 over the geometric mean of the integrals of W1^2 and W2^2."""
    target_values = _target_values(grid, target)
    cross = grid.integrate(grid.values * target_values)
    return cross / math.sqrt(grid.integrate(np.square(grid.values)) * grid.integrate(np.square(target_values)))


def gaussian_fidelity(cov1, cov2) -> float:
    """Uhlmann fidelity of two zero-mean single-mode Gaussian states."""
    cov1, cov2 = np.asarray(cov1, dtype=float), np.asarray(cov2, dtype=float)
    delta = 4 * np.linalg.det(cov1 + cov2)
    mixedness = (16 * np.linalg.det(cov1) - 1) * (16 * np.linalg.det(cov2) - 1) / 4
    mixedness = max(mixedness, 0.0)
    return float(1 / (math.sqrt(delta + mixedness) - math.sqrt(mixedness)))


def ks_statistic(dist, cdf) -> float:
    """Largest CDF distance, taken where the distribution's own CDF is exact."""
    points = dist.evaluation_points()
    return float(np.max(np.abs(dist.cdf(points) - cdf(points))))


def grid_quadrature_std(grid: WignerGrid, theta: float) -> float:
    """Standard deviation of x_theta from the second moment of the (zero-mean) grid."""
    X, P = grid.meshgrid()
    x_theta = X * math.cos(theta) + P * math.sin(theta)
    return math.sqrt(grid.integrate(x_theta ** 2 * grid.values) / grid.integrate())


@attr.s(frozen=True)
class StateMetrics:
    squeezing_db: float            = attr.ib(converter=float)
    antisqueezing_db: float        = attr.ib(converter=float)
    squeezing_error_db: float      = attr.ib(converter=float)
    antisqueezing_error_db: float  = attr.ib(converter=float)
    delta_x0: float                = attr.ib(converter=float)
    delta_x_pi2: float             = attr.ib(converter=float)
    purity: float                  = attr.ib(converter=float)
    purity_grid: float             = attr.ib(converter=float)
    fidelity: float                = attr.ib(converter=float)
    overlap: float                 = attr.ib(converter=float)
    mode_number: Optional[float]   = attr.ib(default=None, converter=attr.converters.optional(float))

    @antisqueezing_db.validator
    def _ordered(self, attribute, value):
        if self.squeezing_db > value:
            raise ValueError("'squeezing_db' must not exceed 'antisqueezing_db'")

    def to_dict(self) -> dict[str, str]:
        return {key: 'none' if value is None else repr(value) for key, value in attr.asdict(self).items()}

    def summary_line(self) -> str:
        return ' '.join(f'{key}={value}' for key, value in self.to_dict().items())


def _db_error(ratio: float, error: float) -> float:
    return 10 / math.log(10) * error / ratio


def analyze(sample_set, grid: WignerGrid, curve=None) -> StateMetrics:
    """Variance-curve squeezing, reconstruction purity and fidelity to the ideal input state."""
    config = sample_set.config

    if curve is None:
        curve = variance_curve(sample_set)

    low, high = curve.min_ratio, curve.max_ratio
    delta_x0 = grid_quadrature_std(grid, 0.0)
    delta_x_pi2 = grid_quadrature_std(grid, math.pi / 2)

    mode: Optional[ModeFit] = None

    if sample_set.vacuum_records is not None and sample_set.vacuum_records.size >= MIN_RECORDS:
        mode = fit_mode_number(sample_set.vacuum_records, config.detector.dark_mean, config.detector.dark_std)

    return StateMetrics(
        squeezing_db=squeezing_db(low),
        antisqueezing_db=squeezing_db(high),
        squeezing_error_db=_db_error(low, curve.min_ratio_error),
        antisqueezing_error_db=_db_error(high, curve.max_ratio_error),
        delta_x0=delta_x0,
        delta_x_pi2=delta_x_pi2,
        purity=purity_gaussian(delta_x0, delta_x_pi2),
        purity_grid=purity_grid(grid),
        fidelity=fidelity_to_pure(grid, config.state),
        overlap=normalized_overlap(grid, config.state),
        mode_number=None if mode is None else mode.mu,
    )
