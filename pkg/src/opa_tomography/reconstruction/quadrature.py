"""Quadrature distributions recovered from photon-number statistics.

The calibration scale s = 4 <N_vac> (dark corrected) stands in for
eta_det e^(2G), so only ratios N / <N_vac> ever enter and neither the gain
nor the detection efficiency has to be known.
"""
from __future__ import annotations

import math
from typing import Optional

import attr
from attr.validators import optional
import numpy as np
from scipy import stats
from scipy.integrate import cumulative_trapezoid, trapezoid

from .. import VACUUM_VARIANCE
from ..errors import ReconstructionError
from ..states.models import readonly_array
from .histograms import PhotonHistogram

SUPPORT_MASS = 1e-3


def _symmetric_axis(instance, attribute, value):
    if value.ndim != 1 or value.size < 2 or np.any(np.diff(value) <= 0):
        raise ValueError(f"'{attribute.name}' must be a strictly increasing 1-D grid")

    if not np.allclose(value, -value[::-1], rtol=1e-12, atol=1e-12):
        raise ValueError(f"'{attribute.name}' must be symmetric about 0")


def _matches_x(instance, attribute, value):
    if value.shape != instance.x.shape:
        raise ValueError(f"'{attribute.name}' must have the shape of 'x'")

    if np.any(value < 0):
        raise ValueError(f"'{attribute.name}' must be non-negative")


@attr.s(frozen=True, eq=False)
class QuadratureDistribution:
    """Even probability density P(x_theta) on a grid symmetric about zero.

    Distributions recovered from a histogram also keep the bin edges in |x|
    and the bin masses, which give exact moments and a CDF that is exact at
    every edge.
    """

    phase: float                     = attr.ib(converter=float)
    x: np.ndarray                    = attr.ib(converter=readonly_array, validator=_symmetric_axis)
    density: np.ndarray              = attr.ib(converter=readonly_array, validator=_matches_x)
    abs_edges: Optional[np.ndarray]  = attr.ib(default=None, converter=attr.converters.optional(readonly_array))
    abs_masses: Optional[np.ndarray] = attr.ib(default=None, converter=attr.converters.optional(readonly_array))

    @abs_masses.validator
    def _check_bins(self, attribute, value):
        if (value is None) != (self.abs_edges is None):
            raise ValueError("'abs_edges' and 'abs_masses' go together")

        if value is not None and value.shape != (self.abs_edges.size - 1,):
            raise ValueError("'abs_masses' must hold one entry per bin")

    @property
    def is_binned(self) -> bool:
        return self.abs_edges is not None

    @property
    def variance(self) -> float:
        if self.is_binned:
            a, b = self.abs_edges[:-1], self.abs_edges[1:]
            return float(np.sum(self.abs_masses * (a * a + a * b + b * b) / 3))

        return float(trapezoid(self.x ** 2 * self.density, self.x) / trapezoid(self.density, self.x))

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    def integral(self) -> float:
        if self.is_binned:
            half = self.density.size // 2
            return float(np.sum(2 * self.density[half:] * np.diff(self.abs_edges)))

        return float(trapezoid(self.density, self.x))

    def cdf(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=float)

        if self.is_binned:
            cumulative = np.concatenate(([0.0], np.cumsum(self.abs_masses)))
            F_abs = np.interp(np.abs(points), self.abs_edges, cumulative)
            return 0.5 + 0.5 * np.sign(points) * F_abs

        cumulative = cumulative_trapezoid(self.density, self.x, initial=0)
        return np.interp(points, self.x, cumulative / cumulative[-1])

    def evaluation_points(self) -> np.ndarray:
        """Points where the CDF is exact: the signed bin edges, or the grid itself."""
        if self.is_binned:
            return np.concatenate((-self.abs_edges[:0:-1], self.abs_edges))

        return np.asarray(self.x)

    def density_at(self, points) -> np.ndarray:
        return np.interp(points, self.x, self.density, left=0.0, right=0.0)

    def support_radius(self, mass: float = SUPPORT_MASS) -> float:
        """Smallest |x| leaving less than `mass` of the probability outside."""
        points = self.evaluation_points()
        positive = points[points >= 0]
        outside = 2 * (1 - self.cdf(positive))
        inside = positive[outside < mass]
        return float(inside[0]) if inside.size else float(positive[-1])

    def normalized(self) -> QuadratureDistribution:
        return attr.evolve(self, density=self.density / self.integral())


def symmetrize(dist: QuadratureDistribution) -> QuadratureDistribution:
    """Replace P(x) with (P(x) + P(-x)) / 2; applying it twice changes nothing."""
    return attr.evolve(dist, density=0.5 * (dist.density + dist.density[::-1]))


def calibration_scale(n_vac_mean: float) -> float:
    """s = N / x^2, estimated from the dark-corrected amplified-vacuum mean."""
    if not n_vac_mean > 0:
        raise ReconstructionError(f"Dark-corrected vacuum mean must be positive, got {n_vac_mean}")

    return n_vac_mean / VACUUM_VARIANCE


def to_quadrature_distribution(hist: PhotonHistogram, n_vac_mean: float) -> QuadratureDistribution:
    """Change of variables N -> |x| = sqrt(N / s) applied bin by bin.

    Each bin is evaluated at its midpoint in |x|, where 2 s |x| P(N) equals
    the bin mass divided by the bin width in |x|; bin 0 is the half-bin
    [0, sqrt(N_1 / s)], so the N -> 0 singularity never enters.
    """
    s = calibration_scale(n_vac_mean)
    edges = np.sqrt(hist.bin_edges / s)
    midpoints = 0.5 * (edges[:-1] + edges[1:])

    P_abs = 2 * s * midpoints * hist.density
    P_abs /= np.sum(P_abs * np.diff(edges))

    x = np.concatenate((-midpoints[::-1], midpoints))
    density = 0.5 * np.concatenate((P_abs[::-1], P_abs))
    return QuadratureDistribution(hist.phase, x, density, abs_edges=edges, abs_masses=hist.masses)


def quadrature_samples(records, n_vac_mean: float, dark_mean: float = 0.0) -> np.ndarray:
    """Sample-wise variant: every record gives the mirrored pair +-sqrt(N_i / s)."""
    s = calibration_scale(n_vac_mean)
    x = np.sqrt(np.maximum(np.asarray(records, dtype=float) - dark_mean, 0.0) / s)
    return np.concatenate((-x[::-1], x))


def gaussian_distribution(phase: float, variance: float, x_grid) -> QuadratureDistribution:
    if not variance > 0:
        raise ReconstructionError(f"Quadrature variance must be positive, got {variance} at phase {phase:.4f}")

    x_grid = np.asarray(x_grid, dtype=float)
    dist = QuadratureDistribution(phase, x_grid, stats.norm.pdf(x_grid, scale=math.sqrt(variance)))
    return symmetrize(dist).normalized()


def fitted_quadrature_distribution(records, n_vac_mean: float, dark_mean: float, theta: float, x_grid) -> QuadratureDistribution:
    """Zero-mean Gaussian with the moment-matched variance (<N_theta> - dark) / s."""
    s = calibration_scale(n_vac_mean)
    variance = (float(np.mean(records)) - dark_mean) / s
    return gaussian_distribution(theta, variance, x_grid)


def recover_quadrature_density(N, P_N, G: float) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of the amplifier mapping with a known gain: P(x) = e^G sqrt(N) P(N) at x = e^-G sqrt(N)."""
    N = np.asarray(N, dtype=float)
    root = np.sqrt(N)
    return math.exp(-G) * root, math.exp(G) * root * np.asarray(P_N, dtype=float)
